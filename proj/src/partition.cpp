#include "kroncoeff/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "kroncoeff/errors.hpp"

namespace kroncoeff {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw input_error("partition parts must be positive, got " +
                              std::to_string(parts_[i]));
        }
        if (i > 0 && parts_[i - 1] < parts_[i]) {
            throw input_error("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos == text.size()) {
        return Partition{};
    }
    while (true) {
        skip_spaces();
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            throw input_error("cannot parse partition \"" + std::string(text) + "\"");
        }
        parts.push_back(value);
        pos = static_cast<size_t>(ptr - text.data());
        skip_spaces();
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw input_error("cannot parse partition \"" + std::string(text) + "\"");
        }
        ++pos;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(p.part(0)), 0);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) {
            ++cols[static_cast<size_t>(j)];
        }
    }
    return Partition(std::move(cols));
}

Partition union_of(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        parts[static_cast<size_t>(i)] = std::max(a.part(i), b.part(i));
    }
    return Partition(std::move(parts));
}

Partition intersect_of(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        parts[static_cast<size_t>(i)] = std::min(a.part(i), b.part(i));
    }
    return Partition(std::move(parts));
}

Partition add(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        parts[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    }
    return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > outer.part(i)) return false;
    }
    return true;
}

BigCount centralizer_order(const Partition& mu) {
    std::map<int, unsigned long> mult;
    for (int part : mu.parts()) ++mult[part];
    BigCount z = 1;
    for (auto [part, m] : mult) {
        for (unsigned long j = 0; j < m; ++j) z *= part;
        z *= factorial(m);
    }
    return z;
}

namespace {

void emit_partitions(int64_t remaining, int max_part, int slots_left,
                     std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots_left == 0) return;
    // largest feasible first part gives decreasing lexicographic order
    int hi = static_cast<int>(std::min<int64_t>(max_part, remaining));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<int64_t>(p) * slots_left < remaining) break;
        acc.push_back(p);
        emit_partitions(remaining - p, p, slots_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int64_t n, PartitionBounds bounds) {
    if (n < 0) throw input_error("partitions_of: n must be nonnegative");
    int max_part = bounds.max_part.value_or(n > 0 ? static_cast<int>(n) : 0);
    int max_len = bounds.max_length.value_or(n > 0 ? static_cast<int>(n) : 0);
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (max_part <= 0 || max_len <= 0) return out;
    std::vector<int> acc;
    emit_partitions(n, max_part, max_len, acc, out);
    return out;
}

} // namespace kroncoeff
