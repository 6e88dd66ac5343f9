#include "kroncoeff/characters.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "kroncoeff/errors.hpp"

namespace kroncoeff {

namespace {

std::string suffix_str(const std::vector<int>& type, size_t idx) {
    std::string out;
    for (size_t i = idx; i < type.size(); ++i) {
        if (i > idx) out += ',';
        out += std::to_string(type[i]);
    }
    return out;
}

} // namespace

BigInt CharTable::chi(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw input_error("chi: |lambda| = " + std::to_string(lambda.size()) +
                          " but |mu| = " + std::to_string(mu.size()));
    }
    return chi_rec(lambda, mu.parts(), 0);
}

// Border strips of length r removable from the shape correspond to first
// column hook lengths beta_i = part_i + (L-1-i) that can drop by r without
// colliding; the number of hook lengths jumped over is the strip height
// minus one and carries the sign.
BigInt CharTable::chi_rec(const Partition& shape, const std::vector<int>& type, size_t idx) {
    if (shape.empty()) return 1;

    const std::string key = shape.str() + "|" + suffix_str(type, idx);
    Shard& shard = shard_for(key);
    {
        std::lock_guard<std::mutex> guard(shard.lock);
        auto it = shard.map.find(key);
        if (it != shard.map.end()) return it->second;
    }

    const int strip = type[idx];
    const int len = shape.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        beta[static_cast<size_t>(i)] = shape.part(i) + (len - 1 - i);
    }

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[static_cast<size_t>(i)] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

        int passed = 0;
        for (int j = 0; j < len; ++j) {
            if (j != i && beta[static_cast<size_t>(j)] > target &&
                beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) {
                ++passed;
            }
        }

        std::vector<int> next = beta;
        next[static_cast<size_t>(i)] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        std::vector<int> parts(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j) {
            parts[static_cast<size_t>(j)] = next[static_cast<size_t>(j)] - (len - 1 - j);
        }
        Partition smaller(std::move(parts));

        BigInt term = chi_rec(smaller, type, idx + 1);
        if (passed % 2) {
            total -= term;
        } else {
            total += term;
        }
    }

    std::lock_guard<std::mutex> guard(shard.lock);
    shard.map.emplace(key, total);
    return total;
}

CharTable::Shard& CharTable::shard_for(const std::string& key) {
    return shards_[std::hash<std::string>{}(key) % shard_count];
}

void CharTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open character cache \"" + path + "\"");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto first = line.find('|');
        auto second = line.find('|', first == std::string::npos ? first : first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            throw input_error("malformed character cache record: " + line);
        }
        std::string key = line.substr(0, second);
        Shard& shard = shard_for(key);
        std::lock_guard<std::mutex> guard(shard.lock);
        shard.map.emplace(std::move(key), BigInt(line.substr(second + 1)));
    }
}

void CharTable::save(const std::string& path) const {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const Shard& shard : shards_) {
        std::lock_guard<std::mutex> guard(shard.lock);
        rows.reserve(rows.size() + shard.map.size());
        for (const auto& [key, value] : shard.map) {
            rows.emplace_back(key, value.get_str());
        }
    }
    std::sort(rows.begin(), rows.end());
    std::ofstream out(path);
    if (!out) throw input_error("cannot write character cache \"" + path + "\"");
    for (const auto& [key, value] : rows) {
        out << key << '|' << value << '\n';
    }
}

size_t CharTable::entries() const {
    size_t total = 0;
    for (const Shard& shard : shards_) {
        std::lock_guard<std::mutex> guard(shard.lock);
        total += shard.map.size();
    }
    return total;
}

void CharTable::clear() {
    for (Shard& shard : shards_) {
        std::lock_guard<std::mutex> guard(shard.lock);
        shard.map.clear();
    }
}

CharTable& global_char_table() {
    static CharTable table;
    return table;
}

BigInt chi(const Partition& lambda, const Partition& mu) {
    return global_char_table().chi(lambda, mu);
}

BigCount subset_count(const std::vector<int64_t>& r, int64_t m) {
    if (m < 0) return 0;
    int64_t total = std::accumulate(r.begin(), r.end(), int64_t{0});
    if (m > total) return 0;
    std::vector<BigCount> dp(static_cast<size_t>(m) + 1);
    dp[0] = 1;
    for (int64_t item : r) {
        if (item <= 0) throw input_error("subset_count: entries must be positive");
        for (int64_t s = m; s >= item; --s) {
            dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - item)];
        }
    }
    return dp[static_cast<size_t>(m)];
}

BigInt chi_two_row(int64_t n, int64_t k, const Partition& nu) {
    if (nu.size() != n) {
        throw input_error("chi_two_row: |nu| must equal n");
    }
    if (k < 0 || 2 * k > n) {
        throw input_error("chi_two_row: need 0 <= k <= n/2");
    }
    std::vector<int64_t> parts(nu.parts().begin(), nu.parts().end());
    BigInt value = subset_count(parts, k);
    if (k > 0) value -= subset_count(parts, k - 1);
    return value;
}

CharPInstance knapsack_to_charp(int64_t k, const std::vector<int64_t>& a) {
    int64_t total = 0;
    for (int64_t x : a) {
        if (x <= 0) throw input_error("knapsack_to_charp: weights must be positive");
        total += x;
    }
    if (k < 0 || k > total) {
        throw input_error("knapsack_to_charp: k out of range");
    }
    // complement symmetry of subset sums keeps lambda a partition
    const int64_t kk = std::min(k, total - k);
    const int64_t n = 2 * total;
    Partition lambda({static_cast<int>(n - 2 * kk), static_cast<int>(2 * kk)});
    std::vector<int> doubled;
    doubled.reserve(a.size());
    for (int64_t x : a) doubled.push_back(static_cast<int>(2 * x));
    std::sort(doubled.begin(), doubled.end(), std::greater<int>());
    return CharPInstance{std::move(lambda), Partition(std::move(doubled))};
}

} // namespace kroncoeff
