#include "kroncoeff/contingency.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "kroncoeff/errors.hpp"

namespace kroncoeff {

namespace {

int64_t sum_of(const std::vector<int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), int64_t{0});
}

bool any_negative(const std::vector<int64_t>& v) {
    return std::any_of(v.begin(), v.end(), [](int64_t x) { return x < 0; });
}

// canonical form: zero entries dropped, sorted descending
void canonicalize(std::vector<int64_t>& v) {
    std::erase(v, 0);
    std::sort(v.begin(), v.end(), std::greater<int64_t>());
}

std::string vec_str(const std::vector<int64_t>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Invokes fn for every u with 0 <= u[i] <= bound[i] and sum(u) = total.
template <class Fn>
void bounded_compositions(int64_t total, const std::vector<int64_t>& bound, Fn&& fn) {
    const size_t k = bound.size();
    std::vector<int64_t> suffix(k + 1, 0);
    for (size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + bound[i];
    if (total > suffix[0]) return;
    std::vector<int64_t> u(k, 0);
    auto rec = [&](auto&& self, size_t i, int64_t rem) -> void {
        if (i == k) {
            if (rem == 0) fn(u);
            return;
        }
        const int64_t hi = std::min(bound[i], rem);
        const int64_t lo = std::max<int64_t>(0, rem - suffix[i + 1]);
        for (int64_t v = lo; v <= hi; ++v) {
            u[i] = v;
            self(self, i + 1, rem - v);
        }
        u[i] = 0;
    };
    rec(rec, 0, total);
}

std::vector<int64_t> minus(const std::vector<int64_t>& v, const std::vector<int64_t>& w) {
    std::vector<int64_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] - w[i];
    return out;
}

} // namespace

BigCount TableCounter::count(const Marginals& m) {
    if (m.a.size() != m.b.size() || m.a.size() != m.c.size()) {
        throw input_error("count_tables: marginal vectors must have equal length");
    }
    return count3(m.a, m.b, m.c);
}

BigCount TableCounter::count3(std::vector<int64_t> a, std::vector<int64_t> b,
                              std::vector<int64_t> c) {
    if (any_negative(a) || any_negative(b) || any_negative(c)) return 0;
    const int64_t total = sum_of(a);
    if (total != sum_of(b) || total != sum_of(c)) return 0;
    canonicalize(a);
    canonicalize(b);
    canonicalize(c);
    if (total == 0) return 1;
    if (a.empty() || b.empty() || c.empty()) return 0;

    // order the roles: fewest layers first
    std::array<std::vector<int64_t>*, 3> v{&a, &b, &c};
    std::sort(v.begin(), v.end(), [](const auto* x, const auto* y) {
        if (x->size() != y->size()) return x->size() < y->size();
        return *x < *y;
    });
    const std::vector<int64_t>& va = *v[0];
    const std::vector<int64_t>& vb = *v[1];
    const std::vector<int64_t>& vc = *v[2];

    if (va.size() == 1) return count2(vb, vc);

    const std::string key = vec_str(va) + "|" + vec_str(vb) + "|" + vec_str(vc);
    return memoized(&Shard::map3, key, [&]() {
        // peel the first layer: it is a 2-d table with some row sums r and
        // column sums s, both compositions of the layer total
        const int64_t layer = va[0];
        std::vector<int64_t> rest(va.begin() + 1, va.end());
        BigCount acc = 0;
        bounded_compositions(layer, vb, [&](const std::vector<int64_t>& r) {
            bounded_compositions(layer, vc, [&](const std::vector<int64_t>& s) {
                BigCount ways = count2(r, s);
                if (ways != 0) {
                    acc += ways * count3(rest, minus(vb, r), minus(vc, s));
                }
            });
        });
        return acc;
    });
}

BigCount TableCounter::count2(std::vector<int64_t> r, std::vector<int64_t> s) {
    if (any_negative(r) || any_negative(s)) return 0;
    const int64_t total = sum_of(r);
    if (total != sum_of(s)) return 0;
    canonicalize(r);
    canonicalize(s);
    if (total == 0) return 1;
    if (r.empty() || s.empty()) return 0;
    if (r.size() > s.size() || (r.size() == s.size() && r > s)) std::swap(r, s);
    if (r.size() == 1) return 1; // single row, forced

    const std::string key = vec_str(r) + "|" + vec_str(s);
    return memoized(&Shard::map2, key, [&]() {
        std::vector<int64_t> rest(r.begin() + 1, r.end());
        BigCount acc = 0;
        bounded_compositions(r[0], s, [&](const std::vector<int64_t>& u) {
            acc += count2(rest, minus(s, u));
        });
        return acc;
    });
}

template <class Compute>
BigCount TableCounter::memoized(Memo Shard::* which, const std::string& key,
                                Compute&& compute) {
    Shard& shard = shard_for(key);
    Memo& memo = shard.*which;
    {
        std::unique_lock<std::mutex> guard(shard.lock);
        for (;;) {
            auto it = memo.find(key);
            if (it == memo.end()) {
                memo.emplace(key, Slot{}); // claim it
                break;
            }
            if (it->second.value.has_value()) return *it->second.value;
            if (!it->second.latch) it->second.latch = std::make_shared<Latch>();
            std::shared_ptr<Latch> latch = it->second.latch;
            latch->done.wait(guard);
            // recheck: the slot may have been finished or dropped meanwhile
        }
    }
    BigCount value;
    try {
        value = compute();
    } catch (...) {
        std::lock_guard<std::mutex> guard(shard.lock);
        auto it = memo.find(key);
        if (it != memo.end()) {
            if (it->second.latch) it->second.latch->done.notify_all();
            memo.erase(it);
        }
        throw;
    }
    {
        std::lock_guard<std::mutex> guard(shard.lock);
        if (memo.size() >= capacity_ / shard_count) {
            // drop only finished entries; in-flight claims stay valid
            std::erase_if(memo, [](const auto& kv) { return kv.second.value.has_value(); });
        }
        Slot& slot = memo[key];
        slot.value = value;
        if (slot.latch) slot.latch->done.notify_all();
    }
    return value;
}

TableCounter::Shard& TableCounter::shard_for(const std::string& key) {
    return shards_[std::hash<std::string>{}(key) % shard_count];
}

size_t TableCounter::cached() const {
    size_t total = 0;
    for (const Shard& shard : shards_) {
        std::lock_guard<std::mutex> guard(shard.lock);
        total += shard.map3.size() + shard.map2.size();
    }
    return total;
}

void TableCounter::clear() {
    for (Shard& shard : shards_) {
        std::lock_guard<std::mutex> guard(shard.lock);
        std::erase_if(shard.map3, [](const auto& kv) { return kv.second.value.has_value(); });
        std::erase_if(shard.map2, [](const auto& kv) { return kv.second.value.has_value(); });
    }
}

void TableCounter::set_capacity(size_t capacity) {
    capacity_ = capacity > shard_count ? capacity : shard_count;
}

TableCounter& global_table_counter() {
    static TableCounter counter;
    return counter;
}

BigCount count_tables(const Marginals& m) { return global_table_counter().count(m); }

BigCount count_tables_naive(const Marginals& m, int64_t max_total) {
    if (m.a.size() != m.b.size() || m.a.size() != m.c.size()) {
        throw input_error("count_tables_naive: marginal vectors must have equal length");
    }
    if (any_negative(m.a) || any_negative(m.b) || any_negative(m.c)) return 0;
    const int64_t total = sum_of(m.a);
    if (total != sum_of(m.b) || total != sum_of(m.c)) return 0;
    if (total > max_total) {
        throw input_error("count_tables_naive: total " + std::to_string(total) +
                          " exceeds the oracle bound " + std::to_string(max_total));
    }
    const int len = static_cast<int>(m.a.size());
    if (len == 0) return 1;

    std::vector<int64_t> ra = m.a, rb = m.b, rc = m.c;
    BigCount count = 0;
    int64_t remaining = total;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == len * len * len) {
            if (remaining == 0) count += 1;
            return;
        }
        const int i = idx / (len * len);
        const int j = (idx / len) % len;
        const int k = idx % len;
        const bool layer_end = (j == len - 1 && k == len - 1);
        const int64_t hi = std::min({ra[i], rb[j], rc[k]});
        // the last cell of a layer must absorb the layer's residual
        const int64_t lo = layer_end ? ra[i] : 0;
        for (int64_t v = lo; v <= hi; ++v) {
            ra[i] -= v;
            rb[j] -= v;
            rc[k] -= v;
            remaining -= v;
            self(self, idx + 1);
            ra[i] += v;
            rb[j] += v;
            rc[k] += v;
            remaining += v;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace kroncoeff
