#pragma once

#include <array>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kroncoeff/bigint.hpp"

namespace kroncoeff {

/// Plane sums of a 3-d array: three integer vectors of common length.
/// Entries may be negative; such marginals simply have count zero, which is
/// what the alternating Kronecker sum needs.
struct Marginals {
    std::vector<int64_t> a, b, c;
};

/// Exact count of l x l x l nonnegative integer arrays with prescribed plane
/// sums, computed by a memoized recursion over layers. Residual marginal
/// triples are cached in canonical form (zero entries dropped, each vector
/// sorted, the three vectors ordered), which is sound because the count is
/// invariant under independently permuting the entries of each vector and
/// under permuting the roles of the three vectors. The cache is safe for
/// concurrent use and is cleared when it outgrows its capacity.
class TableCounter {
public:
    static constexpr size_t default_capacity = size_t{1} << 20;

    explicit TableCounter(size_t capacity = default_capacity) : capacity_(capacity) {}

    /// Throws input_error when the three vectors differ in length.
    BigCount count(const Marginals& m);

    size_t cached() const;
    void clear();
    void set_capacity(size_t capacity);

private:
    static constexpr size_t shard_count = 16;

    // A slot without a value is in flight: some thread is computing it, and
    // any other thread needing the same key parks on a per-key latch instead
    // of duplicating the recursion.
    struct Latch {
        std::condition_variable done;
    };
    struct Slot {
        std::optional<BigCount> value;
        std::shared_ptr<Latch> latch; // created by the first waiter
    };
    using Memo = std::unordered_map<std::string, Slot>;

    struct Shard {
        mutable std::mutex lock;
        Memo map3;
        Memo map2;
    };

    BigCount count3(std::vector<int64_t> a, std::vector<int64_t> b, std::vector<int64_t> c);
    BigCount count2(std::vector<int64_t> r, std::vector<int64_t> s);
    template <class Compute>
    BigCount memoized(Memo Shard::* which, const std::string& key, Compute&& compute);
    Shard& shard_for(const std::string& key);

    size_t capacity_;
    std::array<Shard, shard_count> shards_;
};

TableCounter& global_table_counter();

/// Counts with the shared global cache.
BigCount count_tables(const Marginals& m);

/// Enumeration oracle for tests: walks every array cell by cell. Refuses
/// totals above max_total with input_error; the cap keeps accidental
/// misuse bounded.
BigCount count_tables_naive(const Marginals& m, int64_t max_total = 16);

} // namespace kroncoeff
