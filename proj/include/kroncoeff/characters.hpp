#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kroncoeff/bigint.hpp"
#include "kroncoeff/partition.hpp"

namespace kroncoeff {

/// Memo table for irreducible character values of symmetric groups, keyed by
/// the canonical textual forms "lambda|mu". The border-strip recursion
/// removes strips for the largest remaining cycle first, so every
/// intermediate value is itself a character value and lands in the same
/// table. The map is striped across shards so concurrent sweeps do not
/// serialize on one mutex; results never depend on interleaving.
class CharTable {
public:
    BigInt chi(const Partition& lambda, const Partition& mu);

    /// Loads newline-delimited "lambda|mu|value" records.
    void load(const std::string& path);
    /// Writes the current contents in the same format, sorted by key.
    void save(const std::string& path) const;

    size_t entries() const;
    void clear();

private:
    static constexpr size_t shard_count = 64;

    struct Shard {
        mutable std::mutex lock;
        std::unordered_map<std::string, BigInt> map;
    };

    BigInt chi_rec(const Partition& shape, const std::vector<int>& type, size_t idx);
    Shard& shard_for(const std::string& key);

    std::array<Shard, shard_count> shards_;
};

CharTable& global_char_table();

/// chi^lambda[mu] by the Murnaghan-Nakayama rule, memoized in the global
/// table. Throws input_error when |lambda| != |mu|.
BigInt chi(const Partition& lambda, const Partition& mu);

/// Number of index subsets of the multiset R with element sum m.
/// P_R(0) = 1 (the empty subset) and P_R(m) = 0 for m < 0.
BigCount subset_count(const std::vector<int64_t>& r, int64_t m);

/// chi^{(n-k,k)}[nu] computed as P_X(k) - P_X(k-1) with X the parts of nu.
/// Requires |nu| = n and 0 <= k <= n/2.
BigInt chi_two_row(int64_t n, int64_t k, const Partition& nu);

struct CharPInstance {
    Partition lambda;
    Partition nu;
};

/// Builds the two-row character instance whose vanishing is equivalent to
/// the knapsack instance (k, a) having no solution: lambda = (n-2k', 2k')
/// with n = 2*sum(a) and k' = min(k, sum(a)-k), nu = sorted (2a_1, 2a_2, ...).
CharPInstance knapsack_to_charp(int64_t k, const std::vector<int64_t>& a);

} // namespace kroncoeff
