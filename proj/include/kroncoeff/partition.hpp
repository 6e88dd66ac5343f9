#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kroncoeff/bigint.hpp"

namespace kroncoeff {

/// Weakly decreasing sequence of positive parts. Trailing zeros are stripped
/// at construction, so every partition has one canonical form and equality,
/// ordering and hashing come for free.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses the textual form "19,15,12,5,1"; the empty string is the empty
    /// partition. Spaces around parts are tolerated.
    static Partition parse(std::string_view text);

    int64_t size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based, with part(i) = 0 beyond the stored length.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int64_t size_ = 0;
};

Partition conjugate(const Partition& p);
Partition union_of(const Partition& a, const Partition& b);     // pointwise max
Partition intersect_of(const Partition& a, const Partition& b); // pointwise min
Partition add(const Partition& a, const Partition& b);          // pointwise sum

/// Young diagram containment: inner_i <= outer_i for all i.
bool contains(const Partition& outer, const Partition& inner);

/// z_mu = prod_i i^{m_i} m_i! where m_i is the multiplicity of part i.
/// The conjugacy class of cycle type mu in S_n has n!/z_mu elements.
BigCount centralizer_order(const Partition& mu);

struct PartitionBounds {
    std::optional<int> max_length;
    std::optional<int> max_part;
};

/// All partitions of n subject to the bounds, in decreasing lexicographic
/// order. The order is part of the contract; fixtures depend on it.
std::vector<Partition> partitions_of(int64_t n, PartitionBounds bounds = {});

} // namespace kroncoeff
