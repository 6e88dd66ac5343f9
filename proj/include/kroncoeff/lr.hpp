#pragma once

#include <cstdint>
#include <vector>

#include "kroncoeff/bigint.hpp"
#include "kroncoeff/partition.hpp"

namespace kroncoeff {

struct SkewShape {
    Partition outer;
    Partition inner; // contained in outer
};

/// Throws input_error unless inner is contained in outer.
SkewShape make_skew(Partition outer, Partition inner);

/// c^lambda_{mu nu}: semistandard fillings of lambda/mu with content nu whose
/// reverse reading word (rows top to bottom, right to left within a row) is
/// ballot. Returns 0 whenever |lambda| != |mu| + |nu| or mu is not contained
/// in lambda.
BigCount lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All partitions obtained from pi by adding a horizontal strip of the given
/// length (no column receives more than one box), in decreasing
/// lexicographic order.
std::vector<Partition> pieri_expand(int64_t strip_length, const Partition& pi);

/// g((n-|lambda|, lambda), (n-|mu|, mu), (n-|nu|, nu)); equals the LR
/// coefficient once n >= max(lambda_1, mu_1) + |nu| + |lambda|. Throws
/// input_error when n is too small for the prepended rows to be valid.
BigCount murnaghan_embedding(const Partition& lambda, const Partition& mu,
                             const Partition& nu, int64_t n);

/// LR coefficient through the Kronecker pipeline: early zero when
/// |lambda_i - mu_i| > |nu| for some i, otherwise the embedding at the
/// stabilization bound.
BigCount lr_via_reduction(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace kroncoeff
