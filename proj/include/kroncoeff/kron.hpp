#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "kroncoeff/bigint.hpp"
#include "kroncoeff/partition.hpp"

namespace kroncoeff {

enum class Method { oracle, tables, automatic };

struct GappPair {
    BigCount pos;
    BigCount neg;
};

/// Witness for the early-zero test: 1-based index i with |lambda_i - mu_i| > t.
struct ProvablyZero {
    int witness_index = 0;
};

/// Certificate of a successful reduction. The map acts per part as
/// phi(theta)_j = theta_j - rho_{i_j} + t*(l - i_j + ind_I(i_j)), with
/// omega = lambda union mu, rho = lambda intersect mu, t = n - nu_1,
/// I = { i <= l : rho_i >= omega_{i+1} + t } plus the sentinel l+1,
/// i_j the smallest element of I that is >= j, and ind_I counting the
/// elements of I between i and l (the sentinel itself has ind = 1).
struct Reduced {
    Partition phi_lambda, phi_mu, phi_nu;
    int64_t t = 0;
    int ell = 0;
    Partition omega, rho;
    std::vector<int> index_set; // I, 1-based, sentinel ell+1 included
};

struct ReductionOutcome {
    std::variant<ProvablyZero, Reduced> value;

    bool provably_zero() const { return std::holds_alternative<ProvablyZero>(value); }
    const ProvablyZero& zero() const { return std::get<ProvablyZero>(value); }
    const Reduced& reduced() const { return std::get<Reduced>(value); }
};

struct KronSettings {
    // In automatic mode, prefer the character route once the (reduced)
    // triple is long but small; the permutation-triple sum grows like
    // (l!)^3 while the character sum only grows with the partition number.
    int oracle_fallback_max_n = 12;
    int oracle_fallback_min_len = 5;
    // The permutation scan itself is l!, which stops being sensible here.
    int tables_max_len = 10;
    // Above this size the count terms share one dominant recursion and
    // threads only fight over the memo, so the kernel stays serial.
    int tables_parallel_max_n = 10;
};

KronSettings& kron_settings();

/// g(lambda,mu,nu) = sum over classes rho of chi^lambda[rho] chi^mu[rho]
/// chi^nu[rho] / z_rho. Exact; throws internal_error if the class sum is not
/// divisible by n! (which would mean a character bug).
BigCount kron_via_characters(const Partition& lambda, const Partition& mu, const Partition& nu);

/// g as the signed sum over permutation triples of contingency-array counts
/// C(alpha + sigma - id, ...) with all three partitions padded to the common
/// length. Aggregates equal canonical marginal vectors first and evaluates
/// the remaining products in parallel; the result is schedule-independent.
BigCount kron_via_tables(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Same sum, evaluated term by term in a single thread with no aggregation.
/// Kept as a reference implementation for tests and benchmarks.
BigCount kron_via_tables_reference(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma);

/// Splits the signed sum by the sign of sgn(sigma^1 sigma^2 sigma^3):
/// pos - neg = g and both parts are nonnegative counts.
GappPair gapp_decomposition(const Partition& alpha, const Partition& beta,
                            const Partition& gamma);

/// The reduction map: either a proof that g vanishes or the reduced triple
/// with its full certificate. Throws internal_error with the certificate if
/// the construction ever fails to produce partitions.
ReductionOutcome reduce(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Applies the reduction map of a successful reduction to any partition
/// theta with at most ell parts and rho contained in theta + (t^ell).
Partition apply_reduction_map(const Reduced& red, const Partition& theta);

/// True implies g = 0: some role assignment has len(lambda)*len(mu) < len(nu).
bool dvir_vanishing(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Front door. `automatic` designates as nu the partition with the smallest
/// second part, applies the vanishing tests and the reduction, then counts
/// the reduced triple (character route when the triple is long but small).
BigCount compute(const Partition& lambda, const Partition& mu, const Partition& nu,
                 Method method = Method::automatic);

/// Stable Kronecker coefficient of the truncated triple: roles are sorted so
/// the nu slot has the smallest size, the first rows are prepended at
/// n = max(lambda_1, mu_1) + |nu| + |lambda|, and the result is computed
/// through the standard pipeline.
BigCount reduced_kron(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace kroncoeff
