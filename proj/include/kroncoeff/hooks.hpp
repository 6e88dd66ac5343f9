#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kroncoeff/bigint.hpp"
#include "kroncoeff/partition.hpp"

namespace kroncoeff {

/// Two total orders on barred/unbarred letters:
///   natural:      1' < 1 < 2' < 2 < ...
///   small_barred: 1' < 2' < ... < 1 < 2 < ...
enum class OrderMode { natural, small_barred };

struct Entry {
    int value = 0;
    bool barred = false;

    friend bool operator==(const Entry&, const Entry&) = default;
};

inline int natural_key(const Entry& e) { return 2 * e.value - (e.barred ? 1 : 0); }

inline int small_barred_key(const Entry& e) {
    constexpr int bar_offset = 1 << 20;
    return e.barred ? e.value : e.value + bar_offset;
}

struct BarredTableau {
    Partition shape;
    std::vector<std::vector<Entry>> rows;
    OrderMode mode = OrderMode::small_barred;

    /// m_r = number of r and r' entries together; trailing zeros trimmed.
    std::vector<int> content() const;
    int barred_count() const;

    /// Line format with rows separated by " / " and barred entries suffixed
    /// with 'b', e.g. "1b 1 2 / 2".
    std::string str() const;
};

BarredTableau make_tableau(std::vector<std::vector<Entry>> rows, OrderMode mode);

/// Semistandardness under the tableau's own order: rows and columns weakly
/// increase, no two equal barred entries share a row, no two equal unbarred
/// entries share a column. Throws input_error when the grid does not match
/// the shape.
bool is_valid(const BarredTableau& t);

/// Reading word of a small-barred tableau: the unbarred subtableau read by
/// columns right to left (top to bottom within a column), followed by the
/// conjugate of the barred subtableau read row by row (top row first, right
/// to left within a row). Bars are dropped; the word is over the values.
std::vector<int> reading_word(const BarredTableau& t);

/// Every prefix has weakly decreasing letter multiplicities m_1 >= m_2 >= ...
bool is_ballot(const std::vector<int>& word);

/// Converts a valid small-barred tableau to natural order, preserving shape
/// and content. Accelerated: a barred letter crossing a horizontal strip of
/// equal unbarred letters jumps to the strip's far end or drops a row in one
/// operation.
BarredTableau tableau_switch(const BarredTableau& t);

/// Same conversion by individual jeu-de-taquin exchanges, always moving the
/// smallest, left-most out-of-order unbarred entry until it settles. Kept as
/// the reference the accelerated version is tested against.
BarredTableau tableau_switch_naive(const BarredTableau& t);

struct HookSettings {
    int max_n = 20; // enumeration refuses larger inputs
};

HookSettings& hook_settings();

/// g(lambda, mu, (n-k, 1^k)) by direct enumeration of small-barred tableaux
/// of shape lambda, content mu and k barred entries whose reading word is
/// ballot and whose switched tableau has an unbarred lower left corner.
/// Short-circuits to zero when len(lambda)*len(mu) < k+1.
BigCount count_hook_kron(const Partition& lambda, const Partition& mu, int k);

/// Same count; additionally invokes fn on every accepted tableau (used by
/// the CLI --trace flag). Runs single-threaded so the callback order is
/// deterministic.
BigCount count_hook_kron_trace(const Partition& lambda, const Partition& mu, int k,
                               const std::function<void(const BarredTableau&)>& fn);

} // namespace kroncoeff
