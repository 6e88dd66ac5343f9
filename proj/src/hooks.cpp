#include "kroncoeff/hooks.hpp"

#include <algorithm>
#include <limits>

#include "kroncoeff/errors.hpp"

namespace kroncoeff {

HookSettings& hook_settings() {
    static HookSettings settings;
    return settings;
}

std::vector<int> BarredTableau::content() const {
    std::vector<int> m;
    for (const auto& row : rows) {
        for (const Entry& e : row) {
            if (e.value > static_cast<int>(m.size())) m.resize(static_cast<size_t>(e.value));
            ++m[static_cast<size_t>(e.value - 1)];
        }
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

int BarredTableau::barred_count() const {
    int k = 0;
    for (const auto& row : rows) {
        for (const Entry& e : row) k += e.barred ? 1 : 0;
    }
    return k;
}

std::string BarredTableau::str() const {
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += " / ";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(rows[r][c].value);
            if (rows[r][c].barred) out += 'b';
        }
    }
    return out;
}

BarredTableau make_tableau(std::vector<std::vector<Entry>> rows, OrderMode mode) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
    return BarredTableau{Partition(std::move(lens)), std::move(rows), mode};
}

namespace {

void check_grid(const BarredTableau& t) {
    if (static_cast<int>(t.rows.size()) != t.shape.length()) {
        throw input_error("tableau grid does not match its shape");
    }
    for (int r = 0; r < t.shape.length(); ++r) {
        if (static_cast<int>(t.rows[static_cast<size_t>(r)].size()) != t.shape.part(r)) {
            throw input_error("tableau grid does not match its shape");
        }
    }
}

int key_of(const Entry& e, OrderMode mode) {
    return mode == OrderMode::natural ? natural_key(e) : small_barred_key(e);
}

} // namespace

bool is_valid(const BarredTableau& t) {
    check_grid(t);
    for (int r = 0; r < t.shape.length(); ++r) {
        const auto& row = t.rows[static_cast<size_t>(r)];
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c].value < 1) return false;
            if (c > 0) {
                if (key_of(row[c - 1], t.mode) > key_of(row[c], t.mode)) return false;
                if (row[c - 1] == row[c] && row[c].barred) return false;
            }
            if (r > 0 && c < t.rows[static_cast<size_t>(r - 1)].size()) {
                const Entry& above = t.rows[static_cast<size_t>(r - 1)][c];
                if (key_of(above, t.mode) > key_of(row[c], t.mode)) return false;
                if (above == row[c] && !row[c].barred) return false;
            }
        }
    }
    return true;
}

std::vector<int> reading_word(const BarredTableau& t) {
    if (t.mode != OrderMode::small_barred || !is_valid(t)) {
        throw input_error("reading_word: expects a valid small-barred tableau");
    }
    // barred entries occupy a top-left subdiagram; record its row lengths
    std::vector<int> barred_len(t.rows.size(), 0);
    for (size_t r = 0; r < t.rows.size(); ++r) {
        int k = 0;
        while (k < static_cast<int>(t.rows[r].size()) &&
               t.rows[r][static_cast<size_t>(k)].barred) {
            ++k;
        }
        barred_len[r] = k;
    }

    std::vector<int> word;
    word.reserve(static_cast<size_t>(t.shape.size()));
    // unbarred part, columns right to left, top to bottom inside a column
    for (int col = t.shape.part(0) - 1; col >= 0; --col) {
        for (size_t r = 0; r < t.rows.size(); ++r) {
            if (col < static_cast<int>(t.rows[r].size()) && col >= barred_len[r]) {
                word.push_back(t.rows[r][static_cast<size_t>(col)].value);
            }
        }
    }
    // conjugate of the barred part, row by row, right to left inside a row
    const int conj_rows = barred_len.empty() ? 0 : barred_len[0];
    for (int j = 0; j < conj_rows; ++j) {
        // row j of the conjugate is column j of the barred subdiagram
        std::vector<int> conj_row;
        for (size_t r = 0; r < t.rows.size(); ++r) {
            if (j < barred_len[r]) conj_row.push_back(t.rows[r][static_cast<size_t>(j)].value);
        }
        for (auto it = conj_row.rbegin(); it != conj_row.rend(); ++it) word.push_back(*it);
    }
    return word;
}

bool is_ballot(const std::vector<int>& word) {
    std::vector<int> count;
    for (int letter : word) {
        if (letter < 1) return false;
        if (letter > static_cast<int>(count.size())) count.resize(static_cast<size_t>(letter));
        ++count[static_cast<size_t>(letter - 1)];
        if (letter > 1 &&
            count[static_cast<size_t>(letter - 1)] > count[static_cast<size_t>(letter - 2)]) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr int no_entry = std::numeric_limits<int>::min();

struct Grid {
    std::vector<std::vector<Entry>> rows;

    int nkey(int r, int c) const {
        if (r < 0 || c < 0 || r >= static_cast<int>(rows.size()) ||
            c >= static_cast<int>(rows[static_cast<size_t>(r)].size())) {
            return no_entry;
        }
        return natural_key(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }

    Entry& at(int r, int c) { return rows[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
};

// smallest value first, then left-most column; distinct cells of equal value
// never share a column, so the pair is a total order on candidates
bool scan_out_of_order(const Grid& g, int& out_r, int& out_c) {
    bool found = false;
    int best_value = 0, best_col = 0;
    for (int r = 0; r < static_cast<int>(g.rows.size()); ++r) {
        for (int c = 0; c < static_cast<int>(g.rows[static_cast<size_t>(r)].size()); ++c) {
            const Entry& e = g.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (e.barred) continue;
            const int self = natural_key(e);
            if (g.nkey(r, c - 1) <= self && g.nkey(r - 1, c) <= self) continue;
            if (!found || e.value < best_value || (e.value == best_value && c < best_col)) {
                found = true;
                best_value = e.value;
                best_col = c;
                out_r = r;
                out_c = c;
            }
        }
    }
    return found;
}

// true when the exchange partner of the out-of-order entry at (r,c) is the
// entry above it rather than the one to its left
bool partner_above(const Grid& g, int r, int c) {
    const int left = g.nkey(r, c - 1);
    const int above = g.nkey(r - 1, c);
    if (left == no_entry) return true;
    if (above == no_entry) return false;
    if (above != left) return above > left;
    // equal entries: unbarred pairs move the entry up, barred pairs left
    return !g.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)].barred;
}

BarredTableau finish_switch(const BarredTableau& input, Grid grid) {
    BarredTableau out{input.shape, std::move(grid.rows), OrderMode::natural};
    if (!is_valid(out)) {
        throw internal_error("tableau switching produced an invalid tableau from " +
                             input.str());
    }
    return out;
}

void require_small_barred(const BarredTableau& t, const char* who) {
    if (t.mode != OrderMode::small_barred || !is_valid(t)) {
        throw input_error(std::string(who) + ": expects a valid small-barred tableau");
    }
}

} // namespace

BarredTableau tableau_switch_naive(const BarredTableau& t) {
    require_small_barred(t, "tableau_switch_naive");
    Grid g{t.rows};
    int r = 0, c = 0;
    while (scan_out_of_order(g, r, c)) {
        // slide this entry until both neighbours are in order
        while (true) {
            const int self = natural_key(g.at(r, c));
            const bool stuck = g.nkey(r, c - 1) <= self && g.nkey(r - 1, c) <= self;
            if (stuck) break;
            if (partner_above(g, r, c)) {
                std::swap(g.at(r, c), g.at(r - 1, c));
                --r;
            } else {
                std::swap(g.at(r, c), g.at(r, c - 1));
                --c;
            }
        }
    }
    return finish_switch(t, std::move(g));
}

BarredTableau tableau_switch(const BarredTableau& t) {
    require_small_barred(t, "tableau_switch");
    Grid g{t.rows};
    int r = 0, c = 0;
    while (scan_out_of_order(g, r, c)) {
        while (true) {
            const int self = natural_key(g.at(r, c));
            const bool stuck = g.nkey(r, c - 1) <= self && g.nkey(r - 1, c) <= self;
            if (stuck) break;
            if (partner_above(g, r, c)) {
                // barred letter drops into this row
                std::swap(g.at(r, c), g.at(r - 1, c));
                --r;
            } else {
                // The barred letter jumps over the maximal horizontal strip
                // of entries equal to this one, provided the whole strip
                // would cross it by left exchanges: every strip member must
                // prefer the left partner, settle where it lands, and the
                // transit must not expose a smaller unbarred entry below.
                // Otherwise a single exchange replays the slide verbatim.
                const Entry moving = g.at(r, c);
                const int jkey = natural_key(moving);
                const int bkey = natural_key(g.at(r, c - 1));
                int end = c;
                while (g.nkey(r, end + 1) == jkey) ++end;
                bool batch = end > c && g.nkey(r, c - 2) <= jkey &&
                             g.nkey(r - 1, c - 1) <= jkey;
                for (int x = c + 1; batch && x <= end; ++x) {
                    if (g.nkey(r - 1, x) > bkey) batch = false;
                }
                for (int y = c; batch && y < end; ++y) {
                    if (g.nkey(r - 1, y) > jkey) batch = false;
                    const int below = g.nkey(r + 1, y);
                    if (below != no_entry &&
                        !g.rows[static_cast<size_t>(r + 1)][static_cast<size_t>(y)].barred &&
                        below <= jkey) {
                        batch = false;
                    }
                }
                if (batch) {
                    const Entry barred = g.at(r, c - 1);
                    for (int x = c - 1; x < end; ++x) g.at(r, x) = g.at(r, x + 1);
                    g.at(r, end) = barred;
                } else {
                    std::swap(g.at(r, c), g.at(r, c - 1));
                }
                --c;
            }
        }
    }
    return finish_switch(t, std::move(g));
}

namespace {

// Enumeration backbone for the hook rule: the barred entries of a valid
// small-barred tableau form a subdiagram; fill it (rows strict, columns
// weak), then fill the unbarred skew complement (rows weak, columns strict),
// then apply the word and corner filters.
struct HookEnumerator {
    const Partition& lambda;
    const Partition& mu;
    int k;
    const std::function<void(const BarredTableau&)>* trace = nullptr;

    BigCount run_for_subshape(const Partition& sub) {
        BigCount found = 0;
        std::vector<std::vector<Entry>> rows(static_cast<size_t>(lambda.length()));
        for (int r = 0; r < lambda.length(); ++r) {
            rows[static_cast<size_t>(r)].resize(static_cast<size_t>(lambda.part(r)));
        }
        std::vector<int> remaining(mu.parts().begin(), mu.parts().end());
        fill_barred(rows, sub, remaining, 0, 0, found);
        return found;
    }

    void fill_barred(std::vector<std::vector<Entry>>& rows, const Partition& sub,
                     std::vector<int>& remaining, int r, int c, BigCount& found) {
        if (r == sub.length()) {
            fill_unbarred(rows, sub, remaining, 0, found);
            return;
        }
        if (c == sub.part(r)) {
            fill_barred(rows, sub, remaining, r + 1, 0, found);
            return;
        }
        const int lo = std::max(c > 0 ? rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)].value + 1 : 1,
                                r > 0 ? rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)].value : 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = Entry{v, true};
            fill_barred(rows, sub, remaining, r, c + 1, found);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    }

    void fill_unbarred(std::vector<std::vector<Entry>>& rows, const Partition& sub,
                       std::vector<int>& remaining, int idx, BigCount& found) {
        // skew cells in row-major order
        int r = 0, c = 0, seen = 0;
        for (r = 0; r < lambda.length(); ++r) {
            const int row_cells = lambda.part(r) - sub.part(r);
            if (seen + row_cells > idx) {
                c = sub.part(r) + (idx - seen);
                break;
            }
            seen += row_cells;
        }
        if (r == lambda.length()) {
            finalize(rows, found);
            return;
        }
        const int left = c > sub.part(r) ? rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)].value : 1;
        int above = 0;
        if (r > 0 && c < lambda.part(r - 1)) {
            const Entry& e = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
            above = e.barred ? 0 : e.value; // barred above unbarred is always fine
        }
        const int lo = std::max(left, above + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = Entry{v, false};
            fill_unbarred(rows, sub, remaining, idx + 1, found);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    }

    void finalize(std::vector<std::vector<Entry>>& rows, BigCount& found) {
        BarredTableau t{lambda, rows, OrderMode::small_barred};
        if (!is_ballot(reading_word(t))) return;
        BarredTableau switched = tableau_switch(t);
        const Entry& corner =
            switched.rows[static_cast<size_t>(lambda.length() - 1)].front();
        if (corner.barred) return;
        found += 1;
        if (trace) (*trace)(t);
    }
};

std::vector<Partition> subshapes_of_weight(const Partition& outer, int k) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(acc);
            return;
        }
        if (row == outer.length()) return;
        const int cap = std::min(outer.part(row),
                                 row > 0 ? acc[static_cast<size_t>(row - 1)] : outer.part(0));
        for (int len = std::min(cap, rem); len >= 1; --len) {
            acc.push_back(len);
            self(self, row + 1, rem - len);
            acc.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

void check_hook_inputs(const Partition& lambda, const Partition& mu, int k) {
    if (lambda.size() != mu.size()) {
        throw input_error("count_hook_kron: |lambda| must equal |mu|");
    }
    if (k < 0 || k >= lambda.size()) {
        throw input_error("count_hook_kron: need 0 <= k < n");
    }
    if (lambda.size() > hook_settings().max_n) {
        throw input_error("count_hook_kron: n exceeds the configured cap " +
                          std::to_string(hook_settings().max_n));
    }
}

} // namespace

BigCount count_hook_kron(const Partition& lambda, const Partition& mu, int k) {
    check_hook_inputs(lambda, mu, k);
    if (static_cast<int64_t>(lambda.length()) * mu.length() < k + 1) return 0;

    const auto subshapes = subshapes_of_weight(lambda, k);
    BigCount total = 0;
#pragma omp parallel
    {
        BigCount local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(subshapes.size()); ++i) {
            HookEnumerator e{lambda, mu, k, nullptr};
            local += e.run_for_subshape(subshapes[static_cast<size_t>(i)]);
        }
#pragma omp critical(hook_count_sum)
        total += local;
    }
    return total;
}

BigCount count_hook_kron_trace(const Partition& lambda, const Partition& mu, int k,
                               const std::function<void(const BarredTableau&)>& fn) {
    check_hook_inputs(lambda, mu, k);
    if (static_cast<int64_t>(lambda.length()) * mu.length() < k + 1) return 0;

    BigCount total = 0;
    for (const Partition& sub : subshapes_of_weight(lambda, k)) {
        HookEnumerator e{lambda, mu, k, &fn};
        total += e.run_for_subshape(sub);
    }
    return total;
}

} // namespace kroncoeff
