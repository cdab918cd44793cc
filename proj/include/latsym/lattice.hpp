#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latsym/partition.hpp"
#include "latsym/weights.hpp"

namespace latsym {

// Column occupation numbers; index 0 is column 1, the RIGHT edge of the
// lattice, matching the (u_1, v_1) annotation convention.
using Occupation = std::vector<int>;

// Finitely supported map from occupation sequences to coefficients.
struct StateVector {
    std::map<Occupation, RingElem> terms;

    void add(const Occupation& key, const RingElem& coef) {
        if (coef.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(key, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    static StateVector unit(const Occupation& key) {
        StateVector s;
        s.terms.emplace(key, RingElem::one());
        return s;
    }
};

// Per-column parameter pairs (u_i, v_i); pairs[0] is column 1 (rightmost).
struct ColumnParams {
    std::vector<std::pair<RingElem, RingElem>> pairs;

    int width() const { return static_cast<int>(pairs.size()); }

    static ColumnParams symbolic(int width) {
        ColumnParams c;
        for (int i = 1; i <= width; ++i)
            c.pairs.push_back({RingElem::var(VarId::u(i)), RingElem::var(VarId::v(i))});
        return c;
    }
    static ColumnParams constant(int width, const RingElem& u, const RingElem& v) {
        ColumnParams c;
        for (int i = 0; i < width; ++i) c.pairs.push_back({u, v});
        return c;
    }
    // (u_i, v_i) -> (v_i, u_i)
    ColumnParams swapped() const {
        ColumnParams c;
        for (const auto& [u, v] : pairs) c.pairs.push_back({v, u});
        return c;
    }
};

enum class RowFamily { Spin1, Spin1Dual, Fused, FusedDual };

// One lattice row: a weight family plus its rapidity. Dual families run
// right-to-left and grow the state upward; plain families shrink it.
struct RowSpec {
    RowFamily family;
    RingElem spectral;
};

bool row_family_reversed(RowFamily f);
std::unique_ptr<VertexRule> make_row_rule(RowFamily f, const RingElem& x, const RingElem& u,
                                          const RingElem& v);

// Applies one row: input occupations on the bottom boundary, output on top;
// the left boundary carries 0 and the right boundary is free. max_total
// bounds the output occupation total (needed for dual fused rows, whose free
// right boundary admits arbitrarily many entering particles).
StateVector apply_row(const RowSpec& row, const ColumnParams& cols, const StateVector& in,
                      int max_total = -1);

// Product over columns of (u_i v_i; q)_{m_i} / (q; q)_{m_i} for the
// multiplicity sequence of lambda (c_empty = 1).
RingElem normalization_c(const Partition& lambda, const ColumnParams& cols);
// Same with conjugate multiplicities.
RingElem normalization_c_conjugate(const Partition& lambda, const ColumnParams& cols);

// Skew functions as lattice partition functions. xs = (x_1, ..., x_n);
// x_1 labels the TOP row. Bottom boundary carries lambda, top carries mu.
RingElem skew_j(const Partition& lambda, const Partition& mu, const std::vector<RingElem>& xs,
                const ColumnParams& cols);
RingElem skew_g(const Partition& lambda, const Partition& mu, const std::vector<RingElem>& xs,
                const ColumnParams& cols);

// Dual-row partition functions; bottom boundary carries mu, top carries
// lambda, x_1 labels the BOTTOM row. Equal to (c_lambda / c_mu) times the
// plain skew function with (u, v) interchanged.
RingElem skew_j_dual(const Partition& mu, const Partition& lambda,
                     const std::vector<RingElem>& xs, const ColumnParams& cols);
RingElem skew_g_dual(const Partition& mu, const Partition& lambda,
                     const std::vector<RingElem>& xs, const ColumnParams& cols);

// Exhaustive configuration enumerator: sums weight products over all interior
// edge labelings that satisfy conservation at every vertex. rows are listed
// bottom first. Interior and free labels range over [0, cap].
struct BruteBoundary {
    Occupation bottom, top;               // per column
    std::vector<int> left;                // per row, bottom first
    std::optional<std::vector<int>> right; // fixed per row; free when absent
};
RingElem brute_force_z(const std::vector<RowSpec>& rows, const ColumnParams& cols,
                       const BruteBoundary& bdy, int cap);

// Same enumerator against explicit per-row vertex rules (rules[row][col],
// col 0 rightmost); used by the fusion checks.
RingElem brute_force_z_rules(const std::vector<std::vector<const VertexRule*>>& rules,
                             const BruteBoundary& bdy, int cap);

// Occupation helpers.
Occupation occupation_of(const Partition& p, int width);           // m_i
Occupation occupation_of_conjugate(const Partition& p, int width); // m_i of p'

} // namespace latsym
