#include "latsym/lattice.hpp"

#include <array>
#include <functional>
#include <numeric>

namespace latsym {

bool row_family_reversed(RowFamily f) {
    return f == RowFamily::Spin1Dual || f == RowFamily::FusedDual;
}

std::unique_ptr<VertexRule> make_row_rule(RowFamily f, const RingElem& x, const RingElem& u,
                                          const RingElem& v) {
    switch (f) {
        case RowFamily::Spin1: return std::make_unique<Spin1Rule>(x, u, v);
        case RowFamily::Spin1Dual: return std::make_unique<Spin1DualRule>(x, u, v);
        case RowFamily::Fused: return std::make_unique<FusedRule>(x, u, v);
        case RowFamily::FusedDual: return std::make_unique<FusedDualRule>(x, u, v);
    }
    return nullptr;
}

namespace {

// weight memo for one rule instance; single-threaded use per row sweep
class MemoRule : public VertexRule {
public:
    explicit MemoRule(std::unique_ptr<VertexRule> inner) : inner_(std::move(inner)) {}
    RingElem weight(int a, int b, int c, int d) const override {
        std::array<int, 4> key{a, b, c, d};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        RingElem w = inner_->weight(a, b, c, d);
        cache_.emplace(key, w);
        return w;
    }
    int horizontal_cap() const override { return inner_->horizontal_cap(); }
    bool reversed() const override { return inner_->reversed(); }

private:
    std::unique_ptr<VertexRule> inner_;
    mutable std::map<std::array<int, 4>, RingElem> cache_;
};

struct RowRules {
    std::vector<std::unique_ptr<VertexRule>> rules; // index 0 = column 1 (right)
    bool reversed;
    int hcap;
};

RowRules build_row(const RowSpec& row, const ColumnParams& cols) {
    RowRules r;
    r.reversed = row_family_reversed(row.family);
    r.hcap = (row.family == RowFamily::Spin1 || row.family == RowFamily::Spin1Dual)
                 ? 1
                 : VertexRule::kUnbounded;
    for (const auto& [u, v] : cols.pairs)
        r.rules.push_back(std::make_unique<MemoRule>(make_row_rule(row.family, row.spectral, u, v)));
    return r;
}

} // namespace

StateVector apply_row(const RowSpec& row, const ColumnParams& cols, const StateVector& in,
                      int max_total) {
    RowRules rr = build_row(row, cols);
    const int width = cols.width();
    StateVector out;
    Occupation top(width, 0);

    // sweep columns left to right: index width-1 down to 0
    std::function<void(const Occupation&, int, int, int, const RingElem&)> visit =
        [&](const Occupation& bottom, int idx, int carry, int total, const RingElem& coef) {
            if (idx < 0) {
                out.add(top, coef);
                return;
            }
            const int a = bottom[idx];
            const VertexRule& rule = *rr.rules[idx];
            int clo, chi;
            if (!rr.reversed) {
                clo = std::max(0, a + carry - rr.hcap);
                chi = a + carry;
            } else {
                clo = std::max(0, a - carry);
                if (rr.hcap == VertexRule::kUnbounded) {
                    // free entry from the right; only the output total caps it
                    if (max_total < 0)
                        throw WidthTooSmall("apply_row: dual fused row needs max_total");
                    chi = max_total - total;
                } else {
                    chi = a - carry + rr.hcap;
                }
            }
            for (int c = clo; c <= chi; ++c) {
                if (max_total >= 0 && total + c > max_total) break;
                int d = rule.right_from(a, carry, c);
                if (d < 0) continue;
                RingElem w = rule.weight(a, carry, c, d);
                if (w.is_zero()) continue;
                top[idx] = c;
                visit(bottom, idx - 1, d, total + c, coef * w);
            }
            top[idx] = 0;
        };

    for (const auto& [key, coef] : in.terms) {
        visit(key, width - 1, 0, 0, coef);
    }
    return out;
}

RingElem normalization_c(const Partition& lambda, const ColumnParams& cols) {
    if (lambda.first() > cols.width())
        throw WidthTooSmall("normalization_c: width " + std::to_string(cols.width()) +
                            " < largest part of " + lambda.to_string());
    RingElem c = RingElem::one();
    if (lambda.is_empty()) return c;
    auto m = lambda.multiplicities(cols.width());
    for (int i = 0; i < cols.width(); ++i) {
        if (m[i] == 0) continue;
        c *= q_pochhammer(cols.pairs[i].first * cols.pairs[i].second, m[i]) / q_factorial(m[i]);
    }
    return c;
}

RingElem normalization_c_conjugate(const Partition& lambda, const ColumnParams& cols) {
    return normalization_c(lambda.conjugate(), cols);
}

namespace {

RingElem stack_rows(const Occupation& bottom, const Occupation& top,
                    const std::vector<RowSpec>& rows_bottom_first, const ColumnParams& cols,
                    int max_total) {
    StateVector state = StateVector::unit(bottom);
    for (const auto& row : rows_bottom_first) {
        state = apply_row(row, cols, state, max_total);
        if (state.terms.empty()) return RingElem::zero();
    }
    auto it = state.terms.find(top);
    return it == state.terms.end() ? RingElem::zero() : it->second;
}

} // namespace

Occupation occupation_of(const Partition& p, int width) { return p.multiplicities(width); }

Occupation occupation_of_conjugate(const Partition& p, int width) {
    return p.conjugate().multiplicities(width);
}

RingElem skew_j(const Partition& lambda, const Partition& mu, const std::vector<RingElem>& xs,
                const ColumnParams& cols) {
    if (cols.width() < std::max(lambda.first(), mu.first()))
        throw WidthTooSmall("skew_j: width " + std::to_string(cols.width()) + " < max part");
    if (!lambda.contains(mu)) return RingElem::zero();
    // bottom row carries x_n, top row x_1
    std::vector<RowSpec> rows;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) rows.push_back({RowFamily::Spin1, *it});
    return stack_rows(occupation_of(lambda, cols.width()), occupation_of(mu, cols.width()), rows,
                      cols, -1);
}

RingElem skew_g(const Partition& lambda, const Partition& mu, const std::vector<RingElem>& xs,
                const ColumnParams& cols) {
    if (cols.width() < std::max(lambda.length(), mu.length()))
        throw WidthTooSmall("skew_g: width " + std::to_string(cols.width()) + " < max length");
    if (!lambda.contains(mu)) return RingElem::zero();
    std::vector<RowSpec> rows;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) rows.push_back({RowFamily::Fused, *it});
    return stack_rows(occupation_of_conjugate(lambda, cols.width()),
                      occupation_of_conjugate(mu, cols.width()), rows, cols, -1);
}

RingElem skew_j_dual(const Partition& mu, const Partition& lambda,
                     const std::vector<RingElem>& xs, const ColumnParams& cols) {
    if (cols.width() < std::max(lambda.first(), mu.first()))
        throw WidthTooSmall("skew_j_dual: width too small");
    if (!lambda.contains(mu)) return RingElem::zero();
    // bottom boundary mu, bottom row x_1; state grows upward to lambda
    std::vector<RowSpec> rows;
    for (const auto& x : xs) rows.push_back({RowFamily::Spin1Dual, x});
    return stack_rows(occupation_of(mu, cols.width()), occupation_of(lambda, cols.width()), rows,
                      cols, lambda.length());
}

RingElem skew_g_dual(const Partition& mu, const Partition& lambda,
                     const std::vector<RingElem>& xs, const ColumnParams& cols) {
    if (cols.width() < std::max(lambda.length(), mu.length()))
        throw WidthTooSmall("skew_g_dual: width too small");
    if (!lambda.contains(mu)) return RingElem::zero();
    std::vector<RowSpec> rows;
    for (const auto& x : xs) rows.push_back({RowFamily::FusedDual, x});
    return stack_rows(occupation_of_conjugate(mu, cols.width()),
                      occupation_of_conjugate(lambda, cols.width()), rows, cols, lambda.first());
}

RingElem brute_force_z_rules(const std::vector<std::vector<const VertexRule*>>& rules,
                             const BruteBoundary& bdy, int cap) {
    const int height = static_cast<int>(rules.size());
    const int width = height > 0 ? static_cast<int>(rules[0].size()) : 0;
    RingElem total;
    Occupation vert = bdy.bottom; // current lower edges, per column
    // enumerate vertices row by row (bottom first), columns left (idx width-1)
    // to right (idx 0); every free edge is enumerated and conservation is
    // checked per vertex rather than solved for
    std::function<void(int, int, int, const RingElem&)> visit = [&](int r, int idx, int left,
                                                                    const RingElem& coef) {
        if (r == height) {
            if (vert == bdy.top) total += coef;
            return;
        }
        if (idx < 0) {
            bool ok = !bdy.right || (*bdy.right)[r] == left;
            int next_left = (r + 1 < height && !bdy.left.empty()) ? bdy.left[r + 1] : 0;
            if (ok) visit(r + 1, width - 1, next_left, coef);
            return;
        }
        const VertexRule& rule = *rules[r][idx];
        const int a = vert[idx];
        const int hcap = std::min(rule.horizontal_cap(), cap);
        for (int c = 0; c <= cap; ++c) {
            for (int d = 0; d <= hcap; ++d) {
                if (!rule.conserves(a, left, c, d)) continue;
                RingElem w = rule.weight(a, left, c, d);
                if (w.is_zero()) continue;
                int saved = vert[idx];
                vert[idx] = c;
                visit(r, idx - 1, d, coef * w);
                vert[idx] = saved;
            }
        }
    };
    if (height == 0) return RingElem(bdy.bottom == bdy.top ? 1 : 0);
    visit(0, width - 1, bdy.left.empty() ? 0 : bdy.left[0], RingElem::one());
    return total;
}

RingElem brute_force_z(const std::vector<RowSpec>& rows, const ColumnParams& cols,
                       const BruteBoundary& bdy, int cap) {
    std::vector<std::vector<std::unique_ptr<VertexRule>>> owned;
    for (const auto& row : rows) {
        std::vector<std::unique_ptr<VertexRule>> r;
        for (const auto& [u, v] : cols.pairs)
            r.push_back(std::make_unique<MemoRule>(make_row_rule(row.family, row.spectral, u, v)));
        owned.push_back(std::move(r));
    }
    std::vector<std::vector<const VertexRule*>> view;
    for (auto& r : owned) {
        std::vector<const VertexRule*> vr;
        for (auto& p : r) vr.push_back(p.get());
        view.push_back(std::move(vr));
    }
    return brute_force_z_rules(view, bdy, cap);
}

} // namespace latsym
