#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latsym/monomial.hpp"
#include "latsym/rational.hpp"

namespace latsym {

// Sparse multivariate polynomial over the rationals: monomial -> coefficient,
// zero coefficients never stored. The map is ordered by the lex monomial
// order, so iteration and printing are deterministic and the leading term is
// the last entry.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly var(VarId v, int e = 1) {
        Poly p;
        p.terms_[Monomial::var(v, e)] = 1;
        return p;
    }
    static Poly term(const Monomial& m, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rat constant_value() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Rat(0) : it->second;
    }
    std::size_t term_count() const { return terms_.size(); }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Leading term under lex; polynomial must be nonzero.
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rat& leading_coefficient() const { return terms_.rbegin()->second; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    template <typename VarPred>
    int degree_where(VarPred&& pred) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_where(pred));
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly& operator*=(const Rat& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Poly operator*(const Rat& s) const { Poly r = *this; r *= s; return r; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division: returns this / d if the division leaves no remainder.
    std::optional<Poly> divide_exact(const Poly& d) const;

    // Deterministic total order (term count, then termwise); used to keep
    // denominator factor lists sorted.
    int compare(const Poly& o) const;

    // Drops every term whose degree in the selected variables exceeds bound.
    template <typename VarPred>
    Poly truncated_where(VarPred&& pred, int bound) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.degree_where(pred) <= bound) r.terms_[m] = c;
        return r;
    }

    // Substitutes vars for which `sub` yields a polynomial; the result is a
    // polynomial again. (Fraction-valued substitution lives on RingElem.)
    Poly substituted(const std::function<const Poly*(VarId)>& sub) const;

    // Pure variable relabeling; far cheaper than substitution.
    Poly renamed(const std::map<VarId, VarId>& names) const;

    // Terms printed in descending lex order: "x1^2 - 3/2*q*x1 + 1".
    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace latsym
