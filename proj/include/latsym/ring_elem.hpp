#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latsym/errors.hpp"
#include "latsym/poly.hpp"

namespace latsym {

// A set of variables, given as whole alphabets (kinds) plus individual ids.
class VarSet {
public:
    VarSet() = default;

    static VarSet of_kinds(std::initializer_list<VarId::Kind> kinds) {
        VarSet s;
        for (auto k : kinds) s.kinds_ |= bit(k);
        return s;
    }
    static VarSet of(std::initializer_list<VarId> vars) {
        VarSet s;
        for (auto v : vars) s.ids_.insert(v);
        return s;
    }

    VarSet& add_kind(VarId::Kind k) { kinds_ |= bit(k); return *this; }
    VarSet& add(VarId v) { ids_.insert(v); return *this; }

    bool contains(VarId v) const {
        return (kinds_ & bit(v.kind)) != 0 || ids_.count(v) > 0;
    }

private:
    static std::uint32_t bit(VarId::Kind k) { return 1u << static_cast<int>(k); }
    std::uint32_t kinds_ = 0;
    std::set<VarId> ids_;
};

// Element of the fraction field of the polynomial ring.
//
// Canonical form: the denominator is a product of monic non-constant factors
// (kept as an explicit sorted factor list), and no factor divides the
// numerator. This covers the reduction actually needed here: every
// denominator produced by the vertex-weight tables is a product of simple
// factors such as (1 + u*x) or (1 - q^k), and trial division cancels them
// whenever a sum or product makes one redundant. Structural equality of
// canonical forms is therefore meaningful for values built along matching
// routes, and cross-multiplication equality is the universal backstop.
class RingElem {
public:
    struct DenFactor {
        Poly base; // monic, non-constant
        int exp;   // >= 1
    };

    RingElem() = default;
    explicit RingElem(long c) : num_(c) {}
    explicit RingElem(const Rat& c) : num_(c) {}
    explicit RingElem(const Poly& p) : num_(p) {}

    static RingElem zero() { return RingElem(); }
    static RingElem one() { return RingElem(1); }
    static RingElem var(VarId v) { return RingElem(Poly::var(v)); }
    static RingElem q() { return var(VarId::q()); }

    const Poly& numerator() const { return num_; }
    const std::vector<DenFactor>& den_factors() const { return den_; }
    Poly denominator() const; // expanded product, monic

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_ == Poly(1); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rat constant_value() const { return num_.constant_value(); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator/(const RingElem& o) const; // ZeroDenominator if o == 0
    RingElem& operator+=(const RingElem& o) { *this = *this + o; return *this; }
    RingElem& operator-=(const RingElem& o) { *this = *this - o; return *this; }
    RingElem& operator*=(const RingElem& o) { *this = *this * o; return *this; }
    RingElem& operator/=(const RingElem& o) { *this = *this / o; return *this; }

    RingElem inverse() const;
    RingElem pow(int e) const; // negative exponents allowed

    // Exact equality by cross-multiplication.
    bool equals(const RingElem& o) const;
    friend bool operator==(const RingElem& a, const RingElem& b) { return a.equals(b); }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !a.equals(b); }

    std::set<VarId> variables() const;

    // Variable relabeling lifted to fractions.
    RingElem renamed(const std::map<VarId, VarId>& names) const;

    std::string to_string() const;

    // Builds a reduced fraction, normalizing and cancelling factors.
    static RingElem make(Poly num, std::vector<DenFactor> den);

private:
    void push_factor(Poly base, int exp); // normalizes to monic, folds constants
    void cancel();
    void sort_factors();

    Poly num_;
    std::vector<DenFactor> den_;
};

// Simultaneous exact substitution; unbound variables stay symbolic.
// Throws ZeroDenominator if a denominator factor vanishes identically.
RingElem substitute(const RingElem& f, const std::map<VarId, RingElem>& bindings);

// Evaluates a polynomial with fraction-valued bindings.
RingElem eval_poly(const Poly& p, const std::map<VarId, RingElem>& bindings);

// Polynomial truncation of the series expansion of f in the selected
// variables: every denominator factor involving them must have a nonzero
// part free of them (else NotSeriesExpandable). Exact in all other variables.
RingElem truncate(const RingElem& f, const VarSet& vars, int degree);

} // namespace latsym
