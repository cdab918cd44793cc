#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "latsym/varid.hpp"

namespace latsym {

// Power product of variables. Stored as (variable, exponent) pairs sorted by
// the global VarId order, exponents strictly positive.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e > 0) m.factors_.push_back({v, e});
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(VarId v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    template <typename VarPred>
    int degree_where(VarPred&& pred) const {
        int d = 0;
        for (const auto& [v, e] : factors_)
            if (pred(v)) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first) r.factors_.push_back(*a++);
            else if (b->first < a->first) r.factors_.push_back(*b++);
            else {
                r.factors_.push_back({a->first, a->second + b->second});
                ++a; ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        return r;
    }

    // Exact quotient this / o, or nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin();
        for (const auto& [v, e] : o.factors_) {
            while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
            if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
            if (a->second > e) r.factors_.push_back({v, a->second - e});
            ++a;
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        return r;
    }

    // Lexicographic order on the global variable order: compared variable by
    // variable starting from the smallest VarId, higher exponent first.
    // Returns <0, 0, >0.
    int compare(const Monomial& o) const {
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first) return 1;      // this has the earlier var
            if (b->first < a->first) return -1;
            if (a->second != b->second) return a->second > b->second ? 1 : -1;
            ++a; ++b;
        }
        if (a != factors_.end()) return 1;
        if (b != o.factors_.end()) return -1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.compare(b) != 0; }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        bool first = true;
        for (const auto& [v, e] : factors_) {
            if (!first) s += "*";
            first = false;
            s += v.name();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

// Lex-ascending comparator; the greatest element under this order is the
// leading monomial.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) < 0; }
};

} // namespace latsym
