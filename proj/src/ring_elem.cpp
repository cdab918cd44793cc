#include "latsym/ring_elem.hpp"

#include <algorithm>
#include <sstream>

namespace latsym {

Poly RingElem::denominator() const {
    Poly d{1};
    for (const auto& f : den_)
        for (int i = 0; i < f.exp; ++i) d *= f.base;
    return d;
}

void RingElem::push_factor(Poly base, int exp) {
    if (exp == 0) return;
    if (base.is_zero()) throw ZeroDenominator("zero denominator factor");
    if (base.is_constant()) {
        Rat c = base.constant_value();
        Rat scale(1);
        for (int i = 0; i < exp; ++i) scale /= c;
        num_ *= scale;
        return;
    }
    const Rat lc = base.leading_coefficient();
    if (lc != 1) {
        base *= Rat(1 / lc);
        Rat scale(1);
        for (int i = 0; i < exp; ++i) scale /= lc;
        num_ *= scale;
    }
    for (auto& f : den_) {
        if (f.base == base) {
            f.exp += exp;
            return;
        }
    }
    den_.push_back({std::move(base), exp});
}

void RingElem::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.exp > 0) {
            auto quo = num_.divide_exact(f.base);
            if (!quo) break;
            num_ = std::move(*quo);
            --f.exp;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](const DenFactor& f) { return f.exp == 0; }),
               den_.end());
    sort_factors();
}

void RingElem::sort_factors() {
    std::sort(den_.begin(), den_.end(), [](const DenFactor& a, const DenFactor& b) {
        return a.base.compare(b.base) < 0;
    });
}

RingElem RingElem::make(Poly num, std::vector<DenFactor> den) {
    RingElem r;
    r.num_ = std::move(num);
    for (auto& f : den) r.push_factor(std::move(f.base), f.exp);
    r.cancel();
    return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
    RingElem r;
    r.num_ = num_ * o.num_;
    for (const auto& f : den_) r.push_factor(f.base, f.exp);
    for (const auto& f : o.den_) r.push_factor(f.base, f.exp);
    r.cancel();
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // lcm of the factor lists; each numerator picks up the missing factors
    RingElem r;
    Poly left = num_;
    Poly right = o.num_;
    std::vector<DenFactor> lcm;
    for (const auto& f : den_) lcm.push_back(f);
    for (const auto& f : o.den_) {
        bool found = false;
        for (auto& g : lcm) {
            if (g.base == f.base) {
                found = true;
                if (g.exp < f.exp) g.exp = f.exp;
                break;
            }
        }
        if (!found) lcm.push_back(f);
    }
    for (const auto& g : lcm) {
        int in_left = 0, in_right = 0;
        for (const auto& f : den_)
            if (f.base == g.base) in_left = f.exp;
        for (const auto& f : o.den_)
            if (f.base == g.base) in_right = f.exp;
        for (int i = 0; i < g.exp - in_left; ++i) left *= g.base;
        for (int i = 0; i < g.exp - in_right; ++i) right *= g.base;
    }
    r.num_ = left + right;
    r.den_ = lcm;
    r.cancel();
    return r;
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    r.num_ = -r.num_;
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::inverse() const {
    if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
    RingElem r;
    r.num_ = Poly(1);
    for (const auto& f : den_)
        for (int i = 0; i < f.exp; ++i) r.num_ *= f.base;
    r.push_factor(num_, 1);
    r.cancel();
    return r;
}

RingElem RingElem::operator/(const RingElem& o) const {
    if (o.num_.is_zero()) throw ZeroDenominator("division by zero");
    if (num_.is_zero()) return RingElem();
    RingElem r;
    r.num_ = num_;
    for (const auto& f : o.den_)
        for (int i = 0; i < f.exp; ++i) r.num_ *= f.base;
    r.den_ = den_;
    r.push_factor(o.num_, 1);
    r.cancel();
    return r;
}

RingElem RingElem::pow(int e) const {
    if (e == 0) return RingElem::one();
    if (e < 0) return inverse().pow(-e);
    RingElem r = RingElem::one();
    RingElem base = *this;
    int k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

bool RingElem::equals(const RingElem& o) const {
    if (num_.is_zero()) return o.num_.is_zero();
    if (o.num_.is_zero()) return false;
    if (num_ == o.num_) {
        // identical numerators: identical factor lists settle it structurally
        bool same_den = den_.size() == o.den_.size();
        for (std::size_t i = 0; same_den && i < den_.size(); ++i)
            same_den = den_[i].exp == o.den_[i].exp && den_[i].base == o.den_[i].base;
        if (same_den) return true;
    }
    // difference over the factored common denominator; shared factors are
    // never expanded, which keeps this near-linear for close representations
    return (*this - o).is_zero();
}

std::set<VarId> RingElem::variables() const {
    std::set<VarId> vars;
    auto scan = [&vars](const Poly& p) {
        for (const auto& [m, c] : p.terms())
            for (const auto& [v, e] : m.factors()) vars.insert(v);
    };
    scan(num_);
    for (const auto& f : den_) scan(f.base);
    return vars;
}

RingElem RingElem::renamed(const std::map<VarId, VarId>& names) const {
    std::vector<DenFactor> den;
    for (const auto& f : den_) den.push_back({f.base.renamed(names), f.exp});
    return RingElem::make(num_.renamed(names), std::move(den));
}

std::string RingElem::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream out;
    out << "(" << num_.to_string() << ")/(" << denominator().to_string() << ")";
    return out.str();
}

RingElem eval_poly(const Poly& p, const std::map<VarId, RingElem>& bindings) {
    std::map<VarId, std::vector<RingElem>> powers;
    RingElem result;
    for (const auto& [m, c] : p.terms()) {
        RingElem t{c};
        Monomial untouched;
        for (const auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                untouched = untouched * Monomial::var(v, e);
                continue;
            }
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(RingElem::one());
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * it->second);
            t *= cache[e];
        }
        if (!untouched.is_one()) t *= RingElem(Poly::term(untouched, Rat(1)));
        result += t;
    }
    return result;
}

RingElem substitute(const RingElem& f, const std::map<VarId, RingElem>& bindings) {
    RingElem result = eval_poly(f.numerator(), bindings);
    for (const auto& fac : f.den_factors()) {
        RingElem b = eval_poly(fac.base, bindings);
        if (b.is_zero())
            throw ZeroDenominator("substitution annihilates denominator factor " +
                                  fac.base.to_string());
        result = result / b.pow(fac.exp);
    }
    return result;
}

namespace {

// Series inverse of a factor with nontrivial dependence on `vars`:
// base = b0 + b_plus with b0 free of `vars`; the expansion of 1/base to
// degree D is sum_{k<=D} (b0 - base)^k / b0^{k+1}.
RingElem series_inverse(const Poly& base, const VarSet& vars, int degree) {
    auto in_vars = [&vars](VarId v) { return vars.contains(v); };
    Poly b0 = base.truncated_where(in_vars, 0);
    if (b0.is_zero())
        throw NotSeriesExpandable("denominator factor " + base.to_string() +
                                  " has no constant term in the expansion variables");
    Poly g = b0 - base; // every term has positive degree in vars
    Poly acc{1};        // g^k, truncated
    Poly num;           // sum_{k=0}^{D} g^k_trunc * b0^{D-k}; denominator b0^{D+1}
    std::vector<Poly> b0pow(degree + 1);
    b0pow[0] = Poly(1);
    for (int i = 1; i <= degree; ++i) b0pow[i] = b0pow[i - 1] * b0;
    num = b0pow[degree];
    for (int k = 1; k <= degree; ++k) {
        acc = (acc * g).truncated_where(in_vars, degree);
        if (acc.is_zero()) break;
        num += acc * b0pow[degree - k];
    }
    std::vector<RingElem::DenFactor> den;
    if (!b0.is_constant()) den.push_back({b0, degree + 1});
    else {
        Rat c = b0.constant_value();
        Rat scale(1);
        for (int i = 0; i <= degree; ++i) scale /= c;
        num *= scale;
    }
    return RingElem::make(std::move(num), std::move(den));
}

} // namespace

RingElem truncate(const RingElem& f, const VarSet& vars, int degree) {
    auto in_vars = [&vars](VarId v) { return vars.contains(v); };
    RingElem result{f.numerator().truncated_where(in_vars, degree)};
    std::vector<RingElem::DenFactor> exact;
    for (const auto& fac : f.den_factors()) {
        if (fac.base.degree_where(in_vars) == 0) {
            exact.push_back(fac);
            continue;
        }
        RingElem inv = series_inverse(fac.base, vars, degree);
        for (int i = 0; i < fac.exp; ++i) {
            result = result * inv;
            result = RingElem::make(result.numerator().truncated_where(in_vars, degree),
                                    {result.den_factors().begin(), result.den_factors().end()});
        }
    }
    if (!exact.empty()) {
        std::vector<RingElem::DenFactor> den(result.den_factors().begin(),
                                             result.den_factors().end());
        den.insert(den.end(), exact.begin(), exact.end());
        result = RingElem::make(result.numerator(), std::move(den));
    }
    return result;
}

} // namespace latsym
