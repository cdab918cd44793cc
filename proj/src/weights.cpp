#include "latsym/weights.hpp"

namespace latsym {

VarId fresh_w_var(std::initializer_list<const RingElem*> elems) {
    std::uint32_t max_index = 0;
    for (const RingElem* e : elems) {
        for (const VarId& v : e->variables())
            if (v.kind == VarId::Kind::W) max_index = std::max(max_index, v.index);
    }
    return VarId::w(max_index + 1);
}

RingElem phi(int lam, int mu, const RingElem& x, const RingElem& y) {
    if (lam < 0 || lam > mu) return RingElem::zero();
    RingElem ratio = y / x;
    return q_pochhammer(x, lam) * q_pochhammer(ratio, mu - lam) / q_pochhammer(y, mu) *
           ratio.pow(lam) * q_binomial(mu, lam);
}

RingElem general_weight_formal(const RingElem& z, const RingElem& q_neg_L,
                               const RingElem& q_neg_M, int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d) return RingElem::zero();
    RingElem sum;
    for (int p = 0; p <= std::min(b, c); ++p) {
        sum += phi(c - p, c + d - p, (q_neg_M / q_neg_L) * z, q_neg_M * z) *
               phi(p, b, q_neg_L / z, q_neg_L);
    }
    if (sum.is_zero()) return sum;
    return z.pow(d - b) * q_neg_L.pow(-a) * q_neg_M.pow(d) * sum;
}

GeneralRule::GeneralRule(int L, int M, RingElem z)
    : L_(L), M_(M), z_(std::move(z)), q_neg_L_(q_power(-L)), q_neg_M_(q_power(-M)) {}

RingElem GeneralRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || a > M_ || c > M_ || b < 0 || d < 0 || b > L_ || d > L_)
        return RingElem::zero();
    return general_weight_formal(z_, q_neg_L_, q_neg_M_, a, b, c, d);
}

RingElem Spin1Rule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || b < 0 || d < 0 || b > 1 || d > 1 || a + b != c + d)
        return RingElem::zero();
    const RingElem qm = q_power(a); // q^m with m the bottom label
    const RingElem den = RingElem::one() + u_ * x_;
    if (b == 0 && d == 0) return (RingElem::one() + u_ * x_ * qm) / den;
    if (b == 0 && d == 1) return (RingElem::one() - qm) * x_ / den;
    if (b == 1 && d == 0) return (RingElem::one() - u_ * v_ * qm) / den;
    return (x_ + v_ * qm) / den; // b == 1 && d == 1
}

RingElem Spin1DualRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || b < 0 || d < 0 || b > 1 || d > 1 || a + d != b + c)
        return RingElem::zero();
    const RingElem qm = q_power(a);
    const RingElem den = RingElem::one() + v_ * x_;
    if (b == 1 && d == 1) return (x_ + u_ * qm) / den;
    if (b == 1 && d == 0) return (RingElem::one() - qm) / den;
    if (b == 0 && d == 1) return (RingElem::one() - u_ * v_ * qm) * x_ / den;
    return (RingElem::one() + v_ * x_ * qm) / den; // b == 0 && d == 0
}

FusedRule::FusedRule(RingElem x, RingElem u, RingElem v)
    : x_(std::move(x)), u_(std::move(u)), v_(std::move(v)), x_is_zero_(x_.is_zero()) {}

RingElem FusedRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d) return RingElem::zero();
    if (x_is_zero_) {
        // evaluate at a fresh variable and substitute 0: the weight is a
        // polynomial in the rapidity even though single summands are not
        VarId t = fresh_w_var({&u_, &v_});
        FusedRule generic(RingElem::var(t), u_, v_);
        return substitute(generic.weight(a, b, c, d), {{t, RingElem::zero()}});
    }
    // x^d sum_p (ux;q)_{c-p} (v/x;q)_p (x/v)^{p-b} [c+d-p choose c-p]_q [b choose p]_q,
    // with (v/x;q)_p (x/v)^{p-b} rewritten as v^{b-p} x^{-b} prod_{j<p}(x - q^j v)
    RingElem sum;
    const RingElem q = RingElem::q();
    for (int p = 0; p <= std::min(b, c); ++p) {
        RingElem term = q_binomial(c + d - p, c - p) * q_binomial(b, p);
        if (term.is_zero()) continue;
        term *= q_pochhammer(u_ * x_, c - p);
        term *= v_.pow(b - p);
        RingElem qj = RingElem::one();
        for (int j = 0; j < p; ++j) {
            term *= x_ - qj * v_;
            qj *= q;
        }
        sum += term;
    }
    if (sum.is_zero()) return sum;
    return x_.pow(d - b) * sum;
}

FusedDualRule::FusedDualRule(RingElem x, RingElem u, RingElem v)
    : inner_(std::move(x), v, u), u_(std::move(u)), v_(std::move(v)) {}

RingElem FusedDualRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + d != b + c) return RingElem::zero();
    RingElem w = inner_.weight(c, b, a, d);
    if (w.is_zero()) return w;
    const RingElem uv = u_ * v_;
    return q_pochhammer(uv, c) / q_pochhammer(uv, a) * q_factorial(a) / q_factorial(c) * w;
}

RingElem RThinRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || a > 1 || b < 0 || d < 0 || b > 1 || c > 1 || d > 1 ||
        a + b != c + d)
        return RingElem::zero();
    const RingElem q = RingElem::q();
    const RingElem r = y_ / x_;
    const RingElem den = RingElem::one() - q * r;
    if (b == 0 && d == 0) return a == 0 ? RingElem::one() : q * (RingElem::one() - r) / den;
    if (b == 1 && d == 1) return a == 1 ? RingElem::one() : (RingElem::one() - r) / den;
    if (a == 1 && b == 0) return (RingElem::one() - q) / den;          // (1,0,0,1)
    return (RingElem::one() - q) * r / den;                            // (0,1,1,0)
}

RingElem RThinDualRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || a > 1 || b < 0 || d < 0 || b > 1 || c > 1 || d > 1 ||
        a + d != b + c)
        return RingElem::zero();
    const RingElem q = RingElem::q();
    const RingElem xy = x_ * y_;
    const RingElem den = RingElem::one() - q * xy;
    if (b == 1 && d == 1) return a == 0 ? RingElem::one() : q * (RingElem::one() - xy) / den;
    if (b == 0 && d == 0) return a == 1 ? RingElem::one() : (RingElem::one() - xy) / den;
    if (a == 1 && b == 1) return (RingElem::one() - q) / den;          // (1,1,0,0)
    return (RingElem::one() - q) * xy / den;                           // (0,0,1,1)
}

RFusedRule::RFusedRule(RingElem x, RingElem y) : ratio_(x / y) {}

RingElem RFusedRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d || c < b) return RingElem::zero();
    RingElem bin = q_binomial(a, c - b);
    if (bin.is_zero()) return bin;
    return ratio_.pow(d) * q_pochhammer(ratio_, c - b) * bin;
}

RingElem RMixedRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || c < 0 || b < 0 || d < 0 || b > 1 || d > 1 || a + d != b + c)
        return RingElem::zero();
    const RingElem qm = q_power(a);
    const RingElem den = RingElem::one() + xy_;
    if (b == 1 && d == 1) return (xy_ + qm) / den;
    if (b == 1 && d == 0) return (RingElem::one() - qm) / den;
    if (b == 0 && d == 1) return xy_ / den;
    return RingElem::one() / den; // b == 0 && d == 0
}

RingElem ExpansionARule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d || b > c) return RingElem::zero();
    return q_binomial(a, c - b);
}

RingElem ExpansionBRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d || b > c) return RingElem::zero();
    RingElem bin = q_binomial(a, c - b);
    if (bin.is_zero()) return bin;
    int k = c - b;
    RingElem sign{(k % 2 == 0) ? 1 : -1};
    return sign * q_power(k * (k - 1) / 2) * bin;
}

RingElem ExpansionCRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d || c > b) return RingElem::zero();
    return q_binomial(b, c);
}

ExpansionDRule::ExpansionDRule(RingElem y, RingElem u, RingElem v)
    : y_(std::move(y)), u_(std::move(u)), v_(std::move(v)), y_is_zero_(y_.is_zero()) {}

RingElem ExpansionDRule::weight(int a, int b, int c, int d) const {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != c + d) return RingElem::zero();
    if (y_is_zero_) {
        VarId t = fresh_w_var({&u_, &v_});
        ExpansionDRule generic(RingElem::var(t), u_, v_);
        return substitute(generic.weight(a, b, c, d), {{t, RingElem::zero()}});
    }
    // y^{a-d} sum_p (u/y;q)_{c-p} (vy;q)_p (vy)^{b-p} [c+d-p choose c-p]_q [b choose p]_q,
    // with (u/y;q)_{c-p} rewritten as y^{-(c-p)} prod_{j<c-p}(y - q^j u)
    RingElem sum;
    const RingElem q = RingElem::q();
    const RingElem vy = v_ * y_;
    for (int p = 0; p <= std::min(b, c); ++p) {
        RingElem term = q_binomial(c + d - p, c - p) * q_binomial(b, p);
        if (term.is_zero()) continue;
        term *= q_pochhammer(vy, p) * vy.pow(b - p);
        RingElem qj = RingElem::one();
        for (int j = 0; j < c - p; ++j) {
            term *= y_ - qj * u_;
            qj *= q;
        }
        term *= y_.pow(a - d - (c - p));
        sum += term;
    }
    return sum;
}

std::unique_ptr<VertexRule> make_rule(const WeightFamily& f) {
    using Tag = WeightFamily::Tag;
    switch (f.tag) {
        case Tag::General: return std::make_unique<GeneralRule>(f.L, f.M, f.x / f.y);
        case Tag::Spin1Uv: return std::make_unique<Spin1Rule>(f.x, f.u, f.v);
        case Tag::Spin1UvDual: return std::make_unique<Spin1DualRule>(f.x, f.u, f.v);
        case Tag::FusedUv: return std::make_unique<FusedRule>(f.x, f.u, f.v);
        case Tag::FusedUvDual: return std::make_unique<FusedDualRule>(f.x, f.u, f.v);
        case Tag::RSpin1: return std::make_unique<RThinRule>(f.x, f.y);
        case Tag::RSpin1Dual: return std::make_unique<RThinDualRule>(f.x, f.y);
        case Tag::RFused: return std::make_unique<RFusedRule>(f.x, f.y);
        case Tag::RMixed: return std::make_unique<RMixedRule>(f.x, f.y);
        case Tag::ExpansionD: return std::make_unique<ExpansionDRule>(f.y, f.u, f.v);
        case Tag::ExpansionA: return std::make_unique<ExpansionARule>();
        case Tag::ExpansionB: return std::make_unique<ExpansionBRule>();
        case Tag::ExpansionC: return std::make_unique<ExpansionCRule>();
    }
    return nullptr;
}

RingElem eval_weight(const WeightFamily& family, const EdgeLabels& e) {
    return make_rule(family)->weight(e.a, e.b, e.c, e.d);
}

RingElem gauge_related_dual(const RingElem& x, const RingElem& u, const RingElem& v,
                            const EdgeLabels& e) {
    Spin1DualRule dual(x, v, u);
    RingElem w = dual.weight(e.c, e.b, e.a, e.d);
    if (w.is_zero()) return w;
    const RingElem uv = u * v;
    return q_pochhammer(uv, e.c) / q_pochhammer(uv, e.a) * q_factorial(e.a) /
           q_factorial(e.c) * w;
}

} // namespace latsym
