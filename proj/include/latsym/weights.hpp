#pragma once

#include <memory>

#include "latsym/qfun.hpp"
#include "latsym/ring_elem.hpp"

namespace latsym {

// Edge labels of one vertex: bottom, left, top, right.
struct EdgeLabels {
    int a, b, c, d;
};

// One vertex rule: a pure map from edge labels to an exact weight.
// `reversed` marks rules whose horizontal line carries particles
// right-to-left, so conservation reads a + d = b + c instead of a + b = c + d.
// horizontal_cap() bounds the left/right labels (1 for spin-1 lines).
class VertexRule {
public:
    static constexpr int kUnbounded = 1 << 20;

    virtual ~VertexRule() = default;
    virtual RingElem weight(int a, int b, int c, int d) const = 0;
    virtual int horizontal_cap() const { return kUnbounded; }
    virtual bool reversed() const { return false; }

    bool conserves(int a, int b, int c, int d) const {
        return reversed() ? (a + d == b + c) : (a + b == c + d);
    }
    // Solves the top label from conservation given bottom, left, right.
    int top_from(int a, int b, int d) const { return reversed() ? a + d - b : a + b - d; }
    // Solves the right label given bottom, left, top; may be negative (invalid).
    int right_from(int a, int b, int c) const { return reversed() ? b + c - a : a + b - c; }
};

// Phi(lam, mu; x, y) =
//   (x;q)_lam (y/x;q)_{mu-lam} / (y;q)_mu * (y/x)^lam * (mu choose lam)_q,
// zero unless 0 <= lam <= mu.
RingElem phi(int lam, int mu, const RingElem& x, const RingElem& y);

// Weight of the generic vertex with spin bounds kept formal:
// q_neg_L and q_neg_M stand for q^{-L} and q^{-M} and may be any nonzero
// ring elements.
RingElem general_weight_formal(const RingElem& z, const RingElem& q_neg_L,
                               const RingElem& q_neg_M, int a, int b, int c, int d);

// Generic two-spin vertex, horizontal spin L against vertical spin M,
// spectral ratio z = x/y. Labels outside the spin bounds weigh zero.
class GeneralRule : public VertexRule {
public:
    GeneralRule(int L, int M, RingElem z);
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return L_; }

private:
    int L_, M_;
    RingElem z_, q_neg_L_, q_neg_M_;
};

// Spin-1 row vertex with column pair (u, v).
class Spin1Rule : public VertexRule {
public:
    Spin1Rule(RingElem x, RingElem u, RingElem v)
        : x_(std::move(x)), u_(std::move(u)), v_(std::move(v)) {}
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return 1; }

private:
    RingElem x_, u_, v_;
};

// Reversed spin-1 row vertex (dual weights).
class Spin1DualRule : public VertexRule {
public:
    Spin1DualRule(RingElem x, RingElem u, RingElem v)
        : x_(std::move(x)), u_(std::move(u)), v_(std::move(v)) {}
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return 1; }
    bool reversed() const override { return true; }

private:
    RingElem x_, u_, v_;
};

// Fused row vertex: all four labels unbounded.
class FusedRule : public VertexRule {
public:
    FusedRule(RingElem x, RingElem u, RingElem v);
    RingElem weight(int a, int b, int c, int d) const override;

private:
    RingElem x_, u_, v_;
    bool x_is_zero_;
};

// Reversed fused row vertex, defined through the gauge relation from the
// fused weights with u and v interchanged.
class FusedDualRule : public VertexRule {
public:
    FusedDualRule(RingElem x, RingElem u, RingElem v);
    RingElem weight(int a, int b, int c, int d) const override;
    bool reversed() const override { return true; }

private:
    FusedRule inner_; // carries (x, v, u)
    RingElem u_, v_;
};

// Crossing of two spin-1 lines with rapidities x (horizontal) and y (vertical).
class RThinRule : public VertexRule {
public:
    RThinRule(RingElem x, RingElem y) : x_(std::move(x)), y_(std::move(y)) {}
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return 1; }

private:
    RingElem x_, y_;
};

// Crossing of a reversed spin-1 line (x) with a spin-1 line (y).
class RThinDualRule : public VertexRule {
public:
    RThinDualRule(RingElem x, RingElem y) : x_(std::move(x)), y_(std::move(y)) {}
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return 1; }
    bool reversed() const override { return true; }

private:
    RingElem x_, y_;
};

// Crossing of two fused lines, spectral ratio x/y.
class RFusedRule : public VertexRule {
public:
    RFusedRule(RingElem x, RingElem y);
    RingElem weight(int a, int b, int c, int d) const override;

private:
    RingElem ratio_;
};

// Crossing of a reversed spin-1 line (x) with a fused line (y); the fused
// line plays the vertical role. Obtained from the generic vertex by the
// same substitutions that produce the dual spin-1 weights.
class RMixedRule : public VertexRule {
public:
    RMixedRule(RingElem x, RingElem y) : xy_(x * y) {}
    RingElem weight(int a, int b, int c, int d) const override;
    int horizontal_cap() const override { return 1; }
    bool reversed() const override { return true; }

private:
    RingElem xy_;
};

// Transition-coefficient grid weights. A, B, C are parameter-free tables in
// q; D carries the full (y; u, v) dependence and degenerates to the others.
class ExpansionARule : public VertexRule {
public:
    RingElem weight(int a, int b, int c, int d) const override;
};
class ExpansionBRule : public VertexRule {
public:
    RingElem weight(int a, int b, int c, int d) const override;
};
class ExpansionCRule : public VertexRule {
public:
    RingElem weight(int a, int b, int c, int d) const override;
};
class ExpansionDRule : public VertexRule {
public:
    ExpansionDRule(RingElem y, RingElem u, RingElem v);
    RingElem weight(int a, int b, int c, int d) const override;

private:
    RingElem y_, u_, v_;
    bool y_is_zero_;
};

// Tagged weight family plus its parameter bundle; one evaluation entry point.
struct WeightFamily {
    enum class Tag {
        General,     // needs L, M, x, y
        Spin1Uv,     // x, u, v
        Spin1UvDual, // x, u, v
        FusedUv,     // x, u, v
        FusedUvDual, // x, u, v
        RSpin1,      // x, y
        RSpin1Dual,  // x, y
        RFused,      // x, y
        RMixed,      // x, y
        ExpansionD,  // y, u, v
        ExpansionA,
        ExpansionB,
        ExpansionC,
    };

    Tag tag;
    int L = 1, M = 1;
    RingElem x, y, u, v;
};

std::unique_ptr<VertexRule> make_rule(const WeightFamily& family);
RingElem eval_weight(const WeightFamily& family, const EdgeLabels& e);

// ((uv;q)_c / (uv;q)_a) ((q;q)_a / (q;q)_c) * W*_{x,(v,u)}(c, b, a, d);
// identically equal to the spin-1 weight W_{x,(u,v)}(a, b, c, d).
RingElem gauge_related_dual(const RingElem& x, const RingElem& u, const RingElem& v,
                            const EdgeLabels& e);

// A w-variable not occurring in any of the given elements.
VarId fresh_w_var(std::initializer_list<const RingElem*> elems);

} // namespace latsym
