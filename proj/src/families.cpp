#include "latsym/families.hpp"

#include <functional>
#include <map>

namespace latsym {

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Schur: return "schur";
        case FamilyTag::HallLittlewoodQ: return "hall-littlewood";
        case FamilyTag::QWhittaker: return "q-whittaker";
        case FamilyTag::InhomQWhittakerF: return "inhom-f";
        case FamilyTag::DualInhomG: return "dual-inhom-g";
        case FamilyTag::GrothendieckG: return "grothendieck";
        case FamilyTag::DualGrothendieckLittleG: return "dual-grothendieck";
        case FamilyTag::WeakGrothendieckJ: return "weak-grothendieck";
        case FamilyTag::WeakDualLittleJ: return "weak-dual";
    }
    return "?";
}

namespace {

bool step_needs_strip(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::DualInhomG:
        case FamilyTag::DualGrothendieckLittleG: return false;
        default: return true;
    }
}

// number of nonzero rows of mu / (lambda_2, lambda_3, ...)
int rows_of_mu_over_shifted(const Partition& lambda, const Partition& mu) {
    int r = 0;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i + 1)) ++r;
    return r;
}

int nonzero_rows(const Partition& lambda, const Partition& mu) {
    int r = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) > mu.part(i)) ++r;
    return r;
}

int nonzero_columns(const Partition& lambda, const Partition& mu) {
    int c = 0;
    for (int j = 1; j <= lambda.first(); ++j)
        if (lambda.skew_column_boxes(mu, j) > 0) ++c;
    return c;
}

} // namespace

RingElem branching_one_var(FamilyTag tag, const Partition& lambda, const Partition& mu,
                           const RingElem& x, const FamilyParams& params) {
    const bool strip = lambda.interlaces_over(mu);
    const bool contained = lambda.contains(mu);
    const int boxes = lambda.size() - mu.size();
    switch (tag) {
        case FamilyTag::Schur:
            return strip ? x.pow(boxes) : RingElem::zero();

        case FamilyTag::HallLittlewoodQ: {
            if (!strip) return RingElem::zero();
            RingElem phi = RingElem::one();
            int top = std::max(lambda.first(), 1);
            auto ml = lambda.multiplicities(top);
            auto mm = mu.is_empty() ? std::vector<int>(top, 0) : mu.multiplicities(top);
            for (int i = 1; i <= top; ++i)
                if (ml[i - 1] == mm[i - 1] + 1)
                    phi *= RingElem::one() - q_power(ml[i - 1]);
            return phi * x.pow(boxes);
        }

        case FamilyTag::QWhittaker: {
            if (!strip) return RingElem::zero();
            RingElem r = x.pow(boxes);
            for (int i = 1; i <= lambda.length(); ++i)
                r *= q_binomial(lambda.part(i) - lambda.part(i + 1),
                                mu.part(i) - lambda.part(i + 1));
            return r;
        }

        case FamilyTag::InhomQWhittakerF: {
            if (!strip) return RingElem::zero();
            RingElem r = x.pow(boxes);
            for (int i = 1; i <= lambda.length(); ++i) {
                r *= q_pochhammer(params.u_at(i) * x, mu.part(i) - lambda.part(i + 1)) *
                     q_binomial(lambda.part(i) - lambda.part(i + 1),
                                mu.part(i) - lambda.part(i + 1));
            }
            return r;
        }

        case FamilyTag::DualInhomG: {
            if (!contained) return RingElem::zero();
            // product of the fused vertex weights at the skew labels, u = 0
            FusedRule rule(x, RingElem::zero(), params.deform);
            RingElem r = RingElem::one();
            for (int i = 1; i <= lambda.length(); ++i) {
                r *= rule.weight(lambda.part(i) - lambda.part(i + 1),
                                 lambda.part(i + 1) - mu.part(i + 1),
                                 mu.part(i) - mu.part(i + 1), lambda.part(i) - mu.part(i));
                if (r.is_zero()) return r;
            }
            return r;
        }

        case FamilyTag::GrothendieckG: {
            if (!strip) return RingElem::zero();
            return x.pow(boxes) *
                   (RingElem::one() - params.deform * x).pow(rows_of_mu_over_shifted(lambda, mu));
        }

        case FamilyTag::DualGrothendieckLittleG: {
            if (!contained) return RingElem::zero();
            int c = nonzero_columns(lambda, mu);
            return params.deform.pow(boxes - c) * x.pow(c);
        }

        case FamilyTag::WeakGrothendieckJ: {
            if (!strip) return RingElem::zero();
            RingElem den = RingElem::one() + params.deform * x;
            return x.pow(boxes) / den.pow(boxes + rows_of_mu_over_shifted(lambda, mu));
        }

        case FamilyTag::WeakDualLittleJ: {
            if (!strip) return RingElem::zero();
            int r = nonzero_rows(lambda, mu);
            return x.pow(r) * (x + params.deform).pow(boxes - r);
        }
    }
    return RingElem::zero();
}

RingElem multivar_oracle(FamilyTag tag, const Partition& lambda,
                         const std::vector<RingElem>& xs, const FamilyParams& params) {
    const bool strip = step_needs_strip(tag);
    std::map<std::pair<std::vector<int>, int>, RingElem> memo;
    std::function<RingElem(const Partition&, int)> down = [&](const Partition& nu,
                                                              int k) -> RingElem {
        if (k == 0) return RingElem(nu.is_empty() ? 1 : 0);
        auto key = std::make_pair(nu.parts(), k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        RingElem total;
        for (const Partition& prev : enumerate_sub_partitions(nu)) {
            if (strip && !nu.interlaces_over(prev)) continue;
            RingElem b = branching_one_var(tag, nu, prev, xs[k - 1], params);
            if (b.is_zero()) continue;
            total += b * down(prev, k - 1);
        }
        memo.emplace(key, total);
        return total;
    };
    return down(lambda, static_cast<int>(xs.size()));
}

RingElem degeneration_of_lattice(FamilyTag tag, const Partition& lambda, const Partition& mu,
                                 const std::vector<RingElem>& xs, const FamilyParams& params) {
    const RingElem zero = RingElem::zero();
    const RingElem& a = params.deform;
    bool j_side = false, q_to_zero = false;
    RingElem u = zero, v = zero;
    switch (tag) {
        case FamilyTag::Schur: j_side = true; q_to_zero = true; break;
        case FamilyTag::HallLittlewoodQ: j_side = true; break;
        case FamilyTag::WeakGrothendieckJ: j_side = true; q_to_zero = true; u = a; break;
        case FamilyTag::WeakDualLittleJ: j_side = true; q_to_zero = true; v = a; break;
        case FamilyTag::QWhittaker: break;
        case FamilyTag::InhomQWhittakerF: break; // per-column u below
        case FamilyTag::DualInhomG: v = a; break;
        case FamilyTag::GrothendieckG: q_to_zero = true; u = a; break;
        case FamilyTag::DualGrothendieckLittleG: q_to_zero = true; v = a; break;
    }
    RingElem value;
    if (j_side) {
        int width = std::max({lambda.first(), mu.first(), 1}) + 1;
        value = skew_j(lambda, mu, xs, ColumnParams::constant(width, u, v));
    } else {
        int width = std::max({lambda.length(), mu.length(), 1}) + 1;
        ColumnParams cols = ColumnParams::constant(width, u, v);
        if (tag == FamilyTag::InhomQWhittakerF)
            for (int i = 1; i <= width; ++i) cols.pairs[i - 1].first = params.u_at(i);
        value = skew_g(lambda, mu, xs, cols);
    }
    if (q_to_zero) value = substitute(value, {{VarId::q(), RingElem::zero()}});
    return value;
}

Rat schur_by_alternants(const Partition& lambda, const std::vector<Rat>& points) {
    const int n = static_cast<int>(points.size());
    auto det = [n](std::vector<std::vector<Rat>> m) -> Rat {
        Rat d(1);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int row = col; row < n; ++row)
                if (m[row][col] != 0) { pivot = row; break; }
            if (pivot < 0) return Rat(0);
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                d = -d;
            }
            d *= m[col][col];
            for (int row = col + 1; row < n; ++row) {
                Rat f = m[row][col] / m[col][col];
                for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            }
        }
        return d;
    };
    auto power = [](const Rat& x, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    };
    std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n)), den(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            num[i][j] = power(points[i], lambda.part(j + 1) + n - j - 1);
            den[i][j] = power(points[i], n - j - 1);
        }
    }
    Rat d = det(den);
    if (d == 0) throw ZeroDenominator("schur_by_alternants: coincident points");
    return det(num) / d;
}

} // namespace latsym
