#include "latsym/identities.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace latsym {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// Memoizing wrapper; one instance per thread of use.
class CachedRule : public VertexRule {
public:
    explicit CachedRule(const VertexRule& inner) : inner_(inner) {}
    RingElem weight(int a, int b, int c, int d) const override {
        std::array<int, 4> key{a, b, c, d};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        RingElem w = inner_.weight(a, b, c, d);
        cache_.emplace(key, w);
        return w;
    }
    int horizontal_cap() const override { return inner_.horizontal_cap(); }
    bool reversed() const override { return inner_.reversed(); }

private:
    const VertexRule& inner_;
    mutable std::map<std::array<int, 4>, RingElem> cache_;
};

template <typename Body>
VerificationReport run_chunks(long count, int jobs, Body&& body) {
    // body(first, last, report&) must be self-contained per chunk
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        VerificationReport r;
        body(0L, count, r);
        return r;
    }
    long chunk = (count + jobs - 1) / jobs;
    std::vector<VerificationReport> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        long first = t * chunk, last = std::min(count, first + chunk);
        if (first >= last) break;
        threads.emplace_back([&parts, t, first, last, &body] { body(first, last, parts[t]); });
    }
    for (auto& th : threads) th.join();
    VerificationReport total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

} // namespace

std::string YbeBoundary::to_string() const {
    std::ostringstream s;
    s << "a=(" << a1 << "," << a2 << "," << a3 << ") b=(" << b1 << "," << b2 << "," << b3 << ")";
    return s.str();
}

bool check_ybe_instance(const VertexRule& cross, const VertexRule& xcol, const VertexRule& ycol,
                        const YbeBoundary& bdy, RingElem* lhs_out, RingElem* rhs_out) {
    const int S = bdy.a1 + bdy.a2 + bdy.a3 + bdy.b1 + bdy.b2 + bdy.b3;
    RingElem lhs, rhs;
    for (int c1 = 0; c1 <= S; ++c1) {
        int c2 = cross.right_from(bdy.a1, bdy.a2, c1);
        if (c2 < 0) continue;
        RingElem w1 = cross.weight(bdy.a1, bdy.a2, c1, c2);
        if (w1.is_zero()) continue;
        int c3 = xcol.top_from(bdy.a3, c2, bdy.b2);
        if (c3 < 0) continue;
        RingElem w2 = xcol.weight(bdy.a3, c2, c3, bdy.b2);
        if (w2.is_zero()) continue;
        RingElem w3 = ycol.weight(c3, c1, bdy.b3, bdy.b1);
        if (w3.is_zero()) continue;
        lhs += w1 * w2 * w3;
    }
    for (int c1 = 0; c1 <= S; ++c1) {
        int c3 = ycol.top_from(bdy.a3, bdy.a1, c1);
        if (c3 < 0) continue;
        RingElem w1 = ycol.weight(bdy.a3, bdy.a1, c3, c1);
        if (w1.is_zero()) continue;
        int c2 = xcol.right_from(c3, bdy.a2, bdy.b3);
        if (c2 < 0) continue;
        RingElem w2 = xcol.weight(c3, bdy.a2, bdy.b3, c2);
        if (w2.is_zero()) continue;
        RingElem w3 = cross.weight(c1, c2, bdy.b1, bdy.b2);
        if (w3.is_zero()) continue;
        rhs += w1 * w2 * w3;
    }
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return lhs == rhs;
}

namespace {

struct YbeRules {
    std::unique_ptr<VertexRule> cross, xcol, ycol;
};

YbeRules make_ybe_rules(YbeKind kind, int L, int M, int N) {
    const RingElem x = RingElem::var(VarId::x(1));
    const RingElem y = RingElem::var(VarId::x(2));
    const RingElem z = RingElem::var(VarId::x(3));
    const RingElem u = RingElem::var(VarId::u(1));
    const RingElem v = RingElem::var(VarId::v(1));
    YbeRules r;
    switch (kind) {
        case YbeKind::General:
            r.cross = std::make_unique<GeneralRule>(L, M, x / y);
            r.xcol = std::make_unique<GeneralRule>(L, N, x / z);
            r.ycol = std::make_unique<GeneralRule>(M, N, y / z);
            break;
        case YbeKind::Spin1:
            r.cross = std::make_unique<RThinRule>(x, y);
            r.xcol = std::make_unique<Spin1Rule>(x, u, v);
            r.ycol = std::make_unique<Spin1Rule>(y, u, v);
            break;
        case YbeKind::Fused:
            r.cross = std::make_unique<RFusedRule>(x, y);
            r.xcol = std::make_unique<FusedRule>(x, u, v);
            r.ycol = std::make_unique<FusedRule>(y, u, v);
            break;
        case YbeKind::Mixed:
            r.cross = std::make_unique<RMixedRule>(x, y);
            r.xcol = std::make_unique<Spin1DualRule>(x, u, v);
            r.ycol = std::make_unique<FusedRule>(y, u, v);
            break;
    }
    return r;
}

const char* ybe_kind_name(YbeKind k) {
    switch (k) {
        case YbeKind::General: return "ybe-general";
        case YbeKind::Spin1: return "ybe-spin1";
        case YbeKind::Fused: return "ybe-fused";
        case YbeKind::Mixed: return "ybe-mixed";
    }
    return "ybe";
}

} // namespace

VerificationReport verify_ybe(YbeKind kind, int L, int M, int N, int line_max, int col_max,
                              int jobs) {
    Timer timer;
    // ranges per label position
    int ra1 = 0, ra2 = 0, ra3 = col_max, rb1 = 0, rb2 = 0, rb3 = col_max;
    switch (kind) {
        case YbeKind::General:
            ra2 = rb2 = L; ra1 = rb1 = M; ra3 = rb3 = N;
            break;
        case YbeKind::Spin1:
            ra1 = ra2 = rb1 = rb2 = 1;
            break;
        case YbeKind::Fused:
            ra1 = ra2 = rb1 = rb2 = line_max;
            break;
        case YbeKind::Mixed:
            ra2 = rb2 = 1; ra1 = rb1 = line_max;
            break;
    }
    std::vector<YbeBoundary> boundaries;
    for (int a1 = 0; a1 <= ra1; ++a1)
        for (int a2 = 0; a2 <= ra2; ++a2)
            for (int a3 = 0; a3 <= ra3; ++a3)
                for (int b1 = 0; b1 <= rb1; ++b1)
                    for (int b2 = 0; b2 <= rb2; ++b2)
                        for (int b3 = 0; b3 <= rb3; ++b3)
                            boundaries.push_back({a1, a2, a3, b1, b2, b3});

    VerificationReport report =
        run_chunks(static_cast<long>(boundaries.size()), jobs,
                   [&](long first, long last, VerificationReport& out) {
                       YbeRules rules = make_ybe_rules(kind, L, M, N);
                       CachedRule cross(*rules.cross), xcol(*rules.xcol), ycol(*rules.ycol);
                       for (long i = first; i < last; ++i) {
                           RingElem lhs, rhs;
                           bool ok = check_ybe_instance(cross, xcol, ycol, boundaries[i], &lhs, &rhs);
                           out.record(ok, boundaries[i].to_string(), lhs, rhs);
                       }
                   });
    report.identity_id = ybe_kind_name(kind);
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_stochasticity(int Lmax, int Mmax) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "stochasticity";
    const RingElem one = RingElem::one();
    for (int L = 1; L <= Lmax; ++L) {
        for (int M = 1; M <= Mmax; ++M) {
            GeneralRule rule(L, M, RingElem::var(VarId::x(1)));
            for (int a = 0; a <= M; ++a) {
                for (int b = 0; b <= L; ++b) {
                    RingElem sum;
                    for (int c = std::max(0, a + b - L); c <= std::min(M, a + b); ++c)
                        sum += rule.weight(a, b, c, a + b - c);
                    std::ostringstream inst;
                    inst << "L=" << L << " M=" << M << " a=" << a << " b=" << b;
                    report.record(sum == one, inst.str(), sum, one);
                }
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_fused_r_sum(int max_label) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "fused-r-sum";
    RFusedRule rule(RingElem::var(VarId::x(1)), RingElem::var(VarId::x(2)));
    const RingElem one = RingElem::one();
    for (int a = 0; a <= max_label; ++a) {
        for (int b = 0; b <= max_label; ++b) {
            RingElem sum;
            for (int c = 0; c <= a + b; ++c) sum += rule.weight(a, b, c, a + b - c);
            std::ostringstream inst;
            inst << "a=" << a << " b=" << b;
            report.record(sum == one, inst.str(), sum, one);
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_gauge(int max_label) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "gauge";
    const RingElem x = RingElem::var(VarId::x(1));
    const RingElem u = RingElem::var(VarId::u(1));
    const RingElem v = RingElem::var(VarId::v(1));
    Spin1Rule rule(x, u, v);
    for (int a = 0; a <= max_label; ++a)
        for (int c = 0; c <= max_label; ++c)
            for (int b = 0; b <= 1; ++b)
                for (int d = 0; d <= 1; ++d) {
                    RingElem lhs = rule.weight(a, b, c, d);
                    RingElem rhs = gauge_related_dual(x, u, v, {a, b, c, d});
                    std::ostringstream inst;
                    inst << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
                    report.record(lhs == rhs, inst.str(), lhs, rhs);
                }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_gauge_and_stochasticity(int max_label) {
    Timer timer;
    VerificationReport report = verify_gauge(max_label);
    report.merge(verify_stochasticity(3, 3));
    report.identity_id = "gauge-and-stochasticity";
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

// Shared machinery of the three truncated Cauchy checks.
struct CauchySetup {
    VarSet vars = VarSet::of_kinds({VarId::Kind::X, VarId::Kind::Y, VarId::Kind::U, VarId::Kind::V});
    std::vector<RingElem> xs, ys;
    ColumnParams cols, cols_swapped;
    int degree;

    CauchySetup(const CauchyOptions& opt, int width) : degree(opt.degree) {
        for (int i = 1; i <= opt.n; ++i) xs.push_back(RingElem::var(VarId::x(i)));
        for (int j = 1; j <= opt.m; ++j) ys.push_back(RingElem::var(VarId::y(j)));
        cols = opt.uniform_params
                   ? ColumnParams::constant(width, RingElem::var(VarId::u(1)),
                                            RingElem::var(VarId::v(1)))
                   : ColumnParams::symbolic(width);
        cols_swapped = cols.swapped();
    }

    RingElem trunc(const RingElem& f) const { return truncate(f, vars, degree); }
    RingElem tmul(const RingElem& a, const RingElem& b) const { return trunc(a * b); }
};

std::string cauchy_instance_string(const Partition& lambda, const Partition& mu,
                                   const CauchyOptions& opt) {
    std::ostringstream s;
    s << "lambda=" << lambda.to_string() << " mu=" << mu.to_string() << " n=" << opt.n
      << " m=" << opt.m << " D=" << opt.degree;
    return s.str();
}

} // namespace

VerificationReport verify_cauchy_j(const Partition& lambda, const Partition& mu,
                                   const CauchyOptions& opt) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "cauchy-j";
    const Partition base = partition_union(lambda, mu);
    const int extra = lambda.size() + mu.size() + opt.degree - base.size();
    const int max_height = std::min(lambda.length() + opt.n, mu.length() + opt.m);
    auto supers = enumerate_super_partitions(base, extra, base.first() + extra, max_height);
    int width = 1;
    for (const auto& k : supers) width = std::max(width, k.first() + 1);
    CauchySetup cs(opt, width);

    RingElem lhs;
    const RingElem c_lambda = normalization_c(lambda, cs.cols);
    for (const auto& kappa : supers) {
        if (kappa.size() - lambda.size() > opt.degree ||
            kappa.size() - mu.size() > opt.degree)
            continue; // every box costs at least one unit of joint degree
        RingElem jx = cs.trunc(skew_j(kappa, lambda, cs.xs, cs.cols_swapped));
        if (jx.is_zero()) continue;
        RingElem jy = cs.trunc(skew_j(kappa, mu, cs.ys, cs.cols));
        if (jy.is_zero()) continue;
        RingElem ratio = cs.trunc(normalization_c(kappa, cs.cols) / c_lambda);
        lhs += cs.tmul(cs.tmul(ratio, jx), jy);
    }
    lhs = cs.trunc(lhs);

    RingElem kernel = RingElem::one();
    const RingElem q = RingElem::q();
    for (const auto& x : cs.xs)
        for (const auto& y : cs.ys)
            kernel = cs.tmul(kernel,
                             cs.trunc((RingElem::one() - q * x * y) / (RingElem::one() - x * y)));
    RingElem rhs_sum;
    const RingElem c_mu = normalization_c(mu, cs.cols);
    for (const auto& kappa : enumerate_sub_partitions(partition_intersection(lambda, mu))) {
        RingElem jx = cs.trunc(skew_j(mu, kappa, cs.xs, cs.cols_swapped));
        if (jx.is_zero()) continue;
        RingElem jy = cs.trunc(skew_j(lambda, kappa, cs.ys, cs.cols));
        if (jy.is_zero()) continue;
        RingElem ratio = cs.trunc(c_mu / normalization_c(kappa, cs.cols));
        rhs_sum += cs.tmul(cs.tmul(ratio, jx), jy);
    }
    RingElem rhs = cs.tmul(kernel, rhs_sum);

    report.record(lhs == rhs, cauchy_instance_string(lambda, mu, opt), lhs, rhs);
    // re-truncation monotonicity: a pass at D implies passes at each D' < D
    for (int dd = opt.degree - 1; dd >= 0 && report.pass(); --dd) {
        RingElem l2 = truncate(lhs, cs.vars, dd), r2 = truncate(rhs, cs.vars, dd);
        report.record(l2 == r2, cauchy_instance_string(lambda, mu, opt) + " re-truncated D=" +
                                    std::to_string(dd),
                      l2, r2);
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_cauchy_g(const Partition& lambda, const Partition& mu,
                                   const CauchyOptions& opt) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "cauchy-g";
    const Partition base = partition_union(lambda, mu);
    const int budget = lambda.size() + mu.size() + opt.degree;
    auto supers = enumerate_super_partitions(base, budget - base.size(), base.first() + budget,
                                             budget);
    int width = 1;
    for (const auto& k : supers) width = std::max(width, k.length() + 1);
    CauchySetup cs(opt, width);

    auto norm = [&](const Partition& p) {
        return opt.conjugate_normalization ? normalization_c_conjugate(p, cs.cols)
                                           : normalization_c(p, cs.cols);
    };

    RingElem lhs;
    const RingElem c_lambda = norm(lambda);
    for (const auto& kappa : supers) {
        if (kappa.size() - lambda.size() > opt.degree ||
            kappa.size() - mu.size() > opt.degree)
            continue;
        RingElem gx = cs.trunc(skew_g(kappa, lambda, cs.xs, cs.cols_swapped));
        if (gx.is_zero()) continue;
        RingElem gy = cs.trunc(skew_g(kappa, mu, cs.ys, cs.cols));
        if (gy.is_zero()) continue;
        RingElem ratio = cs.trunc(norm(kappa) / c_lambda);
        lhs += cs.tmul(cs.tmul(ratio, gx), gy);
    }
    lhs = cs.trunc(lhs);

    RingElem kernel = RingElem::one();
    for (const auto& x : cs.xs)
        for (const auto& y : cs.ys)
            kernel = cs.tmul(kernel, cs.trunc(q_exp_inverse_series(x * y, opt.degree)));
    RingElem rhs_sum;
    const RingElem c_mu = norm(mu);
    for (const auto& kappa : enumerate_sub_partitions(partition_intersection(lambda, mu))) {
        RingElem gx = cs.trunc(skew_g(mu, kappa, cs.xs, cs.cols_swapped));
        if (gx.is_zero()) continue;
        RingElem gy = cs.trunc(skew_g(lambda, kappa, cs.ys, cs.cols));
        if (gy.is_zero()) continue;
        RingElem ratio = cs.trunc(c_mu / norm(kappa));
        rhs_sum += cs.tmul(cs.tmul(ratio, gx), gy);
    }
    RingElem rhs = cs.tmul(kernel, rhs_sum);

    report.record(lhs == rhs, cauchy_instance_string(lambda, mu, opt), lhs, rhs);
    for (int dd = opt.degree - 1; dd >= 0 && report.pass(); --dd) {
        RingElem l2 = truncate(lhs, cs.vars, dd), r2 = truncate(rhs, cs.vars, dd);
        report.record(l2 == r2, cauchy_instance_string(lambda, mu, opt) + " re-truncated D=" +
                                    std::to_string(dd),
                      l2, r2);
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_cauchy_mixed(const Partition& lambda, const Partition& mu,
                                       const CauchyOptions& opt) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "cauchy-mixed";
    const Partition base = partition_union(lambda, mu);
    const int budget = lambda.size() + mu.size() + opt.degree;
    auto supers = enumerate_super_partitions(base, budget - base.size(), base.first() + budget,
                                             budget);
    int width = 1;
    for (const auto& k : supers) width = std::max(width, std::max(k.length(), k.first()) + 1);
    CauchySetup cs(opt, width);

    auto norm_conj = [&](const Partition& p) {
        return opt.conjugate_normalization ? normalization_c_conjugate(p, cs.cols)
                                           : normalization_c(p, cs.cols);
    };

    RingElem lhs;
    const RingElem c_mu = norm_conj(mu);
    for (const auto& kappa : supers) {
        if (kappa.size() - lambda.size() > opt.degree ||
            kappa.size() - mu.size() > opt.degree)
            continue;
        RingElem gx = cs.trunc(skew_g(kappa, lambda, cs.xs, cs.cols));
        if (gx.is_zero()) continue;
        RingElem jy =
            cs.trunc(skew_j(kappa.conjugate(), mu.conjugate(), cs.ys, cs.cols_swapped));
        if (jy.is_zero()) continue;
        RingElem ratio = cs.trunc(norm_conj(kappa) / c_mu);
        lhs += cs.tmul(cs.tmul(ratio, gx), jy);
    }
    lhs = cs.trunc(lhs);

    RingElem kernel = RingElem::one();
    for (const auto& x : cs.xs)
        for (const auto& y : cs.ys) kernel = cs.tmul(kernel, RingElem::one() + x * y);
    RingElem rhs_sum;
    const RingElem c_lambda = norm_conj(lambda);
    for (const auto& kappa : enumerate_sub_partitions(partition_intersection(lambda, mu))) {
        RingElem gx = cs.trunc(skew_g(mu, kappa, cs.xs, cs.cols));
        if (gx.is_zero()) continue;
        RingElem jy =
            cs.trunc(skew_j(lambda.conjugate(), kappa.conjugate(), cs.ys, cs.cols_swapped));
        if (jy.is_zero()) continue;
        RingElem ratio = cs.trunc(c_lambda / norm_conj(kappa));
        rhs_sum += cs.tmul(cs.tmul(ratio, gx), jy);
    }
    RingElem rhs = cs.tmul(kernel, rhs_sum);

    report.record(lhs == rhs, cauchy_instance_string(lambda, mu, opt), lhs, rhs);
    for (int dd = opt.degree - 1; dd >= 0 && report.pass(); --dd) {
        RingElem l2 = truncate(lhs, cs.vars, dd), r2 = truncate(rhs, cs.vars, dd);
        report.record(l2 == r2, cauchy_instance_string(lambda, mu, opt) + " re-truncated D=" +
                                    std::to_string(dd),
                      l2, r2);
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

RingElem fusion_normalization(int j, int L) {
    return q_power(j * (j - 1) / 2) * q_factorial(L) / (q_factorial(j) * q_factorial(L - j));
}

VerificationReport verify_fusion(int L, int M, int columns) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "fusion";
    const RingElem x = RingElem::var(VarId::x(1));
    const RingElem q = RingElem::q();

    // Z_j(L) against its defining enumeration over 0/1 vectors
    for (int j = 0; j <= L; ++j) {
        RingElem direct;
        for (int mask = 0; mask < (1 << L); ++mask) {
            int bits = 0, stat = 0;
            for (int m = 1; m <= L; ++m)
                if (mask & (1 << (m - 1))) { ++bits; stat += m - 1; }
            if (bits == j) direct += q_power(stat);
        }
        RingElem closed = fusion_normalization(j, L);
        std::ostringstream inst;
        inst << "Z_" << j << "(" << L << ")";
        report.record(direct == closed, inst.str(), direct, closed);
    }

    // column rapidities y_1 (rightmost) .. y_columns
    std::vector<RingElem> ys;
    for (int t = 1; t <= columns; ++t) ys.push_back(RingElem::var(VarId::y(t)));

    // fused row rule per column, and the L-row stack of spin-1 rules
    std::vector<std::unique_ptr<GeneralRule>> fused_owned;
    std::vector<std::unique_ptr<CachedRule>> fused_cached;
    for (int t = 0; t < columns; ++t) {
        fused_owned.push_back(std::make_unique<GeneralRule>(L, M, x / ys[t]));
        fused_cached.push_back(std::make_unique<CachedRule>(*fused_owned.back()));
    }
    std::vector<std::vector<std::unique_ptr<GeneralRule>>> thin_owned(L);
    std::vector<std::vector<const VertexRule*>> thin_rules(L);
    std::vector<std::vector<std::unique_ptr<CachedRule>>> thin_cached(L);
    for (int r = 0; r < L; ++r) {
        RingElem xr = x * q_power(r);
        for (int t = 0; t < columns; ++t) {
            thin_owned[r].push_back(std::make_unique<GeneralRule>(1, M, xr / ys[t]));
            thin_cached[r].push_back(std::make_unique<CachedRule>(*thin_owned[r].back()));
            thin_rules[r].push_back(thin_cached[r].back().get());
        }
    }

    std::vector<int> i_vec(columns), k_vec(columns);
    std::function<void(int, bool)> loop = [&](int pos, bool filling_i) {
        if (filling_i && pos == columns) { loop(0, false); return; }
        if (!filling_i && pos == columns) {
            for (int j = 0; j <= L; ++j) {
                for (int l = 0; l <= L; ++l) {
                    // forced sweep of the fused row, columns left to right
                    RingElem lhs = RingElem::one();
                    int carry = j;
                    for (int t = columns - 1; t >= 0 && !lhs.is_zero(); --t) {
                        int d = carry + i_vec[t] - k_vec[t];
                        if (d < 0) { lhs = RingElem::zero(); break; }
                        lhs *= fused_cached[t]->weight(i_vec[t], carry, k_vec[t], d);
                        carry = d;
                    }
                    if (!lhs.is_zero() && carry != l) lhs = RingElem::zero();

                    RingElem rhs;
                    for (int amask = 0; amask < (1 << L); ++amask) {
                        int abits = 0, astat = 0;
                        for (int m = 1; m <= L; ++m)
                            if (amask & (1 << (m - 1))) { ++abits; astat += m - 1; }
                        if (abits != j) continue;
                        for (int bmask = 0; bmask < (1 << L); ++bmask) {
                            int bbits = 0;
                            for (int m = 1; m <= L; ++m)
                                if (bmask & (1 << (m - 1))) ++bbits;
                            if (bbits != l) continue;
                            BruteBoundary bdy;
                            bdy.bottom = i_vec;
                            bdy.top = k_vec;
                            for (int r = 0; r < L; ++r)
                                bdy.left.push_back((amask >> r) & 1);
                            std::vector<int> right;
                            for (int r = 0; r < L; ++r) right.push_back((bmask >> r) & 1);
                            bdy.right = right;
                            RingElem z = brute_force_z_rules(thin_rules, bdy, M);
                            if (!z.is_zero()) rhs += q_power(astat) * z;
                        }
                    }
                    if (!rhs.is_zero()) rhs = rhs / fusion_normalization(j, L);
                    std::ostringstream inst;
                    inst << "j=" << j << " l=" << l << " i=(";
                    for (int t = 0; t < columns; ++t) inst << i_vec[t] << (t + 1 < columns ? "," : "");
                    inst << ") k=(";
                    for (int t = 0; t < columns; ++t) inst << k_vec[t] << (t + 1 < columns ? "," : "");
                    inst << ")";
                    report.record(lhs == rhs, inst.str(), lhs, rhs);
                }
            }
            return;
        }
        auto& vec = filling_i ? i_vec : k_vec;
        for (int val = 0; val <= M; ++val) {
            vec[pos] = val;
            loop(pos + 1, filling_i);
        }
    };
    loop(0, true);
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

std::vector<RingElem> spectral_vars(int n) {
    std::vector<RingElem> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(RingElem::var(VarId::x(i)));
    return xs;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> all;
    for (const auto& p :
         enumerate_sub_partitions(Partition(std::vector<int>(max_size, max_size))))
        if (p.size() <= max_size) all.push_back(p);
    return all;
}

} // namespace

VerificationReport verify_symmetry(int max_size, int n) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "symmetry";
    auto xs = spectral_vars(n);
    for (const auto& lambda : partitions_up_to(max_size)) {
        ColumnParams cols_j = ColumnParams::symbolic(std::max(lambda.first(), 1) + 1);
        ColumnParams cols_g = ColumnParams::symbolic(std::max(lambda.length(), 1) + 1);
        for (const auto& mu : enumerate_sub_partitions(lambda)) {
            for (bool fused : {false, true}) {
                RingElem value = fused ? skew_g(lambda, mu, xs, cols_g)
                                       : skew_j(lambda, mu, xs, cols_j);
                for (int swap = 1; swap < n && !value.is_zero(); ++swap) {
                    std::map<VarId, VarId> names = {{VarId::x(swap), VarId::x(swap + 1)},
                                                    {VarId::x(swap + 1), VarId::x(swap)}};
                    RingElem swapped = value.renamed(names);
                    std::ostringstream inst;
                    inst << (fused ? "G " : "J ") << lambda.to_string() << "/" << mu.to_string()
                         << " swap x" << swap << "<->x" << swap + 1;
                    report.record(value == swapped, inst.str(), value, swapped);
                }
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_stability(int max_size, int n) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "stability";
    auto xs = spectral_vars(n);
    auto xs_ext = xs;
    xs_ext.push_back(RingElem::zero());
    for (const auto& lambda : partitions_up_to(max_size)) {
        ColumnParams cols_j = ColumnParams::symbolic(std::max(lambda.first(), 1) + 1);
        ColumnParams cols_g = ColumnParams::symbolic(std::max(lambda.length(), 1) + 1);
        for (const auto& mu : enumerate_sub_partitions(lambda)) {
            RingElem j1 = skew_j(lambda, mu, xs_ext, cols_j);
            RingElem j0 = skew_j(lambda, mu, xs, cols_j);
            report.record(j1 == j0, "J " + lambda.to_string() + "/" + mu.to_string(), j1, j0);
            RingElem g1 = skew_g(lambda, mu, xs_ext, cols_g);
            RingElem g0 = skew_g(lambda, mu, xs, cols_g);
            report.record(g1 == g0, "G " + lambda.to_string() + "/" + mu.to_string(), g1, g0);
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_brute_force_agreement(int max_size, int max_rows) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "brute-force";
    for (int n = 1; n <= max_rows; ++n) {
        auto xs = spectral_vars(n);
        std::vector<RowSpec> rows_j, rows_g; // bottom row first = x_n
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
            rows_j.push_back({RowFamily::Spin1, *it});
            rows_g.push_back({RowFamily::Fused, *it});
        }
        for (const auto& lambda : partitions_up_to(max_size)) {
            ColumnParams cols_j = ColumnParams::symbolic(std::max(lambda.first(), 1) + 1);
            ColumnParams cols_g = ColumnParams::symbolic(std::max(lambda.length(), 1) + 1);
            for (const auto& mu : enumerate_sub_partitions(lambda)) {
                BruteBoundary bj;
                bj.bottom = occupation_of(lambda, cols_j.width());
                bj.top = occupation_of(mu, cols_j.width());
                bj.left.assign(n, 0);
                RingElem zj = brute_force_z(rows_j, cols_j, bj, std::max(lambda.length(), 1));
                RingElem sj = skew_j(lambda, mu, xs, cols_j);
                report.record(zj == sj,
                              "J " + lambda.to_string() + "/" + mu.to_string() + " n=" +
                                  std::to_string(n),
                              zj, sj);
                BruteBoundary bg;
                bg.bottom = occupation_of_conjugate(lambda, cols_g.width());
                bg.top = occupation_of_conjugate(mu, cols_g.width());
                bg.left.assign(n, 0);
                RingElem zg = brute_force_z(rows_g, cols_g, bg, std::max(lambda.first(), 1));
                RingElem sg = skew_g(lambda, mu, xs, cols_g);
                report.record(zg == sg,
                              "G " + lambda.to_string() + "/" + mu.to_string() + " n=" +
                                  std::to_string(n),
                              zg, sg);
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_degenerations(int max_size, int max_vars) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "degenerations";
    const FamilyTag tags[] = {FamilyTag::Schur,
                              FamilyTag::HallLittlewoodQ,
                              FamilyTag::QWhittaker,
                              FamilyTag::InhomQWhittakerF,
                              FamilyTag::DualInhomG,
                              FamilyTag::GrothendieckG,
                              FamilyTag::DualGrothendieckLittleG,
                              FamilyTag::WeakGrothendieckJ,
                              FamilyTag::WeakDualLittleJ};
    FamilyParams params;
    params.deform = RingElem::var(VarId::w(1));
    for (FamilyTag tag : tags) {
        for (int n = 1; n <= max_vars; ++n) {
            auto xs = spectral_vars(n);
            for (const auto& lambda : partitions_up_to(max_size)) {
                RingElem lat = degeneration_of_lattice(tag, lambda, Partition::empty(), xs, params);
                RingElem orc = multivar_oracle(tag, lambda, xs, params);
                std::ostringstream inst;
                inst << family_tag_name(tag) << " " << lambda.to_string() << " n=" << n;
                report.record(lat == orc, inst.str(), lat, orc);
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_branching(int max_part) {
    Timer timer;
    VerificationReport report;
    report.identity_id = "branching";
    const RingElem x = RingElem::var(VarId::x(1));
    std::vector<int> box(4, max_part);
    for (const auto& lambda : enumerate_sub_partitions(Partition(box))) {
        ColumnParams cols = ColumnParams::symbolic(std::max(lambda.first(), 1) + 1);
        for (const auto& mu : enumerate_sub_partitions(lambda)) {
            if (!lambda.interlaces_over(mu)) continue;
            RingElem lat = skew_j(lambda, mu, {x}, cols);
            // closed form from the column classification
            auto st = column_stats(lambda, mu);
            auto m = lambda.is_empty() ? std::vector<int>{}
                                       : lambda.multiplicities(cols.width());
            RingElem closed = RingElem::one();
            for (int i : st.mm)
                closed *= (RingElem::one() + cols.pairs[i - 1].first * x * q_power(m[i - 1])) /
                          (RingElem::one() + cols.pairs[i - 1].first * x);
            for (int i : st.pm)
                closed *= (RingElem::one() - q_power(m[i - 1])) * x /
                          (RingElem::one() + cols.pairs[i - 1].first * x);
            for (int i : st.mp)
                closed *= (RingElem::one() -
                           cols.pairs[i - 1].first * cols.pairs[i - 1].second * q_power(m[i - 1])) /
                          (RingElem::one() + cols.pairs[i - 1].first * x);
            for (int i : st.pp)
                closed *= (x + cols.pairs[i - 1].second * q_power(m[i - 1])) /
                          (RingElem::one() + cols.pairs[i - 1].first * x);
            report.record(lat == closed, lambda.to_string() + "/" + mu.to_string(), lat, closed);
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

} // namespace latsym
