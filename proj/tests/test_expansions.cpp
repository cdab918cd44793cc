#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latsym/expansions.hpp"

using namespace latsym;

namespace {

const RingElem Q = RingElem::q();
const RingElem ONE = RingElem::one();

Partition P(const std::string& s) { return Partition::parse(s); }

RingElem coeff_abc(CoeffKind kind, const std::string& lambda, const std::string& mu, int n) {
    CoeffGridSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.lambda = P(lambda);
    spec.mu = P(mu);
    return coeff(spec);
}

CoeffGridSpec d_spec(const std::string& lambda, const std::string& mu, int n,
                     const RingElem& u, const RingElem& v, const RingElem& y) {
    CoeffGridSpec spec;
    spec.kind = CoeffKind::D;
    spec.n = n;
    spec.lambda = P(lambda);
    spec.mu = P(mu);
    spec.us.assign(n, u);
    spec.vs.assign(n, v);
    spec.ys.assign(n, y);
    return spec;
}

} // namespace

TEST_CASE("coefficient grid worked values") {
    CHECK(coeff_abc(CoeffKind::A, "2", "2,1", 2) == ONE + Q);
    CHECK(coeff_abc(CoeffKind::A, "2", "2", 2) == ONE);
    CHECK(coeff_abc(CoeffKind::A, "2", "2,2", 2) == ONE);
    CHECK(coeff_abc(CoeffKind::B, "2", "2,1", 2) == RingElem(-1) * (ONE + Q));
    CHECK(coeff_abc(CoeffKind::B, "2", "2,2", 2) == Q);
    CHECK(coeff_abc(CoeffKind::C, "2,2", "2,1", 2) == ONE + Q);
    CHECK(coeff_abc(CoeffKind::C, "2,2", "2", 2) == ONE);
    CHECK(coeff_abc(CoeffKind::A, "0", "0", 2) == ONE);
    // mismatched particle counts across the grid vanish
    CHECK(coeff_abc(CoeffKind::A, "2", "1", 2) == RingElem::zero());
}

TEST_CASE("grid size errors and stability in n") {
    CoeffGridSpec spec;
    spec.kind = CoeffKind::A;
    spec.n = 1;
    spec.lambda = P("2");
    spec.mu = P("2");
    CHECK_THROWS_AS(coeff(spec), GridTooSmall);
    // above the minimum, the grid size does not matter
    for (int n = 2; n <= 4; ++n) CHECK(coeff_abc(CoeffKind::A, "2", "2,1", n) == ONE + Q);
    for (int n = 2; n <= 4; ++n) CHECK(coeff_abc(CoeffKind::B, "2", "2,2", n) == Q);
}

TEST_CASE("D-kind grid specializes to A, B and C") {
    const RingElem zero = RingElem::zero();
    for (const auto& lambda : enumerate_sub_partitions(P("2,2"))) {
        for (const auto& mu : enumerate_sub_partitions(P("2,2"))) {
            RingElem a = coeff(d_spec(lambda.to_string(), mu.to_string(), 2, zero, zero, ONE));
            CHECK(a == coeff_abc(CoeffKind::A, lambda.to_string(), mu.to_string(), 2));
            RingElem b = coeff(d_spec(lambda.to_string(), mu.to_string(), 2, ONE, zero, zero));
            CHECK(b == coeff_abc(CoeffKind::B, lambda.to_string(), mu.to_string(), 2));
            RingElem c = coeff(d_spec(lambda.to_string(), mu.to_string(), 2, zero, ONE, zero));
            CHECK(c == coeff_abc(CoeffKind::C, lambda.to_string(), mu.to_string(), 2));
        }
    }
}

TEST_CASE("general expansion reconstructs the two-parameter family") {
    // sum over mu of d_{lambda,mu}(u,v,y) * G^{(y,0)}_mu = G^{(u,v)}_lambda
    const int n = 2;
    std::vector<RingElem> xs = {RingElem::var(VarId::x(1)), RingElem::var(VarId::x(2))};
    const RingElem u = RingElem::var(VarId::u(1)), v = RingElem::var(VarId::v(1)),
                   y = RingElem::var(VarId::y(1));
    for (const auto& lambda : enumerate_sub_partitions(P("2,2"))) {
        if (lambda.length() > n) continue;
        ColumnParams cols_uv = ColumnParams::constant(n + 1, u, v);
        RingElem target = skew_g(lambda, Partition::empty(), xs, cols_uv);
        RingElem sum;
        for (const auto& mu : enumerate_sub_partitions(Partition(std::vector<int>(n, 2)))) {
            CoeffGridSpec spec = d_spec(lambda.to_string(), mu.to_string(), n, u, v, y);
            RingElem d = coeff(spec);
            if (d.is_zero()) continue;
            ColumnParams cols_y = ColumnParams::constant(n + 1, y, RingElem::zero());
            sum += d * skew_g(mu, Partition::empty(), xs, cols_y);
        }
        CHECK(sum == target);
    }
}

TEST_CASE("triangular solve reproduces the worked tables") {
    const int n = 2;
    auto W = basis_provider("q-whittaker", n);
    auto F = basis_provider("inhom-f", n);
    auto G = basis_provider("dual-inhom-g", n);

    ExpansionTable a = expand(W, F, P("2"), n, P("2,2"), "q-whittaker", "inhom-f");
    REQUIRE(a.entries.size() == 3);
    CHECK(a.entries.at(P("2")) == ONE);
    CHECK(a.entries.at(P("2,1")) == ONE + Q);
    CHECK(a.entries.at(P("2,2")) == ONE);

    ExpansionTable b = expand(F, W, P("2"), n, P("2,2"), "inhom-f", "q-whittaker");
    REQUIRE(b.entries.size() == 3);
    CHECK(b.entries.at(P("2")) == ONE);
    CHECK(b.entries.at(P("2,1")) == RingElem(-1) * (ONE + Q));
    CHECK(b.entries.at(P("2,2")) == Q);

    ExpansionTable c = expand(G, W, P("2,2"), n, P("2,2"), "dual-inhom-g", "q-whittaker");
    REQUIRE(c.entries.size() == 3);
    CHECK(c.entries.at(P("2,2")) == ONE);
    CHECK(c.entries.at(P("2,1")) == ONE + Q);
    CHECK(c.entries.at(P("2")) == ONE);

    // identity expansion
    auto S = basis_provider("schur", 1);
    ExpansionTable id = expand(S, S, P("1"), 1, P("1"), "schur", "schur");
    REQUIRE(id.entries.size() == 1);
    CHECK(id.entries.at(P("1")) == ONE);
}

TEST_CASE("grid equals solve on the 2x2 box") {
    const int n = 2;
    const Partition box = P("2,2");
    auto W = basis_provider("q-whittaker", n);
    auto F = basis_provider("inhom-f", n);
    auto G = basis_provider("dual-inhom-g", n);
    for (const auto& lambda : enumerate_sub_partitions(box)) {
        ExpansionTable ta = expand(W, F, lambda, n, box);
        ExpansionTable tb = expand(F, W, lambda, n, box);
        ExpansionTable tc = expand(G, W, lambda, n, box);
        for (const auto& mu : enumerate_sub_partitions(box)) {
            auto entry = [&](const ExpansionTable& t) {
                auto it = t.entries.find(mu);
                return it == t.entries.end() ? RingElem::zero() : it->second;
            };
            CHECK(coeff_abc(CoeffKind::A, lambda.to_string(), mu.to_string(), n) == entry(ta));
            CHECK(coeff_abc(CoeffKind::B, lambda.to_string(), mu.to_string(), n) == entry(tb));
            CHECK(coeff_abc(CoeffKind::C, lambda.to_string(), mu.to_string(), n) == entry(tc));
        }
    }
}

TEST_CASE("A and B grids are two-sided inverse matrices on the 3x3 box") {
    const int n = 3;
    const Partition box = P("3,3,3");
    auto parts = enumerate_sub_partitions(box);
    for (const auto& lambda : parts) {
        for (const auto& mu : parts) {
            RingElem ab, ba;
            for (const auto& kappa : parts) {
                ab += coeff_abc(CoeffKind::A, lambda.to_string(), kappa.to_string(), n) *
                      coeff_abc(CoeffKind::B, kappa.to_string(), mu.to_string(), n);
                ba += coeff_abc(CoeffKind::B, lambda.to_string(), kappa.to_string(), n) *
                      coeff_abc(CoeffKind::A, kappa.to_string(), mu.to_string(), n);
            }
            RingElem expect{lambda == mu ? 1 : 0};
            CHECK(ab == expect);
            CHECK(ba == expect);
        }
    }
}

TEST_CASE("certification laws") {
    const int n = 2;
    const Partition box = P("2,2");
    auto W = basis_provider("q-whittaker", n);
    auto F = basis_provider("inhom-f", n);
    ExpansionTable a = expand(W, F, P("2"), n, box);
    CHECK(certify(a, CertifyLaw::Positive).pass());
    ExpansionTable b = expand(F, W, P("2"), n, box);
    CHECK(certify(b, CertifyLaw::SignAlternating).pass());
    CHECK_FALSE(certify(b, CertifyLaw::Positive).pass());
    ExpansionTable empty;
    CHECK(certify(empty, CertifyLaw::Positive).pass());
}

TEST_CASE("sign statistic of the B grid over the 2x2 box") {
    const int n = 2;
    const Partition box = P("2,2");
    for (const auto& lambda : enumerate_sub_partitions(box)) {
        ExpansionTable t;
        t.lambda = lambda;
        for (const auto& mu : enumerate_sub_partitions(box)) {
            RingElem b = coeff_abc(CoeffKind::B, lambda.to_string(), mu.to_string(), n);
            if (!b.is_zero()) t.entries.emplace(mu, b);
        }
        CHECK(certify(t, CertifyLaw::SignAlternating).pass());
    }
}

TEST_CASE("solve detects a non-triangular target") {
    const int n = 1;
    auto S = basis_provider("schur", n);
    PolyProvider doubled = [S](const Partition& mu) { return RingElem(2) * S(mu); };
    CHECK_THROWS_AS(expand(S, doubled, P("1"), n, P("1")), NotTriangular);
}
