#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latsym/families.hpp"

using namespace latsym;

namespace {

const RingElem Q = RingElem::q();
const RingElem ONE = RingElem::one();

Partition P(const std::string& s) { return Partition::parse(s); }
RingElem xv(int i) { return RingElem::var(VarId::x(i)); }

std::vector<RingElem> xs(int n) {
    std::vector<RingElem> v;
    for (int i = 1; i <= n; ++i) v.push_back(xv(i));
    return v;
}

} // namespace

TEST_CASE("one-variable branchings") {
    CHECK(branching_one_var(FamilyTag::HallLittlewoodQ, P("1"), Partition::empty(), xv(1)) ==
          (ONE - Q) * xv(1));
    CHECK(branching_one_var(FamilyTag::QWhittaker, P("2"), P("1"), xv(1)) == (ONE + Q) * xv(1));
    // Grothendieck: single box over the empty shape leaves no surviving row
    // of mu over the shifted lambda, so the deformation drops out
    FamilyParams beta;
    beta.deform = RingElem::var(VarId::w(1));
    CHECK(branching_one_var(FamilyTag::GrothendieckG, P("1"), Partition::empty(), xv(1), beta) ==
          xv(1));
    CHECK(branching_one_var(FamilyTag::Schur, P("2,1"), P("2,1"), xv(1)) == ONE);
    CHECK(branching_one_var(FamilyTag::Schur, P("2,2"), Partition::empty(), xv(1)) ==
          RingElem::zero());
    // dual families accept non-strip skews
    CHECK(branching_one_var(FamilyTag::DualGrothendieckLittleG, P("2,2"), Partition::empty(),
                            xv(1), beta) == beta.deform.pow(2) * xv(1).pow(2));
}

TEST_CASE("weak family branchings") {
    FamilyParams alpha;
    alpha.deform = RingElem::var(VarId::w(1));
    const RingElem a = alpha.deform;
    CHECK(branching_one_var(FamilyTag::WeakGrothendieckJ, P("2"), Partition::empty(), xv(1),
                            alpha) == xv(1).pow(2) / (ONE + a * xv(1)).pow(2));
    CHECK(branching_one_var(FamilyTag::WeakDualLittleJ, P("2"), Partition::empty(), xv(1),
                            alpha) == xv(1) * (xv(1) + a));
    CHECK(branching_one_var(FamilyTag::WeakDualLittleJ, P("2,1"), P("1"), xv(1), alpha) ==
          xv(1).pow(2));
}

TEST_CASE("chain oracle small values") {
    CHECK(multivar_oracle(FamilyTag::Schur, P("1"), xs(2)) == xv(1) + xv(2));
    CHECK(multivar_oracle(FamilyTag::Schur, P("2,1"), xs(2)) ==
          xv(1).pow(2) * xv(2) + xv(1) * xv(2).pow(2));
    RingElem w20 = multivar_oracle(FamilyTag::QWhittaker, P("2"), xs(2));
    CHECK(w20 == xv(1).pow(2) + (ONE + Q) * xv(1) * xv(2) + xv(2).pow(2));
    // inhomogeneous counterpart with u = 1
    RingElem f20 = multivar_oracle(FamilyTag::InhomQWhittakerF, P("2"), xs(2));
    RingElem expect = xv(1).pow(2) + (ONE + Q) * xv(1) * xv(2) * (ONE - xv(1)) +
                      xv(2).pow(2) * (ONE - xv(1)) * (ONE - Q * xv(1));
    CHECK(f20 == expect);
}

TEST_CASE("lattice degenerations match the chain oracles") {
    FamilyParams params;
    params.deform = RingElem::var(VarId::w(1));
    const FamilyTag tags[] = {FamilyTag::Schur,
                              FamilyTag::HallLittlewoodQ,
                              FamilyTag::QWhittaker,
                              FamilyTag::InhomQWhittakerF,
                              FamilyTag::DualInhomG,
                              FamilyTag::GrothendieckG,
                              FamilyTag::DualGrothendieckLittleG,
                              FamilyTag::WeakGrothendieckJ,
                              FamilyTag::WeakDualLittleJ};
    for (FamilyTag tag : tags) {
        for (const auto& lambda : enumerate_sub_partitions(P("2,1"))) {
            for (int n = 1; n <= 2; ++n) {
                RingElem lat =
                    degeneration_of_lattice(tag, lambda, Partition::empty(), xs(n), params);
                RingElem orc = multivar_oracle(tag, lambda, xs(n), params);
                CAPTURE(family_tag_name(tag));
                CAPTURE(lambda.to_string());
                CAPTURE(n);
                CHECK(lat == orc);
            }
        }
    }
}

TEST_CASE("dual Grothendieck lattice degeneration, skew case") {
    FamilyParams beta;
    beta.deform = RingElem::var(VarId::w(1));
    RingElem lat = degeneration_of_lattice(FamilyTag::DualGrothendieckLittleG, P("2,1"),
                                           P("1,1"), xs(1), beta);
    RingElem direct =
        branching_one_var(FamilyTag::DualGrothendieckLittleG, P("2,1"), P("1,1"), xv(1), beta);
    CHECK(lat == direct);
    CHECK(lat == xv(1)); // one nonzero column, no extra boxes
}

TEST_CASE("Schur degeneration against the alternant oracle") {
    std::vector<Rat> points = {Rat(2), Rat(3), Rat(5) / 7};
    std::map<VarId, RingElem> at = {{VarId::x(1), RingElem(points[0])},
                                    {VarId::x(2), RingElem(points[1])},
                                    {VarId::x(3), RingElem(points[2])}};
    for (const auto& lambda : enumerate_sub_partitions(P("3,2,1"))) {
        RingElem oracle = multivar_oracle(FamilyTag::Schur, lambda, xs(3));
        RingElem value = substitute(oracle, at);
        Rat expected = schur_by_alternants(lambda, points);
        CHECK(value == RingElem(expected));
    }
    CHECK_THROWS_AS(schur_by_alternants(P("1"), {Rat(1), Rat(1)}), ZeroDenominator);
}

TEST_CASE("deformed families collapse to Schur at zero deformation") {
    FamilyParams zero;
    zero.deform = RingElem::zero();
    for (const auto& lambda : enumerate_sub_partitions(P("2,2"))) {
        CHECK(multivar_oracle(FamilyTag::WeakGrothendieckJ, lambda, xs(2), zero) ==
              multivar_oracle(FamilyTag::Schur, lambda, xs(2)));
        CHECK(multivar_oracle(FamilyTag::GrothendieckG, lambda, xs(2), zero) ==
              multivar_oracle(FamilyTag::Schur, lambda, xs(2)));
    }
}

TEST_CASE("inhomogeneous family at u = 0 is the q-Whittaker family") {
    FamilyParams zero_u;
    zero_u.u_seq.assign(6, RingElem::zero());
    for (const auto& lambda : enumerate_sub_partitions(P("2,2"))) {
        CHECK(multivar_oracle(FamilyTag::InhomQWhittakerF, lambda, xs(2), zero_u) ==
              multivar_oracle(FamilyTag::QWhittaker, lambda, xs(2)));
    }
}
