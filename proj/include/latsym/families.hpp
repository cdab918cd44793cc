#pragma once

#include "latsym/lattice.hpp"

namespace latsym {

// The named degenerations, with independent closed-form branchings used to
// validate the lattice engine.
enum class FamilyTag {
    Schur,
    HallLittlewoodQ,
    QWhittaker,
    InhomQWhittakerF,
    DualInhomG,
    GrothendieckG,
    DualGrothendieckLittleG,
    WeakGrothendieckJ,
    WeakDualLittleJ,
};

// alpha/beta deformation (weak families, Grothendieck families, DualInhomG)
// and the u-sequence of the inhomogeneous family (u_seq[i-1] = u_i, padded
// with 1 beyond the stored length).
struct FamilyParams {
    RingElem deform = RingElem::one();
    std::vector<RingElem> u_seq;

    RingElem u_at(int i) const {
        if (i >= 1 && i <= static_cast<int>(u_seq.size())) return u_seq[i - 1];
        return RingElem::one();
    }
};

const char* family_tag_name(FamilyTag tag);

// Closed one-variable skew formula; 0 outside the family's support.
RingElem branching_one_var(FamilyTag tag, const Partition& lambda, const Partition& mu,
                           const RingElem& x, const FamilyParams& params = {});

// Sum over chains empty = nu^0 <= ... <= nu^n = lambda of branching factors,
// step k evaluated at x_k.
RingElem multivar_oracle(FamilyTag tag, const Partition& lambda,
                         const std::vector<RingElem>& xs, const FamilyParams& params = {});

// The lattice value under the tag's parameter specialization.
RingElem degeneration_of_lattice(FamilyTag tag, const Partition& lambda, const Partition& mu,
                                 const std::vector<RingElem>& xs,
                                 const FamilyParams& params = {});

// Fully independent second oracle for Schur polynomials: ratio of alternants
// evaluated at exact rational points (throws ZeroDenominator on coincident
// points).
Rat schur_by_alternants(const Partition& lambda, const std::vector<Rat>& points);

} // namespace latsym
