#pragma once

#include <functional>

#include "latsym/identities.hpp"

namespace latsym {

enum class CoeffKind { D, A, B, C };

// n x n grid whose partition function is the transition coefficient from
// lambda to mu. Bottom boundary carries the conjugate multiplicities of
// lambda (site 1 at the right), the right boundary those of mu (row 1 at the
// bottom); top and left are empty. D-kind rows carry ys and columns (us, vs),
// both indexed by site; A/B/C are its parameter-free specializations.
struct CoeffGridSpec {
    CoeffKind kind = CoeffKind::A;
    int n = 0;
    Partition lambda, mu;
    std::vector<RingElem> us, vs, ys; // us[i-1] = u_i etc.; D-kind only
};

// GridTooSmall if n < max(len(lambda), lambda_1, len(mu), mu_1).
RingElem coeff(const CoeffGridSpec& spec);

struct ExpansionTable {
    std::string source_basis, target_basis;
    Partition lambda;
    int n = 0;
    std::map<Partition, RingElem> entries;
};

// Polynomial in x_1..x_n attached to a partition.
using PolyProvider = std::function<RingElem(const Partition&)>;

// Solves source_lambda = sum over mu in the box of entries[mu] * target_mu
// by peeling lowest-degree dominant monomials; the target family must be
// unitriangular in the graded dominance order (NotTriangular otherwise).
ExpansionTable expand(const PolyProvider& source, const PolyProvider& target,
                      const Partition& lambda, int n, const Partition& box,
                      const std::string& source_name = "source",
                      const std::string& target_name = "target");

enum class CertifyLaw { Positive, SignAlternating };

// Positive: every entry lies in N[q]. SignAlternating: (-1)^{|lambda|-|mu|}
// times the entry lies in N[q].
VerificationReport certify(const ExpansionTable& table, CertifyLaw law);

// Ready-made lattice-backed providers for the bases of the expansions:
// "schur", "q-whittaker", "inhom-f" (u_i = 1), "dual-inhom-g" (v_i = 1).
PolyProvider basis_provider(const std::string& name, int n);

} // namespace latsym
