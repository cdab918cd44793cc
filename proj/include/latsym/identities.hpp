#pragma once

#include <string>

#include "latsym/families.hpp"
#include "latsym/lattice.hpp"

namespace latsym {

struct VerificationReport {
    std::string identity_id;
    long instances_checked = 0;

    struct Failure {
        std::string instance;
        RingElem lhs, rhs;
    };
    std::vector<Failure> failures;
    double elapsed_seconds = 0;

    bool pass() const { return failures.empty(); }
    void record(bool ok, const std::string& instance, const RingElem& lhs, const RingElem& rhs) {
        ++instances_checked;
        if (!ok) failures.push_back({instance, lhs, rhs});
    }
    void merge(const VerificationReport& other) {
        instances_checked += other.instances_checked;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        elapsed_seconds += other.elapsed_seconds;
    }
};

// Fixed boundary of the triple-crossing relation:
//   (a1, a2, a3) incoming positions, (b1, b2, b3) outgoing positions
// with a2/b2 on the x line, a1/b1 on the y line, a3/b3 on the column.
struct YbeBoundary {
    int a1, a2, a3, b1, b2, b3;
    std::string to_string() const;
};

// One triple-crossing instance with explicit rules:
//   cross = crossing of the x and y lines (y line vertical),
//   xcol  = x line against the column, ycol = y line against the column.
// Sums both sides over the internal labels and compares exactly.
bool check_ybe_instance(const VertexRule& cross, const VertexRule& xcol, const VertexRule& ycol,
                        const YbeBoundary& bdy, RingElem* lhs_out = nullptr,
                        RingElem* rhs_out = nullptr);

enum class YbeKind {
    General, // W_{L,M}, W_{L,N}, W_{M,N} at spins (L, M, N)
    Spin1,   // spin-1 R with two spin-1 (u,v) rows
    Fused,   // fused R with two fused rows
    Mixed,   // reversed spin-1 against a fused row
};

// Exhaustive YBE suite over boundaries with line labels up to line_max and
// column labels up to col_max (General uses the spin bounds instead).
VerificationReport verify_ybe(YbeKind kind, int L, int M, int N, int line_max, int col_max,
                              int jobs = 1);

// Stochasticity of the general weights for all spins up to (Lmax, Mmax).
VerificationReport verify_stochasticity(int Lmax, int Mmax);

// Sum-to-unity of the fused crossing weights for labels up to max_label.
VerificationReport verify_fused_r_sum(int max_label);

// Gauge relation between the spin-1 weights and their duals, labels up to
// max_label on the column, 0/1 on the line.
VerificationReport verify_gauge(int max_label);
VerificationReport verify_gauge_and_stochasticity(int max_label);

// Truncated-series Cauchy identities. Both sides are expanded to total
// degree D jointly in the x, y, u, v alphabets (each extra box of the
// summation index costs at least one unit of that degree, which bounds the
// sum). Parameters (u_i, v_i) enter symbolically via `cols`.
struct CauchyOptions {
    int n = 1, m = 1;
    int degree = 3;
    bool conjugate_normalization = true; // index c by conjugate multiplicities
    bool uniform_params = true;          // one symbolic (u, v) pair for all columns
};
VerificationReport verify_cauchy_j(const Partition& lambda, const Partition& mu,
                                   const CauchyOptions& opt);
VerificationReport verify_cauchy_g(const Partition& lambda, const Partition& mu,
                                   const CauchyOptions& opt);
VerificationReport verify_cauchy_mixed(const Partition& lambda, const Partition& mu,
                                       const CauchyOptions& opt);

// Fusion of a stack of L spin-1 rows at geometric rapidities into one
// fused-row vertex, including the normalization Z_j(L); checks single
// vertices and rows of `columns` columns, all labels within the spin bounds.
VerificationReport verify_fusion(int L, int M, int columns = 1);
// Z_j(L) = q^{j(j-1)/2} (q;q)_L / ((q;q)_j (q;q)_{L-j}).
RingElem fusion_normalization(int j, int L);

// Structure suites over all |lambda| <= max_size.
VerificationReport verify_symmetry(int max_size, int n);
VerificationReport verify_stability(int max_size, int n);
VerificationReport verify_brute_force_agreement(int max_size, int max_rows);
VerificationReport verify_degenerations(int max_size, int max_vars);

// One-row branching agreement for the spin-1 family, all strips with
// lambda_1 <= max_part.
VerificationReport verify_branching(int max_part);

} // namespace latsym
