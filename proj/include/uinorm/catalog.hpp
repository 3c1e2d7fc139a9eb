#pragma once
//
// The inequality catalog: every verified result as an executable case with
// an input sampler, LHS/RHS builders, and a comparison mode. Case ids are
// stable strings used in CLI flags and reports.
//
//   prop_1_3   spectra of A(+)A* and A(+)A coincide
//   prop_1_4   spectra of A(+)B and the antidiagonal block [[0,A],[B,0]] coincide
//   prop_1_5   spectra of AA* and A*A coincide
//   lemma_2_1  2|||AXB*||| <= |||A*AX + XB*B|||
//   thm_2_2    2|||sum_i A_i X_i B_i* (+) 0...||| <= |||[A_i*A_j X_j + X_i B_i*B_j]|||
//   ineq_1_9   thm_2_2 at n = 2, kept as its own id
//   cor_2_3    |||A_1A_2* + A_2A_3* + ... + A_nA_1*||| <= |||sum_i A_iA_i*|||
//   ineq_1_10  |||A*B + B*A||| <= |||A*A + B*B|||
//   lemma_2_4  |||A + B||| <= ||| |A| + |B| ||| for normal A, B
//   cor_2_5    projections: |||(A1-A2+A3-A4)(+)0(+)0(+)0||| <= |||(+)_i (A_i + |A_{i+2}A_i|)|||
//   cor_2_6    positives: ||sum A_i|| <= max_i ||A_i + (n-1)||A_i||*I||
//   ineq_1_12  positives: |||(A+B)(+)0||| <= |||(A+|B^{1/2}A^{1/2}|) (+) (B+|A^{1/2}B^{1/2}|)|||
//   cor_2_7    normals: ||A+B|| <= max(|| |A|+||A||*I ||, || |B|+||B||*I ||)
//   lemma_2_6  ||[[A,B],[C,D]]|| <= ||[[||A||,||B||],[||C||,||D||]]||
//   cor_2_8a   ||AA* + A*A|| <= ||A^2|| + ||A||^2
//   cor_2_8b   ||AA* - A*A|| <= ||A||^2
//

#include <string>
#include <vector>

#include "uinorm/ensembles.hpp"
#include "uinorm/matrix.hpp"
#include "uinorm/norms.hpp"
#include "uinorm/spectral.hpp"

namespace uinorm::catalog {

enum class CompareMode {
    AllUINorms,        // weak majorization of singular spectra
    AllUINormsMutual,  // mutual domination: spectra coincide
    OperatorNormOnly,  // scalar operator-norm comparison
};

enum class InputClass { General, Normal, Positive, Projection };

struct CaseInfo {
    std::string id;
    CompareMode mode;
    bool iterates_blocks = false;  // trials sweep config block counts
    std::size_t min_blocks = 1;    // smallest admissible n for n-ary cases
    std::size_t fixed_blocks = 1;  // n recorded when not iterating
    std::string summary;
};

const std::vector<CaseInfo>& all_cases();
bool case_exists(const std::string& id);
const CaseInfo& case_info(const std::string& id);

struct CaseInputs {
    std::size_t d = 0;
    std::size_t n = 1;
    std::vector<ComplexMatrix> matrices;
};

// Operand classes in sampling order for the case at block count n.
std::vector<InputClass> input_classes(const std::string& id, std::size_t n);

// Draw admissible inputs; projection ranks are sampled uniformly on {0..d}.
CaseInputs sample(const std::string& id, std::size_t d, std::size_t n,
                  ensembles::RngStream& rng);

struct BuiltSides {
    ComplexMatrix lhs;
    ComplexMatrix rhs;
};

struct ScalarSides {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Matrix sides for majorization-mode cases; throws for scalar-mode ids.
BuiltSides build(const std::string& id, const CaseInputs& in,
                 const spectral::JacobiOptions& opts = {});

// Scalar sides for operator-norm-only cases; throws for matrix-mode ids.
ScalarSides build_scalar(const std::string& id, const CaseInputs& in,
                         const spectral::JacobiOptions& opts = {});

struct TrialEvaluation {
    CompareMode mode = CompareMode::AllUINorms;
    bool holds = false;
    double margin = 0.0;     // scalar cases: rhs - lhs
    std::size_t worst_k = 0; // 0 for scalar comparisons
    double ratio = 0.0;      // lhs/rhs under the operator norm
    double lhs_norm = 0.0; // operator norms of the two sides
    double rhs_norm = 0.0;
    double tol = 0.0;
    // Redundant comparisons that disagreed with the primary verdict; any
    // entry here marks the trial as a violation.
    std::vector<std::string> failed_cross_checks;
};

// Runs the case comparison at tol = tol_scale * max(1, trace norm of RHS)
// plus the per-case redundant cross-checks (sampled Schatten/Ky Fan norms,
// proof side-conditions).
TrialEvaluation evaluate(const std::string& id, const CaseInputs& in, double tol_scale,
                         const std::vector<double>& schatten_ps,
                         const spectral::JacobiOptions& opts = {});

}  // namespace uinorm::catalog
