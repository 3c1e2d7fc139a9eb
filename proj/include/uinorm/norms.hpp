#pragma once
//
// Unitarily invariant norm evaluation (operator, Schatten p, Ky Fan k) and
// the weak-majorization comparator. "LHS <= RHS for all unitarily invariant
// norms" is decided by weak majorization of singular values; sampled
// Schatten/Ky Fan evaluations stay around as redundant cross-checks.
//

#include <string>

#include "uinorm/matrix.hpp"
#include "uinorm/spectral.hpp"

namespace uinorm::norms {

struct NormFamily {
    enum class Kind { Operator, Schatten, KyFan };

    Kind kind = Kind::Operator;
    double p = 0.0;      // Schatten only; +inf aliases the operator norm
    std::size_t k = 0;   // KyFan only

    static NormFamily operator_norm() { return NormFamily{Kind::Operator, 0.0, 0}; }
    static NormFamily schatten(double p);  // requires p >= 1
    static NormFamily ky_fan(std::size_t k);  // requires k >= 1

    // "op" | "schatten:<p>" | "kyfan:<k>"; <p> may be "inf".
    static NormFamily parse(const std::string& text);
    std::string name() const;
};

struct DominanceVerdict {
    bool holds = false;
    // 1-based partial-sum index attaining the minimum margin (the first such
    // index on ties); always populated.
    std::size_t worst_k = 0;
    // min over k of (rhs partial sum - lhs partial sum); holds == margin >= -tol.
    double margin = 0.0;
};

double norm_from_spectrum(const spectral::SingularSpectrum& s, const NormFamily& f);

double norm_eval(const ComplexMatrix& a, const NormFamily& f,
                 const spectral::JacobiOptions& opts = {});

// True iff every descending partial sum of lhs is bounded by the matching
// partial sum of rhs plus tol; spectra of different lengths are zero-padded.
DominanceVerdict weakly_majorizes(const spectral::SingularSpectrum& lhs,
                                  const spectral::SingularSpectrum& rhs, double tol);

// Fan dominance: the verdict certifies |||lhs||| <= |||rhs||| for every
// unitarily invariant norm.
DominanceVerdict dominates_all_ui_norms(const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                                        double tol, const spectral::JacobiOptions& opts = {});

// Scale-relative comparison slack: tol_scale * max(1, trace norm of rhs).
double majorization_tolerance(const spectral::SingularSpectrum& rhs, double tol_scale);

}  // namespace uinorm::norms
