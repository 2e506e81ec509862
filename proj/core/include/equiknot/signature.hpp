#pragma once

#include <utility>
#include <vector>

#include "equiknot/matrix.hpp"
#include "equiknot/polynomial.hpp"
#include "equiknot/seifert.hpp"

namespace equiknot {

// Exact inertia of the Hermitian pencil
//   A_lambda = ((A+A^t)/2) ((1-lambda) I - (1+lambda) P) + i (A - A^t).
// The real part is symmetric because (A+A^t) P is (asserted). Degenerate
// lambda is allowed; n_zero > 0 flags it.
Inertia pencil_at(const SeifertData& form, const Rat& lambda);

// Signature function of the pencil over the real line. Breakpoints are the
// real eigenvalues of S (the only points where the pencil can degenerate);
// interval_values[i] is the constant signature on the open interval between
// breakpoints i-1 and i (with sentinels beyond the extremes); values and
// jumps at the breakpoints are the average resp. half-difference of the
// adjacent interval values.
struct SignatureProfile {
    std::vector<RealRoot> breakpoints;
    std::vector<int> interval_values; // size == breakpoints.size() + 1
    std::vector<int> jumps;           // one per breakpoint
    std::vector<int> values_at;       // one per breakpoint

    int sigma() const { return interval_values.front(); }       // lambda -> -inf
    int sigma_tilde() const { return interval_values.back(); }  // lambda -> +inf
};
SignatureProfile profile(const SeifertData& form);

// The jump at rational lambda computed the other way: -sigma(B restricted to
// the generalized eigenspace of S at lambda). 0 when lambda is not an
// eigenvalue.
int jump_via_eigenspace(const SeifertData& form, const Rat& lambda);

// Levine-Tristram signature at the root of unity corresponding to lambda < 0:
// sigma((V+V^t) + i sqrt(-lambda) (V-V^t)). Exact for every rational lambda:
// when -lambda is a rational square the Hermitian inertia is direct, otherwise
// the scale is folded into a congruent rational matrix (only its square
// appears). NonnegativeLambda for lambda >= 0.
int levine_tristram(const MatQ& seifert_v, const Rat& lambda);

// Slice-genus lower bounds from the maximal signature jump over breakpoints
// different from 1.
struct GenusBoundReport {
    int max_jump = 0;
    Rat g4_lower;                                  // max_jump / 4
    Rat sc_lower;                                  // max_jump / 2
    std::vector<std::pair<RealRoot, int>> per_lambda;
};
GenusBoundReport genus_bounds(const SeifertData& system);

} // namespace equiknot
