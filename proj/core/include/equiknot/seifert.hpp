#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiknot/matrix.hpp"

namespace equiknot {

// Equivariant Seifert data: a bilinear form A with a compatible involution P,
// plus the two covectors h (half-axis intersection) and lk (axis linking).
// Empty h and lk means a bare form (no covector axioms, no kernel condition
// on metabolizers). Size is 2m.
struct SeifertData {
    MatQ A;
    MatQ P;
    VecQ h;  // row covector, h P = -h
    VecQ lk; // row covector, lk P = lk
    std::string name;

    bool has_covectors() const { return !h.empty() || !lk.empty(); }
    int size() const { return A.rows(); }
    int half_rank() const { return size() / 2; }
};

// Axiom check. Returns one entry per violated axiom (empty == valid):
//   "A(Px,Py) = A^t(x,y)", "A - A^t is unimodular", "P^2 = I",
//   "h o P = -h", "lk o P = lk".
// Throws ShapeMismatch when the pieces do not even have matching dimensions.
std::vector<std::string> validate(const SeifertData& s);

// Block sum: diag(A1,A2), diag(P1,P2), concatenated covectors. Summing a
// system with a bare form (or two bare forms) yields a bare form.
SeifertData orthogonal_sum(const SeifertData& a, const SeifertData& b);

// Concordance inverse (-A^t, P, h, -lk). With this sign convention the
// anti-diagonal {(x, Px)} is a full metabolizer of s (+) inverse(s).
SeifertData inverse(const SeifertData& s);

// The witness columns {(e_i, P e_i)} for orthogonal_sum(s, inverse(s)).
MatQ anti_diagonal_witness(const SeifertData& s);

// Checks that span(generators) is P-invariant, A vanishes on it, and (for
// systems) it sits inside ker(h) /\ ker(lk); full additionally requires rank
// m. Dependent generators are rejected (InvalidInput). When `reasons` is
// given, every failed condition is described there.
bool verify_metabolizer(const SeifertData& s, const MatQ& generators, bool full,
                        std::vector<std::string>* reasons = nullptr);

struct SearchOutcome {
    std::optional<MatQ> witness; // primitive integer columns, lexicographically first
    bool exhaustive = false;     // true when "not found" is a proof of absence
    long steps = 0;
};

// Bounded search for a rank `target_rank` partial metabolizer: restrict to
// ker(h) /\ ker(lk), split into P-eigenspaces, enumerate integer coefficient
// tuples up to coeff_bound with isotropy pruning. Rank-1 targets inside
// eigenpieces of dimension <= 2 are decided exactly (binary quadratic form
// isotropy), which is what makes `exhaustive` attainable. Throws
// BoundTooLargeForBudget when the step budget is exceeded.
SearchOutcome search_partial_metabolizer(const SeifertData& s, int target_rank, long coeff_bound);

// Step budget for the search; EQUIKNOT_SEARCH_BUDGET overrides the default 10^7.
long search_budget();

// Two-sided bounds on the algebraic complexity ac = m - max partial
// metabolizer rank. Upper bounds on the rank come from certificates (kernel
// dimension, nonvanishing of the restricted form, signature bounds, exact
// rank-1 decisions); the lower bound is a found witness. `method` records
// which certificate produced each side.
struct ComplexityReport {
    int m = 0;
    int partial_rank_lower = 0;
    int partial_rank_upper = 0;
    int ac_lower = 0;
    int ac_upper = 0;
    std::string method;
};
ComplexityReport complexity_report(const SeifertData& s, long coeff_bound = 3);

// Worked fixtures.
SeifertData fixture_k13n1496();
SeifertData fixture_unknot_g();
SeifertData fixture_fig8();

// diag(theta, theta^t) with the swap involution and zero covectors. With a
// theta that has an ordinary rational metabolizer H, the block sum H + H is a
// full equivariant metabolizer.
SeifertData metabolic_double(const MatQ& theta);

} // namespace equiknot
