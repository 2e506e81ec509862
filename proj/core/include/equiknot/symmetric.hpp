#pragma once

#include <utility>
#include <vector>

#include "equiknot/matrix.hpp"
#include "equiknot/polynomial.hpp"
#include "equiknot/seifert.hpp"

namespace equiknot {

// (V, B, S): symmetric non-degenerate B with a B-self-adjoint operator S
// (B S = S^t B). This is the Q-linear shadow of an equivariant form: V is the
// +1 eigenspace of P, B the symmetrization restricted there, S the square of
// the skew rotation T.
struct SymmetricStructure {
    MatQ B;
    MatQ S;
    int dim() const { return B.rows(); }
};

// NotSymmetric / SingularSymmetrization / ShapeMismatch when st is malformed.
void require_structure(const SymmetricStructure& st);

// Build (B, S) from a form: T := (A+A^t)^{-1}(A^t-A), checked against the
// reconstruction identity A = (Q + T^t Q)/2, then restrict Q and T^2 to the
// +1 eigenspace of P. SingularSymmetrization when det(A+A^t) = 0.
SymmetricStructure symmetric_structure_of(const SeifertData& form);

// The canonical 2n-dimensional form with A = [[B, BS], [-BS, -BS]]/2 and
// P = diag(I, -I); inverse of symmetric_structure_of up to base change.
// NonInvertibleBeta when det B = 0.
SeifertData seifert_form_from_structure(const SymmetricStructure& st);

// For a p-primary structure (charpoly(S) a power of irreducible p), quotient
// by W = im p(S)^(N-1) repeatedly until p(S) = 0. Each step is certified by
// checking the graph {(w, [w])} is an invariant isotropic half-rank subspace
// of the difference sum. NotPrimary if charpoly(S) has another factor.
SymmetricStructure exponent_reduce(const SymmetricStructure& st, const RatPoly& p);

// Splitting along the irreducible factors p != s of charpoly(S):
// pieces are (p, structure restricted to the p-generalized eigenspace),
// pairwise B-orthogonal, sorted by (degree, coefficients) of p. The
// s-primary remainder is carried unclassified (0-dimensional for structures
// coming from unimodular forms, where S is invertible).
struct PDecomposition {
    std::vector<std::pair<RatPoly, SymmetricStructure>> pieces;
    SymmetricStructure s_primary;
};
PDecomposition p_decompose(const SymmetricStructure& st);

// Witt-type invariants of one reduced p-primary piece, transferred to the
// field F = Q[s]/(p): rank of the trace-transferred form over F, its
// signature at every real root of p (exact, via Sturm-refined sign
// evaluation), and the discriminant square class of the ambient rational
// form. NotReduced when p(S) != 0.
struct WittSummand {
    RatPoly p;
    int rank_over_F = 0;
    int dim_ambient = 0;
    std::vector<std::pair<RealRoot, int>> signatures;
    Rat discriminant_class;
};
WittSummand trace_form_invariants(const SymmetricStructure& st, const RatPoly& p);

// Q = A + A^t restricted to the two eigenspaces of P.
struct EquivariantWittClass {
    MatQ q_plus;
    MatQ q_minus;
};
EquivariantWittClass equivariant_witt_class(const SeifertData& form);

// sigma(Q|E-) - sigma(Q|E+): the limit of the pencil signature at +infinity.
int equivariant_signature(const SeifertData& form);

} // namespace equiknot
