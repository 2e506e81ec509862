#pragma once

#include <string>
#include <vector>

#include "equiknot/matrix.hpp"
#include "equiknot/polynomial.hpp"

namespace equiknot {

// Catalog row for the 2-bridge knot b(p, q).
struct TwoBridgeKnot {
    long p = 0;
    long q = 0;
    std::string name;
    std::string catalog_order; // "1", "2", "inf", "?" carried verbatim
    int catalog_J = 0;
};

// All-even continued fraction p/q' = [2a_1, ..., 2a_m] for the parity
// representative q' of q with |q'| < p, q' even. Entries store the halves
// a_i; m is even and every a_i nonzero.
struct EvenCF {
    long p = 0;
    long q_used = 0; // the even representative the expansion describes
    std::vector<long> entries;
};
EvenCF even_cf(long p, long q);

// Upper-bidiagonal Seifert matrix from the expansion: diagonal
// (-1)^(i+1) a_i, superdiagonal 1. Self-certifying: |det(V+V^t)| = p and
// det(V - t V^t) must agree with the Fox-calculus oracle up to units, else
// OracleMismatch.
MatQ two_bridge_seifert_matrix(const EvenCF& cf);

// Independent Alexander polynomial: Fox derivative of the relator of the
// 2-bridge group presentation <x,y | W x W^-1 y^-1>,
// W = x^e1 y^e2 ... y^e(p-1), e_i = (-1)^floor(iq/p), abelianized and
// normalized. Uses the odd representative of q (the even one describes the
// mirror, same polynomial after normalization).
LaurentPoly alexander_oracle(long p, long q);

// Normalized det(V - t V^t).
LaurentPoly alexander_from_matrix(const MatQ& v);

// Maximal equivariant signature jump for b(p, q): 1 iff the normalized
// Alexander polynomial has a real root, else 0. Guarded by the two scope
// hypotheses (all roots simple; ordinary Levine-Tristram function identically
// zero, sampled between the negative real roots of the transformed
// polynomial); HypothesisFailure when either fails.
int two_bridge_max_jump(long p, long q);

// Whether the normalized Alexander polynomial is a perfect square (the
// equivariant sliceness obstruction).
bool fox_milnor_square(long p, long q);

// CSV catalog "name,p,q,order,J" (header required).
std::vector<TwoBridgeKnot> load_catalog_csv(const std::string& text);
std::vector<TwoBridgeKnot> load_catalog_file(const std::string& path);

struct TableRow {
    TwoBridgeKnot knot;
    int computed_J = 0;
    bool match = false;
    std::string alexander; // normalized, printed
    long determinant = 0;  // |det(V+V^t)|
};
struct TableReport {
    std::vector<TableRow> rows;
    int mismatches = 0;
};
TableReport table_run(const std::vector<TwoBridgeKnot>& catalog);

} // namespace equiknot
