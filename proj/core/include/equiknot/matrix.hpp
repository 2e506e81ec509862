#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "equiknot/polynomial.hpp"
#include "equiknot/rational.hpp"

namespace equiknot {

using VecQ = std::vector<Rat>;

// Dense rational matrix. Sizes in this library stay small (<= ~64), so plain
// exact Gaussian elimination is the right tool everywhere.
class MatQ {
public:
    MatQ() = default;
    MatQ(int rows, int cols); // zero-filled
    MatQ(std::initializer_list<std::initializer_list<long>> rows);

    static MatQ identity(int n);
    static MatQ zero(int rows, int cols);
    static MatQ from_columns(const std::vector<VecQ>& cols, int ambient);
    static MatQ block_diag(const MatQ& a, const MatQ& b);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator-() const;
    MatQ operator*(const MatQ& o) const;
    MatQ operator*(const Rat& s) const;
    bool operator==(const MatQ& o) const;

    MatQ transposed() const;
    bool is_symmetric() const;
    bool is_skew_symmetric() const;
    bool is_integer() const;
    bool is_zero() const;

    VecQ apply(const VecQ& v) const;               // M v
    VecQ apply_transposed(const VecQ& v) const;    // v^T M  (as a vector)
    VecQ column(int j) const;
    void set_column(int j, const VecQ& v);
    MatQ columns(const std::vector<int>& idx) const;
    MatQ hstack(const MatQ& o) const;

    Rat det() const;       // square
    MatQ inverse() const;  // throws SingularMatrix
    int rank() const;
    Rat trace() const;

    std::string str() const; // debug aid

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(MatQ& m);

// Exact inertia triple of a symmetric form.
struct Inertia {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    int signature() const { return n_plus - n_minus; }
    int rank() const { return n_plus + n_minus; }
    bool operator==(const Inertia&) const = default;
};

// Sylvester-style symmetric congruence elimination: prefer a nonzero diagonal
// pivot; when the live diagonal is all zero, a 2x2 hyperbolic block on the
// first nonzero off-diagonal entry contributes (1,1,0).
Inertia signature_symmetric(const MatQ& a);

// Inertia of the Hermitian matrix B + i*scale*C (B symmetric, C skew), via the
// realified 2n x 2n symmetric matrix [[B, -sC], [sC, B]] whose counts are all
// even and get halved (asserted).
Inertia signature_hermitian(const MatQ& b, const MatQ& c, const Rat& scale);

// Subspace of Q^n in canonical form: basis columns are the unique reduced
// column echelon basis, so equality of subspaces is equality of matrices.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const MatQ& generator_columns);
    static Subspace zero(int ambient);
    static Subspace full(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const MatQ& basis() const { return basis_; }

    bool contains(const VecQ& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

    // Coordinates of v in the canonical basis; requires contains(v).
    VecQ coordinates(const VecQ& v) const;

private:
    int ambient_ = 0;
    MatQ basis_; // ambient_ x dim, canonical
};

// Right kernel {x : Mx = 0} in canonical form.
Subspace kernel(const MatQ& m);

// Stabilized kernel of q(S)^k, i.e. the q-generalized eigenspace of S.
Subspace generalized_eigenspace(const MatQ& s, const RatPoly& q);

// p(M) by Horner.
MatQ eval_poly(const RatPoly& p, const MatQ& m);

// Characteristic polynomial det(xI - S), Faddeev–LeVerrier (exact).
RatPoly charpoly(const MatQ& s);

// Scale columns to primitive integer vectors (clear denominators, divide by
// content, first nonzero entry positive).
MatQ primitive_integer_columns(const MatQ& m);

// det(a + t*b) as a polynomial in t, by evaluation at deg+1 points and
// Lagrange interpolation (degree <= n, tiny sizes).
RatPoly det_linear_pencil(const MatQ& a, const MatQ& b);

} // namespace equiknot
