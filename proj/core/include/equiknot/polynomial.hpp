#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "equiknot/rational.hpp"

namespace equiknot {

// Ordinary polynomial over Q, dense coefficients in ascending degree order.
// Invariant: empty vector = zero polynomial, otherwise the top coefficient is
// nonzero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<long> coeffs); // ascending degrees

    static RatPoly constant(const Rat& c);
    static RatPoly x(); // the monomial t (or s)
    static RatPoly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // quotient/remainder; divisor must be nonzero
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    RatPoly operator/(const RatPoly& d) const; // requires exact division
    bool divides(const RatPoly& g) const;      // this | g

    RatPoly derivative() const;
    RatPoly monic() const; // requires nonzero
    RatPoly pow(int e) const;
    Rat eval(const Rat& x) const;
    RatPoly compose_linear(const Rat& a, const Rat& b) const; // p(a*x+b)

    // multiply coefficients so they are coprime integers, positive leading
    RatPoly primitive_integer() const;

private:
    void trim();
    std::vector<Rat> c_;
};

RatPoly gcd(const RatPoly& a, const RatPoly& b); // monic (or zero)

struct SquarefreeDecomposition {
    Rat unit;                                  // leading constant
    std::vector<std::pair<RatPoly, int>> parts; // monic squarefree, ascending multiplicity
};
// Yun's algorithm: f = unit * prod parts[i].first ^ parts[i].second
SquarefreeDecomposition squarefree_decompose(const RatPoly& f);
RatPoly squarefree_part(const RatPoly& f);

// Real algebraic number: the unique root of `poly` (monic squarefree) in the
// interval (lo, hi]. lo == hi exactly when the root is rational.
struct RealRoot {
    RatPoly poly;
    Rat lo, hi;
    int multiplicity = 1; // w.r.t. the polynomial handed to isolate_real_roots

    bool is_rational() const { return lo == hi; }
    const Rat& value() const; // requires is_rational
    Rat midpoint() const;
    void refine();                        // halve the enclosure
    void refine_below(const Rat& width);  // refine until hi - lo < width
    double approx() const;
};

// Number of distinct real roots of squarefree f in the half-open interval
// (lo, hi], by Sturm sequences.
int count_real_roots_in(const RatPoly& squarefree, const Rat& lo, const Rat& hi);

// All real roots, ascending, with multiplicities and pairwise disjoint
// enclosures. Rational roots come back with lo == hi.
std::vector<RealRoot> isolate_real_roots(const RatPoly& f);

// -1 / 0 / +1 of g at the algebraic point alpha (refines alpha as needed).
int sign_at(const RatPoly& g, RealRoot& alpha);

// order / equality of real algebraic numbers (refines as needed)
int compare(RealRoot& a, RealRoot& b);

// Lagrange interpolation through (xs[i], ys[i]), xs distinct.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct Factorization {
    Rat unit;
    std::vector<std::pair<RatPoly, int>> factors; // monic irreducible, deterministic order
};
// Exact factorization over Q via the Kronecker interpolation method, after
// squarefree splitting and rational-root stripping. Degrees above 24 are
// refused (the divisor enumeration blows up); callers at that size should not
// exist in this codebase.
Factorization factor_rational(const RatPoly& f);

// Laurent polynomial over Q. Invariant: zero has empty coefficients; otherwise
// both ends nonzero. coeff index k means t^k.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int min_deg, std::vector<Rat> coeffs); // coeffs[i] ~ t^(min_deg+i)
    static LaurentPoly from_poly(const RatPoly& p, int shift = 0);
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    int min_deg() const;
    int max_deg() const;
    int width() const; // max_deg - min_deg, 0 for zero
    Rat coeff(int k) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& s) const;
    bool operator==(const LaurentPoly& o) const { return min_ == o.min_ && c_ == o.c_; }

    LaurentPoly shifted(int k) const; // * t^k
    LaurentPoly reversed() const;     // p(1/t)
    bool is_symmetric() const;        // p(t) == p(1/t)
    RatPoly cleared() const;          // t^(-min_deg) * p, ordinary with nonzero constant term
    Rat eval(const Rat& x) const;     // x != 0

private:
    void trim();
    int min_ = 0;
    std::vector<Rat> c_;
};

// delta(p)(s) = ((1-y^2)^d * p((1+y)/(1-y))) with s = y^2, for p symmetric of
// width 2d. The odd part of the intermediate polynomial must cancel (asserted).
RatPoly delta_transform(const LaurentPoly& p);

// delta_inverse(q)(t) = ((t+1)^(2d) / (4t)^d) * q(((t-1)/(t+1))^2), d = deg q.
LaurentPoly delta_inverse(const RatPoly& q);

struct ComplexRat {
    Rat re, im;
    bool operator==(const ComplexRat&) const = default;
};
// mu(z) = ((z-1)/(z+1))^2, exact complex rational arithmetic. z in {0, 1, -1}
// is excluded.
ComplexRat mu_root_map(const ComplexRat& z);

// The unit +-t^k making f symmetric with f(1) = 1; NotNormalizable when f has
// no such multiple or |f(1)| != 1.
LaurentPoly normalize_alexander(const LaurentPoly& f);

// f = g^2 for some Laurent g over Q?
bool is_square_laurent(const LaurentPoly& f);

// ---- text format (CLI + fixtures): e.g. "-t + 3 - t^-1", "1 - 5*s" --------
std::string poly_text(const RatPoly& p, char var = 's');
std::string poly_text(const LaurentPoly& p, char var = 't');
RatPoly parse_poly_text(const std::string& s, char var = 's');
LaurentPoly parse_laurent_text(const std::string& s, char var = 't');

} // namespace equiknot
