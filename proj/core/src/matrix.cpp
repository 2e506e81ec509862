#include "equiknot/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "equiknot/error.hpp"

namespace equiknot {

MatQ::MatQ(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {
    require(rows >= 0 && cols >= 0, "ShapeMismatch", "negative matrix dimensions");
}

MatQ::MatQ(std::initializer_list<std::initializer_list<long>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(r_) * c_);
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == c_, "ShapeMismatch", "ragged rows");
        for (long v : row)
            a_.emplace_back(v);
    }
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

MatQ MatQ::zero(int rows, int cols) { return MatQ(rows, cols); }

MatQ MatQ::from_columns(const std::vector<VecQ>& cols, int ambient) {
    MatQ m(ambient, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        require(static_cast<int>(cols[j].size()) == ambient, "ShapeMismatch",
                "column length does not match ambient dimension");
        for (int i = 0; i < ambient; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

MatQ MatQ::block_diag(const MatQ& a, const MatQ& b) {
    MatQ m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

Rat& MatQ::at(int i, int j) {
    require(i >= 0 && i < r_ && j >= 0 && j < c_, "ShapeMismatch", "index out of range");
    return a_[static_cast<size_t>(i) * c_ + j];
}

const Rat& MatQ::at(int i, int j) const {
    require(i >= 0 && i < r_ && j >= 0 && j < c_, "ShapeMismatch", "index out of range");
    return a_[static_cast<size_t>(i) * c_ + j];
}

MatQ MatQ::operator+(const MatQ& o) const {
    require(r_ == o.r_ && c_ == o.c_, "ShapeMismatch", "matrix addition shape");
    MatQ m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] + o.a_[i];
    return m;
}

MatQ MatQ::operator-(const MatQ& o) const {
    require(r_ == o.r_ && c_ == o.c_, "ShapeMismatch", "matrix subtraction shape");
    MatQ m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] - o.a_[i];
    return m;
}

MatQ MatQ::operator-() const {
    MatQ m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = -a_[i];
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    require(c_ == o.r_, "ShapeMismatch", "matrix product shape");
    MatQ m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& aik = at(i, k);
            if (sgn(aik) == 0)
                continue;
            for (int j = 0; j < o.c_; ++j)
                m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

MatQ MatQ::operator*(const Rat& s) const {
    MatQ m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] * s;
    return m;
}

bool MatQ::operator==(const MatQ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

MatQ MatQ::transposed() const {
    MatQ m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

bool MatQ::is_symmetric() const {
    if (!is_square())
        return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool MatQ::is_skew_symmetric() const {
    if (!is_square())
        return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i; j < c_; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    return true;
}

bool MatQ::is_integer() const {
    for (const Rat& q : a_)
        if (q.get_den() != 1)
            return false;
    return true;
}

bool MatQ::is_zero() const {
    for (const Rat& q : a_)
        if (sgn(q) != 0)
            return false;
    return true;
}

VecQ MatQ::apply(const VecQ& v) const {
    require(static_cast<int>(v.size()) == c_, "ShapeMismatch", "matrix-vector shape");
    VecQ out(r_, Rat(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (sgn(at(i, j)) != 0)
                out[i] += at(i, j) * v[j];
    return out;
}

VecQ MatQ::apply_transposed(const VecQ& v) const {
    require(static_cast<int>(v.size()) == r_, "ShapeMismatch", "covector-matrix shape");
    VecQ out(c_, Rat(0));
    for (int j = 0; j < c_; ++j)
        for (int i = 0; i < r_; ++i)
            if (sgn(at(i, j)) != 0)
                out[j] += v[i] * at(i, j);
    return out;
}

VecQ MatQ::column(int j) const {
    VecQ v(r_);
    for (int i = 0; i < r_; ++i)
        v[i] = at(i, j);
    return v;
}

void MatQ::set_column(int j, const VecQ& v) {
    require(static_cast<int>(v.size()) == r_, "ShapeMismatch", "column length");
    for (int i = 0; i < r_; ++i)
        at(i, j) = v[i];
}

MatQ MatQ::columns(const std::vector<int>& idx) const {
    MatQ m(r_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        m.set_column(j, column(idx[j]));
    return m;
}

MatQ MatQ::hstack(const MatQ& o) const {
    require(r_ == o.r_, "ShapeMismatch", "hstack row count");
    MatQ m(r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j)
            m.at(i, j) = at(i, j);
        for (int j = 0; j < o.c_; ++j)
            m.at(i, c_ + j) = o.at(i, j);
    }
    return m;
}

Rat MatQ::det() const {
    require(is_square(), "ShapeMismatch", "determinant of non-square matrix");
    MatQ m = *this;
    Rat d(1);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return Rat(0);
        if (piv != col) {
            for (int j = 0; j < c_; ++j)
                std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (sgn(m.at(i, col)) == 0)
                continue;
            Rat f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < c_; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

MatQ MatQ::inverse() const {
    require(is_square(), "ShapeMismatch", "inverse of non-square matrix");
    MatQ aug = hstack(identity(r_));
    auto pivots = rref_in_place(aug);
    require(static_cast<int>(pivots.size()) == r_ && (pivots.empty() || pivots.back() < r_),
            "SingularMatrix", "matrix is singular");
    for (int j = 0; j < r_; ++j)
        require(pivots[j] == j, "SingularMatrix", "matrix is singular");
    MatQ inv(r_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            inv.at(i, j) = aug.at(i, r_ + j);
    return inv;
}

int MatQ::rank() const {
    MatQ m = *this;
    return static_cast<int>(rref_in_place(m).size());
}

Rat MatQ::trace() const {
    require(is_square(), "ShapeMismatch", "trace of non-square matrix");
    Rat t(0);
    for (int i = 0; i < r_; ++i)
        t += at(i, i);
    return t;
}

std::string MatQ::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < c_; ++j)
            os << (j ? ", " : "") << rat_str(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<int> rref_in_place(MatQ& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (sgn(m.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        Rat p = m.at(row, col);
        for (int j = col; j < m.cols(); ++j)
            m.at(row, j) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m.at(i, col)) == 0)
                continue;
            Rat f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Inertia signature_symmetric(const MatQ& a) {
    require(a.is_square(), "ShapeMismatch", "inertia of non-square matrix");
    require(a.is_symmetric(), "NonSymmetric", "inertia needs a symmetric matrix");
    MatQ m = a;
    int n = m.rows();
    std::vector<bool> alive(n, true);
    Inertia res;
    int remaining = n;
    while (remaining > 0) {
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (alive[i] && sgn(m.at(i, i)) != 0) {
                k = i;
                break;
            }
        if (k >= 0) {
            // diagonal pivot: rank-1 congruence (Schur complement)
            if (sgn(m.at(k, k)) > 0)
                ++res.n_plus;
            else
                ++res.n_minus;
            Rat p = m.at(k, k);
            for (int i = 0; i < n; ++i) {
                if (!alive[i] || i == k || sgn(m.at(i, k)) == 0)
                    continue;
                Rat f = m.at(i, k) / p;
                for (int j = 0; j < n; ++j)
                    if (alive[j] && j != k)
                        m.at(i, j) -= f * m.at(k, j);
            }
            alive[k] = false;
            --remaining;
            continue;
        }
        // all live diagonal entries vanish; look for an off-diagonal pivot
        int pi = -1, pj = -1;
        for (int i = 0; i < n && pi < 0; ++i) {
            if (!alive[i])
                continue;
            for (int j = i + 1; j < n; ++j)
                if (alive[j] && sgn(m.at(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi < 0) {
            res.n_zero += remaining;
            break;
        }
        // hyperbolic 2x2 block [[0,a],[a,0]]: contributes (1,1,0); eliminate
        // the rest with the inverse block [[0,1/a],[1/a,0]].
        ++res.n_plus;
        ++res.n_minus;
        Rat p = m.at(pi, pj);
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (alive[i] && i != pi && i != pj)
                rest.push_back(i);
        std::vector<Rat> ci(rest.size()), cj(rest.size());
        for (size_t t = 0; t < rest.size(); ++t) {
            ci[t] = m.at(rest[t], pi);
            cj[t] = m.at(rest[t], pj);
        }
        for (size_t s = 0; s < rest.size(); ++s)
            for (size_t t = 0; t < rest.size(); ++t)
                m.at(rest[s], rest[t]) -= (ci[s] * cj[t] + cj[s] * ci[t]) / p;
        alive[pi] = alive[pj] = false;
        remaining -= 2;
    }
    return res;
}

Inertia signature_hermitian(const MatQ& b, const MatQ& c, const Rat& scale) {
    require(b.is_square() && c.is_square() && b.rows() == c.rows(), "ShapeMismatch",
            "hermitian parts must be square of equal size");
    require(b.is_symmetric(), "NonSymmetric", "real part must be symmetric");
    require(c.is_skew_symmetric(), "NonSymmetric", "imaginary part must be skew-symmetric");
    int n = b.rows();
    MatQ sc = c * scale;
    MatQ r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.at(i, j) = b.at(i, j);
            r.at(n + i, n + j) = b.at(i, j);
            r.at(i, n + j) = -sc.at(i, j);
            r.at(n + i, j) = sc.at(i, j);
        }
    Inertia full = signature_symmetric(r);
    require(full.n_plus % 2 == 0 && full.n_minus % 2 == 0 && full.n_zero % 2 == 0, "OddResult",
            "realified inertia counts must be even");
    return Inertia{full.n_plus / 2, full.n_minus / 2, full.n_zero / 2};
}

Subspace Subspace::span(const MatQ& generator_columns) {
    Subspace s;
    s.ambient_ = generator_columns.rows();
    MatQ rows = generator_columns.transposed();
    auto pivots = rref_in_place(rows);
    int d = static_cast<int>(pivots.size());
    MatQ basis(s.ambient_, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < s.ambient_; ++i)
            basis.at(i, j) = rows.at(j, i);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = MatQ(ambient, 0);
    return s;
}

Subspace Subspace::full(int ambient) { return span(MatQ::identity(ambient)); }

bool Subspace::contains(const VecQ& v) const {
    require(static_cast<int>(v.size()) == ambient_, "ShapeMismatch", "vector ambient dimension");
    MatQ aug = basis_.hstack(MatQ::from_columns({v}, ambient_));
    return aug.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    require(ambient_ == other.ambient_, "ShapeMismatch", "ambient dimensions differ");
    MatQ aug = basis_.hstack(other.basis_);
    return aug.rank() == dim();
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::intersect(const Subspace& o) const {
    require(ambient_ == o.ambient_, "ShapeMismatch", "ambient dimensions differ");
    if (dim() == 0 || o.dim() == 0)
        return Subspace::zero(ambient_);
    // x = U c = W d  <=>  [U | -W] (c; d) = 0
    MatQ stacked = basis_.hstack(-o.basis_);
    Subspace k = kernel(stacked);
    std::vector<VecQ> gens;
    for (int j = 0; j < k.dim(); ++j) {
        VecQ cd = k.basis().column(j);
        VecQ c(cd.begin(), cd.begin() + dim());
        gens.push_back(basis_.apply(c));
    }
    return Subspace::span(MatQ::from_columns(gens, ambient_));
}

Subspace Subspace::sum(const Subspace& o) const {
    require(ambient_ == o.ambient_, "ShapeMismatch", "ambient dimensions differ");
    return Subspace::span(basis_.hstack(o.basis_));
}

VecQ Subspace::coordinates(const VecQ& v) const {
    require(static_cast<int>(v.size()) == ambient_, "ShapeMismatch", "vector ambient dimension");
    MatQ aug = basis_.hstack(MatQ::from_columns({v}, ambient_));
    auto pivots = rref_in_place(aug);
    VecQ coords(dim(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        require(pivots[r] < dim(), "InvalidInput", "vector not in subspace");
        coords[pivots[r]] = aug.at(static_cast<int>(r), dim());
    }
    return coords;
}

Subspace kernel(const MatQ& m) {
    MatQ r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<VecQ> gens;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        VecQ v(m.cols(), Rat(0));
        v[j] = 1;
        for (size_t row = 0; row < pivots.size(); ++row)
            v[pivots[row]] = -r.at(static_cast<int>(row), j);
        gens.push_back(v);
    }
    return Subspace::span(MatQ::from_columns(gens, m.cols()));
}

Subspace generalized_eigenspace(const MatQ& s, const RatPoly& q) {
    require(s.is_square(), "ShapeMismatch", "operator must be square");
    require(!q.is_zero() && q.leading() == 1, "InvalidInput", "polynomial must be monic");
    MatQ m = eval_poly(q, s);
    MatQ power = m;
    Subspace k = kernel(power);
    for (int iter = 1; iter < s.rows(); ++iter) {
        if (k.dim() == s.rows())
            break;
        power = power * m;
        Subspace next = kernel(power);
        if (next.dim() == k.dim())
            break;
        k = next;
    }
    return k;
}

MatQ eval_poly(const RatPoly& p, const MatQ& m) {
    require(m.is_square(), "ShapeMismatch", "polynomial of non-square matrix");
    int n = m.rows();
    MatQ acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        Rat c = p.coeff(k);
        for (int i = 0; i < n; ++i)
            acc.at(i, i) += c;
    }
    return acc;
}

RatPoly charpoly(const MatQ& s) {
    require(s.is_square(), "ShapeMismatch", "characteristic polynomial of non-square matrix");
    int n = s.rows();
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c[n] = 1;
    MatQ m = MatQ::identity(n);
    for (int k = 1; k <= n; ++k) {
        MatQ sm = s * m;
        Rat ck = -sm.trace() / Rat(k);
        c[n - k] = ck;
        m = sm;
        for (int i = 0; i < n; ++i)
            m.at(i, i) += ck;
    }
    return RatPoly(std::move(c));
}

MatQ primitive_integer_columns(const MatQ& m) {
    MatQ out = m;
    for (int j = 0; j < m.cols(); ++j) {
        Int den(1), num(0);
        for (int i = 0; i < m.rows(); ++i) {
            Int d;
            mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), out.at(i, j).get_den().get_mpz_t());
            den = d;
        }
        for (int i = 0; i < m.rows(); ++i) {
            Rat scaled = out.at(i, j) * Rat(den);
            Int g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), scaled.get_num().get_mpz_t());
            num = g;
        }
        if (num == 0)
            continue;
        int lead = 0;
        Rat scale = Rat(den) / Rat(num);
        for (int i = 0; i < m.rows(); ++i) {
            out.at(i, j) *= scale;
            if (lead == 0)
                lead = sgn(out.at(i, j));
        }
        if (lead < 0)
            for (int i = 0; i < m.rows(); ++i)
                out.at(i, j) = -out.at(i, j);
    }
    return out;
}

RatPoly det_linear_pencil(const MatQ& a, const MatQ& b) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "ShapeMismatch",
            "det pencil needs square matrices of equal size");
    int n = a.rows();
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= n; ++k) {
        Rat t(k);
        MatQ m = a + b * t;
        xs.push_back(t);
        ys.push_back(m.det());
    }
    return interpolate(xs, ys);
}

} // namespace equiknot
