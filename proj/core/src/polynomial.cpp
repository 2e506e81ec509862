#include "equiknot/polynomial.hpp"

#include <algorithm>

#include "equiknot/error.hpp"

namespace equiknot {

// ---------------------------------------------------------------- RatPoly --

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs)
        c_.emplace_back(v);
    trim();
}

RatPoly RatPoly::constant(const Rat& c) {
    RatPoly p;
    if (sgn(c) != 0)
        p.c_ = {c};
    return p;
}

RatPoly RatPoly::x() { return RatPoly({0, 1}); }

RatPoly RatPoly::monomial(const Rat& c, int k) {
    require(k >= 0, "InvalidInput", "negative exponent in ordinary polynomial");
    RatPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
        p.c_[k] = c;
    }
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

Rat RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[k];
}

const Rat& RatPoly::leading() const {
    require(!c_.empty(), "ZeroPolynomial", "leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        c[i] += o.c_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& q : c)
        q = -q;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero())
        return RatPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (Rat& q : c)
        q *= s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    require(!d.is_zero(), "ZeroPolynomial", "division by zero polynomial");
    RatPoly rem = *this;
    if (rem.degree() < d.degree())
        return {RatPoly(), rem};
    std::vector<Rat> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat f = rem.leading() / d.leading();
        q[k] = f;
        // rem -= f * x^k * d
        std::vector<Rat> rc = rem.c_;
        for (int i = 0; i <= d.degree(); ++i)
            rc[k + i] -= f * d.c_[i];
        rem = RatPoly(std::move(rc));
    }
    return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::operator/(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    require(r.is_zero(), "InvalidInput", "inexact polynomial division");
    return q;
}

bool RatPoly::divides(const RatPoly& g) const {
    if (is_zero())
        return g.is_zero();
    return g.divmod(*this).second.is_zero();
}

RatPoly RatPoly::derivative() const {
    if (degree() <= 0)
        return RatPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
    require(!is_zero(), "ZeroPolynomial", "monic of zero polynomial");
    return *this * (Rat(1) / leading());
}

RatPoly RatPoly::pow(int e) const {
    require(e >= 0, "InvalidInput", "negative polynomial power");
    RatPoly r = RatPoly::constant(1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::compose_linear(const Rat& a, const Rat& b) const {
    RatPoly lin(std::vector<Rat>{b, a});
    RatPoly acc;
    for (int i = degree(); i >= 0; --i)
        acc = acc * lin + RatPoly::constant(c_[i]);
    return acc;
}

RatPoly RatPoly::primitive_integer() const {
    if (is_zero())
        return *this;
    Int den(1);
    for (const Rat& q : c_) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        den = l;
    }
    std::vector<Rat> c(c_.size());
    Int content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * Rat(den);
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c[i].get_num().get_mpz_t());
        content = g;
    }
    Rat scale = Rat(1) / Rat(content);
    if (sgn(c.back()) < 0)
        scale = -scale;
    for (Rat& q : c)
        q *= scale;
    return RatPoly(std::move(c));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    if (f.is_zero())
        return f;
    return f.monic();
}

// ------------------------------------------------------- squarefree (Yun) --

SquarefreeDecomposition squarefree_decompose(const RatPoly& f) {
    require(!f.is_zero(), "ZeroPolynomial", "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = f.leading();
    RatPoly fm = f.monic();
    if (fm.degree() == 0)
        return out;
    RatPoly df = fm.derivative();
    RatPoly a0 = gcd(fm, df);
    RatPoly b = fm / a0;
    RatPoly c = df / a0;
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.parts.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

RatPoly squarefree_part(const RatPoly& f) {
    auto dec = squarefree_decompose(f);
    RatPoly out = RatPoly::constant(1);
    for (const auto& [g, m] : dec.parts)
        out = out * g;
    return out;
}

// ---------------------------------------------------- Sturm root isolation --

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
        const RatPoly& p = chain[chain.size() - 2];
        const RatPoly& q = chain.back();
        chain.push_back(-(p.divmod(q).second));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int v = 0, prev = 0;
    for (const RatPoly& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

int sturm_count(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// upper bound B with all real roots in (-B, B)
Rat cauchy_bound(const RatPoly& f) {
    Rat m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rat a = abs(f.coeff(i) / f.leading());
        if (a > m)
            m = a;
    }
    return m + 1;
}

} // namespace

int count_real_roots_in(const RatPoly& squarefree, const Rat& lo, const Rat& hi) {
    require(!squarefree.is_zero(), "ZeroPolynomial", "root counting on zero polynomial");
    require(lo <= hi, "InvalidInput", "empty interval");
    require(sgn(squarefree.eval(lo)) != 0 && sgn(squarefree.eval(hi)) != 0, "InvalidInput",
            "interval endpoints must not be roots");
    if (squarefree.degree() <= 0)
        return 0;
    auto chain = sturm_chain(squarefree);
    return sturm_count(chain, lo, hi);
}

const Rat& RealRoot::value() const {
    require(is_rational(), "InvalidInput", "value of irrational RealRoot");
    return lo;
}

Rat RealRoot::midpoint() const { return (lo + hi) / 2; }

void RealRoot::refine() {
    if (is_rational())
        return;
    auto chain = sturm_chain(poly);
    Rat mid = (lo + hi) / 2;
    // mid cannot be the root (the root is irrational in every use: rational
    // roots carry lo == hi), but it may be another root of poly only if that
    // root lay strictly inside — excluded by the interval invariant.
    if (sturm_count(chain, lo, mid) == 1)
        hi = mid;
    else
        lo = mid;
}

void RealRoot::refine_below(const Rat& width) {
    while (!is_rational() && hi - lo >= width)
        refine();
}

double RealRoot::approx() const { return midpoint().get_d(); }

namespace {

// all roots of g are irrational (rational roots already stripped); g squarefree
void isolate_irrational(const RatPoly& g, int multiplicity, std::vector<RealRoot>& out) {
    if (g.degree() <= 0)
        return;
    auto chain = sturm_chain(g);
    Rat b = cauchy_bound(g);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    int total = sturm_count(chain, -b, b);
    if (total == 0)
        return;
    work.push_back({-b, b, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0)
            continue;
        if (s.count == 1) {
            out.push_back(RealRoot{g, s.lo, s.hi, multiplicity});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        // irrational roots: rational midpoint is never a root
        int left = sturm_count(chain, s.lo, mid);
        work.push_back({s.lo, mid, left});
        work.push_back({mid, s.hi, s.count - left});
    }
}

// rational roots of g (squarefree), ascending
std::vector<Rat> rational_roots(const RatPoly& g) {
    std::vector<Rat> roots;
    if (g.degree() <= 0)
        return roots;
    RatPoly gi = g.primitive_integer();
    // root 0
    if (sgn(gi.coeff(0)) == 0)
        roots.emplace_back(0);
    int low = 0;
    while (sgn(gi.coeff(low)) == 0)
        ++low;
    Int a0 = abs(gi.coeff(low).get_num());
    Int an = abs(gi.leading().get_num());
    std::vector<Int> ps, qs;
    for (Int d(1); d * d <= a0; ++d) {
        if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) {
            ps.push_back(d);
            ps.push_back(a0 / d);
        }
    }
    for (Int d(1); d * d <= an; ++d) {
        if (mpz_divisible_p(an.get_mpz_t(), d.get_mpz_t())) {
            qs.push_back(d);
            qs.push_back(an / d);
        }
    }
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat cand(p, q);
            cand.canonicalize();
            for (int s = 0; s < 2; ++s) {
                Rat r = s ? -cand : cand;
                if (sgn(g.eval(r)) == 0 &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<RealRoot> isolate_real_roots(const RatPoly& f) {
    require(!f.is_zero(), "ZeroPolynomial", "root isolation on zero polynomial");
    std::vector<RealRoot> out;
    auto dec = squarefree_decompose(f);
    for (const auto& [g, mult] : dec.parts) {
        RatPoly rest = g;
        for (const Rat& r : rational_roots(g)) {
            out.push_back(RealRoot{RatPoly(std::vector<Rat>{-r, Rat(1)}), r, r, mult});
            rest = rest / RatPoly(std::vector<Rat>{-r, Rat(1)});
        }
        isolate_irrational(rest, mult, out);
    }
    // sort with refinement; root sets of distinct factors are disjoint
    for (size_t i = 1; i < out.size(); ++i)
        for (size_t j = i; j > 0 && compare(out[j - 1], out[j]) > 0; --j)
            std::swap(out[j - 1], out[j]);
    return out;
}

int compare(RealRoot& a, RealRoot& b) {
    if (a.is_rational() && b.is_rational())
        return cmp(a.value(), b.value());
    if (a.is_rational()) {
        // b irrational: push b's interval off the rational point
        while (a.value() > b.lo && a.value() <= b.hi)
            b.refine();
        return (a.value() <= b.lo) ? -1 : 1;
    }
    if (b.is_rational())
        return -compare(b, a);
    // both irrational
    RatPoly g = (a.poly == b.poly) ? a.poly : gcd(a.poly, b.poly);
    for (int iter = 0;; ++iter) {
        if (a.hi <= b.lo)
            return -1;
        if (b.hi <= a.lo)
            return 1;
        Rat ilo = std::max(a.lo, b.lo), ihi = std::min(a.hi, b.hi);
        if (g.degree() > 0 && ilo < ihi) {
            // a common root inside the overlap is necessarily both roots
            if (sgn(g.eval(ilo)) != 0 && sgn(g.eval(ihi)) != 0 &&
                count_real_roots_in(g, ilo, ihi) == 1 &&
                count_real_roots_in(a.poly, ilo, ihi) == 1 &&
                count_real_roots_in(b.poly, ilo, ihi) == 1)
                return 0;
        }
        a.refine();
        b.refine();
        require(iter < 4096, "InternalError", "RealRoot comparison failed to separate");
    }
}

int sign_at(const RatPoly& g, RealRoot& alpha) {
    if (g.is_zero())
        return 0;
    if (alpha.is_rational())
        return sgn(g.eval(alpha.value()));
    // g vanishes at alpha iff gcd(g, alpha.poly) has a root in the enclosure
    // (that root is then alpha itself, by uniqueness in the interval)
    RatPoly h = gcd(g, alpha.poly);
    if (h.degree() > 0 && sgn(h.eval(alpha.lo)) != 0 && sgn(h.eval(alpha.hi)) != 0 &&
        count_real_roots_in(h, alpha.lo, alpha.hi) >= 1)
        return 0;
    RatPoly gs = squarefree_part(g);
    // refine until the enclosure is free of roots of g
    for (int iter = 0; iter < 4096; ++iter) {
        if (sgn(gs.eval(alpha.lo)) != 0 && sgn(gs.eval(alpha.hi)) != 0 &&
            count_real_roots_in(gs, alpha.lo, alpha.hi) == 0)
            return sgn(g.eval(alpha.hi));
        alpha.refine();
    }
    fail("InternalError", "sign_at failed to separate from roots");
}

// ------------------------------------------------- factorization (Kronecker)

namespace {

std::vector<Int> divisors_of(const Int& n) {
    Int a = abs(n);
    std::vector<Int> out;
    for (Int d(1); d * d <= a; ++d)
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            if (d * d != a)
                out.push_back(a / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

// Lagrange interpolation through (x_i, y_i)
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly term = RatPoly::constant(ys[i]);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j)
                continue;
            // (x - xj) / (xi - xj)
            RatPoly lin(std::vector<Rat>{-xs[j], Rat(1)});
            term = term * lin * (Rat(1) / (xs[i] - xs[j]));
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

// monic irreducible factors of a squarefree primitive integer polynomial with
// no rational roots
void kronecker_split(const RatPoly& g, std::vector<RatPoly>& out) {
    int n = g.degree();
    if (n <= 0)
        return;
    if (n <= 3) { // no rational roots => irreducible for deg <= 3
        out.push_back(g.monic());
        return;
    }
    for (int k = 2; k <= n / 2; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<Rat> xs;
        std::vector<std::vector<Int>> divs;
        long next = 0;
        while (static_cast<int>(xs.size()) < k + 1) {
            Rat x(next);
            next = (next > 0) ? -next : -next + 1;
            Rat v = g.eval(x);
            if (sgn(v) == 0)
                continue; // cannot happen: no rational roots
            xs.push_back(x);
            divs.push_back(divisors_of(v.get_num()));
        }
        // odometer over divisor choices; candidate value at xs[0] kept positive
        // (sign normalization of the factor)
        std::vector<size_t> idx(static_cast<size_t>(k) + 1, 0);
        std::vector<int> sig(static_cast<size_t>(k) + 1, 1); // sign choice, xs[0] fixed +
        auto bump = [&]() -> bool {
            for (size_t pos = idx.size(); pos-- > 0;) {
                if (pos > 0 && sig[pos] == 1) {
                    sig[pos] = -1;
                    return true;
                }
                sig[pos] = 1;
                if (++idx[pos] < divs[pos].size())
                    return true;
                idx[pos] = 0;
            }
            return false;
        };
        while (true) {
            std::vector<Rat> ys(static_cast<size_t>(k) + 1);
            for (size_t i = 0; i < ys.size(); ++i)
                ys[i] = Rat(divs[i][idx[i]] * sig[i]);
            RatPoly cand = interpolate(xs, ys);
            if (cand.degree() == k && cand.divides(g)) {
                RatPoly quot = g / cand;
                kronecker_split(cand.primitive_integer(), out);
                kronecker_split(quot.primitive_integer(), out);
                return;
            }
            if (!bump())
                break;
        }
    }
    out.push_back(g.monic()); // no proper factor of degree <= n/2
}

void factor_squarefree(const RatPoly& g, std::vector<RatPoly>& out) {
    RatPoly gi = g.primitive_integer();
    RatPoly rest = gi;
    for (const Rat& r : rational_roots(gi)) {
        out.push_back(RatPoly(std::vector<Rat>{-r, Rat(1)}));
        rest = rest / RatPoly(std::vector<Rat>{-r, Rat(1)});
    }
    kronecker_split(rest.primitive_integer(), out);
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0)
            return c < 0;
    }
    return false;
}

} // namespace

Factorization factor_rational(const RatPoly& f) {
    require(!f.is_zero(), "ZeroPolynomial", "factorization of zero polynomial");
    require(f.degree() <= 24, "InvalidInput",
            "factor_rational: degree cap 24 exceeded (Kronecker search would blow up)");
    Factorization out;
    out.unit = f.leading();
    if (f.degree() == 0)
        return out;
    auto dec = squarefree_decompose(f);
    for (const auto& [g, mult] : dec.parts) {
        std::vector<RatPoly> irr;
        factor_squarefree(g, irr);
        for (const RatPoly& p : irr)
            out.factors.emplace_back(p, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

// ------------------------------------------------------------- LaurentPoly --

LaurentPoly::LaurentPoly(int min_deg, std::vector<Rat> coeffs) : min_(min_deg), c_(std::move(coeffs)) {
    trim();
}

void LaurentPoly::trim() {
    size_t front = 0;
    while (front < c_.size() && sgn(c_[front]) == 0)
        ++front;
    if (front == c_.size()) {
        c_.clear();
        min_ = 0;
        return;
    }
    size_t back = c_.size();
    while (sgn(c_[back - 1]) == 0)
        --back;
    c_ = std::vector<Rat>(c_.begin() + front, c_.begin() + back);
    min_ += static_cast<int>(front);
}

LaurentPoly LaurentPoly::from_poly(const RatPoly& p, int shift) {
    return LaurentPoly(shift, p.coeffs());
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Rat& c, int k) { return LaurentPoly(k, {c}); }

int LaurentPoly::min_deg() const {
    require(!is_zero(), "ZeroPolynomial", "degree of zero Laurent polynomial");
    return min_;
}

int LaurentPoly::max_deg() const {
    require(!is_zero(), "ZeroPolynomial", "degree of zero Laurent polynomial");
    return min_ + static_cast<int>(c_.size()) - 1;
}

int LaurentPoly::width() const { return is_zero() ? 0 : max_deg() - min_deg(); }

Rat LaurentPoly::coeff(int k) const {
    int i = k - min_;
    if (is_zero() || i < 0 || i >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[i];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    int lo = std::min(min_, o.min_);
    int hi = std::max(max_deg(), o.max_deg());
    std::vector<Rat> c(static_cast<size_t>(hi - lo) + 1, Rat(0));
    for (int k = lo; k <= hi; ++k)
        c[k - lo] = coeff(k) + o.coeff(k);
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& q : c)
        q = -q;
    LaurentPoly out;
    out.min_ = min_;
    out.c_ = std::move(c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero())
        return LaurentPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    }
    return LaurentPoly(min_ + o.min_, std::move(c));
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (Rat& q : c)
        q *= s;
    return LaurentPoly(min_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero())
        return *this;
    LaurentPoly out = *this;
    out.min_ += k;
    return out;
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero())
        return *this;
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return LaurentPoly(-max_deg(), std::move(c));
}

bool LaurentPoly::is_symmetric() const { return *this == reversed(); }

RatPoly LaurentPoly::cleared() const {
    if (is_zero())
        return RatPoly();
    return RatPoly(c_);
}

Rat LaurentPoly::eval(const Rat& x) const {
    require(sgn(x) != 0, "InvalidInput", "Laurent evaluation at zero");
    Rat acc(0);
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        acc = acc * x + c_[i];
    if (is_zero())
        return acc;
    if (min_ >= 0) {
        for (int i = 0; i < min_; ++i)
            acc *= x;
    } else {
        for (int i = 0; i < -min_; ++i)
            acc /= x;
    }
    return acc;
}

// ------------------------------------------------------------ delta family --

RatPoly delta_transform(const LaurentPoly& p) {
    if (p.is_zero())
        return RatPoly();
    require(p.is_symmetric(), "NotSymmetric", "delta transform needs p(t) = p(1/t)");
    int d = p.max_deg();
    // sum_k c_k (1+y)^(d+k) (1-y)^(d-k), a polynomial of degree <= 2d in y
    RatPoly one_plus({1, 1});
    RatPoly one_minus({1, -1});
    std::vector<RatPoly> pp(static_cast<size_t>(2 * d) + 1), pm(static_cast<size_t>(2 * d) + 1);
    pp[0] = RatPoly::constant(1);
    pm[0] = RatPoly::constant(1);
    for (int i = 1; i <= 2 * d; ++i) {
        pp[i] = pp[i - 1] * one_plus;
        pm[i] = pm[i - 1] * one_minus;
    }
    RatPoly acc;
    for (int k = -d; k <= d; ++k) {
        Rat c = p.coeff(k);
        if (sgn(c) == 0)
            continue;
        acc = acc + pp[d + k] * pm[d - k] * c;
    }
    std::vector<Rat> even(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= acc.degree(); ++i) {
        if (i % 2 == 1)
            require(sgn(acc.coeff(i)) == 0, "OddResult",
                    "odd-degree term survived the delta substitution");
        else
            even[i / 2] = acc.coeff(i);
    }
    return RatPoly(std::move(even));
}

LaurentPoly delta_inverse(const RatPoly& q) {
    require(!q.is_zero(), "ZeroPolynomial", "delta_inverse of zero");
    int d = q.degree();
    RatPoly tm1({-1, 1}); // t - 1
    RatPoly tp1({1, 1});  // t + 1
    RatPoly acc;
    for (int j = 0; j <= d; ++j) {
        Rat c = q.coeff(j);
        if (sgn(c) == 0)
            continue;
        acc = acc + tm1.pow(2 * j) * tp1.pow(2 * (d - j)) * c;
    }
    Rat scale = Rat(1);
    for (int i = 0; i < d; ++i)
        scale /= 4;
    LaurentPoly out = LaurentPoly::from_poly(acc * scale, -d);
    require(out.is_symmetric(), "OddResult", "delta_inverse produced a non-symmetric result");
    return out;
}

ComplexRat mu_root_map(const ComplexRat& z) {
    bool real = sgn(z.im) == 0;
    require(!(real && (z.re == 0 || z.re == 1 || z.re == -1)), "ExcludedPoint",
            "mu is undefined at 0, 1, -1");
    // w = (z-1)/(z+1)
    Rat a = z.re - 1, b = z.im;
    Rat c = z.re + 1, d = z.im;
    Rat den = c * c + d * d;
    Rat wr = (a * c + b * d) / den;
    Rat wi = (b * c - a * d) / den;
    // w^2
    return ComplexRat{wr * wr - wi * wi, 2 * wr * wi};
}

LaurentPoly normalize_alexander(const LaurentPoly& f) {
    require(!f.is_zero(), "NotNormalizable", "zero polynomial");
    Rat v1 = f.eval(1);
    require(v1 == 1 || v1 == -1, "NotNormalizable",
            "value at t=1 is " + rat_str(v1) + ", need +-1");
    int lo = f.min_deg(), hi = f.max_deg();
    require((lo + hi) % 2 == 0, "NotNormalizable", "degree span is odd; no symmetric unit multiple");
    LaurentPoly g = f.shifted(-(lo + hi) / 2);
    require(g.is_symmetric(), "NotNormalizable", "no unit multiple is symmetric");
    if (g.eval(1) == 1)
        return g;
    return -g;
}

bool is_square_laurent(const LaurentPoly& f) {
    if (f.is_zero())
        return true;
    if (f.min_deg() % 2 != 0)
        return false;
    RatPoly cleared = f.cleared();
    auto dec = squarefree_decompose(cleared);
    for (const auto& [g, mult] : dec.parts)
        if (mult % 2 != 0)
            return false;
    return is_rational_square(dec.unit);
}

} // namespace equiknot
