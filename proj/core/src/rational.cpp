#include "equiknot/rational.hpp"

#include "equiknot/error.hpp"

namespace equiknot {

Rat rat_of(long num, long den) {
    require(den != 0, "InvalidInput", "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_parse(const std::string& s) {
    if (s.empty())
        fail("InvalidInput", "empty rational literal");
    std::string body = s;
    // strict shape check: optional '-', digits, optionally "/..." with digits
    auto digits_ok = [](const std::string& t) {
        if (t.empty())
            return false;
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    size_t slash = body.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(body))
            fail("InvalidInput", "bad rational literal '" + s + "'");
    } else {
        if (!digits_ok(body.substr(0, slash)) || !digits_ok(body.substr(slash + 1)))
            fail("InvalidInput", "bad rational literal '" + s + "'");
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0)
        fail("InvalidInput", "bad rational literal '" + s + "'");
    if (q.get_den() == 0)
        fail("InvalidInput", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_str(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
    require(is_integer(q), "InvalidInput", "expected integer, got " + rat_str(q));
    return q.get_num();
}

bool fits_json_number(const Int& z) {
    static const Int bound = Int(1) << 53;
    return cmp(abs(z), bound) < 0;
}

bool is_rational_square(const Rat& q) {
    if (sgn(q) < 0)
        return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rat sqrt_rational(const Rat& q) {
    require(is_rational_square(q), "InvalidInput", "not a rational square: " + rat_str(q));
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(n) / Rat(d);
}

namespace {

// strip square factors from |z| by trial division; cofactor gets a perfect
// square check so that e.g. 2*p^2 with large prime p is still handled.
Int squarefree_part(Int z) {
    Int out = 1;
    if (sgn(z) < 0) {
        out = -1;
        z = -z;
    }
    Int d = 2;
    Int rem = z;
    while (d * d <= rem && d < 1000000) {
        if (mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) {
                rem /= d;
                ++e;
            }
            if (e % 2 == 1)
                out *= d;
        }
        d += 1;
    }
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            // even power, contributes nothing
        } else {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
            // rem = r^2 * s with s squarefree would need factoring; settle for
            // keeping rem (correct unless a square factor hides beyond the
            // trial bound).
            out *= rem;
        }
    }
    return out;
}

} // namespace

Int squarefree_class(const Rat& q) {
    require(sgn(q) != 0, "InvalidInput", "square class of zero");
    // q = num/den ~ num*den modulo squares
    return squarefree_part(q.get_num() * q.get_den());
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

} // namespace equiknot
