#include <random>

#include "doctest.h"
#include "equiknot/error.hpp"
#include "equiknot/polynomial.hpp"

using namespace equiknot;

namespace {

std::mt19937_64 rng(0x5eed002);

// random symmetric Laurent polynomial of half-width <= d
LaurentPoly random_symmetric_laurent(int d) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    LaurentPoly p = LaurentPoly::constant(Rat(coeff(rng)));
    for (int k = 1; k <= d; ++k) {
        Rat c(coeff(rng));
        if (sgn(c) == 0)
            continue;
        p = p + LaurentPoly::monomial(c, k) + LaurentPoly::monomial(c, -k);
    }
    // the transform pair is only degree-preserving when p(-1) != 0 (the top
    // coefficient of the image is +-p(-1)); every symmetrized form matrix we
    // feed it has p(-1) = det(A + A^t) != 0, so stay in that regime
    if (p.is_zero() || p.eval(Rat(-1)) == 0)
        return random_symmetric_laurent(d);
    return p;
}

RatPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending)
        c.emplace_back(v);
    return RatPoly(std::move(c));
}

} // namespace

TEST_CASE("squarefree decomposition") {
    // (s-1)^2 (s+2) = s^3 - 3s + 2
    RatPoly f = poly({2, -3, 0, 1});
    auto d = squarefree_decompose(f);
    REQUIRE(d.parts.size() == 2); // ascending multiplicity
    CHECK(d.parts[0].first == poly({2, 1}));
    CHECK(d.parts[0].second == 1);
    CHECK(d.parts[1].first == poly({-1, 1}));
    CHECK(d.parts[1].second == 2);

    auto sf = squarefree_decompose(poly({-5, 0, 1}));
    REQUIRE(sf.parts.size() == 1);
    CHECK(sf.parts[0] == std::make_pair(poly({-5, 0, 1}), 1));

    // (s^2+1)^2
    auto sq = squarefree_decompose(poly({1, 0, 1}) * poly({1, 0, 1}));
    REQUIRE(sq.parts.size() == 1);
    CHECK(sq.parts[0] == std::make_pair(poly({1, 0, 1}), 2));

    CHECK_THROWS_AS(squarefree_decompose(RatPoly()), Error);
}

TEST_CASE("real root isolation") {
    auto roots = isolate_real_roots(poly({-5, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(!roots[0].is_rational());
    roots[0].refine_below(rat_of(1, 10));
    roots[1].refine_below(rat_of(1, 10));
    CHECK(roots[0].hi < 0);
    CHECK(roots[1].lo > 0);
    // enclosures actually bracket +-sqrt(5)
    CHECK(roots[1].lo * roots[1].lo < 5);
    CHECK(roots[1].hi * roots[1].hi > 5);

    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());

    auto lin = isolate_real_roots(poly({1, -5}));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].is_rational());
    CHECK(lin[0].value() == rat_of(1, 5));
    CHECK(lin[0].multiplicity == 1);

    // multiplicity and ordering: (s-1)^2 (s^2-5)
    auto mixed = isolate_real_roots(poly({-1, 1}) * poly({-1, 1}) * poly({-5, 0, 1}));
    REQUIRE(mixed.size() == 3);
    CHECK(!mixed[0].is_rational());
    CHECK(mixed[1].is_rational());
    CHECK(mixed[1].value() == 1);
    CHECK(mixed[1].multiplicity == 2);
    CHECK(!mixed[2].is_rational());
}

TEST_CASE("isolating intervals keep exactly one root through 20 bisections") {
    RatPoly f = poly({-5, 0, 1}) * poly({-1, 1}) * poly({1, 3, 1}) * poly({-7, 0, 0, 1});
    for (RealRoot r : isolate_real_roots(f)) {
        for (int i = 0; i < 20; ++i) {
            r.refine();
            if (r.is_rational())
                break;
            CHECK(count_real_roots_in(r.poly, r.lo, r.hi) == 1);
        }
    }
}

TEST_CASE("real root comparison and signs") {
    auto r5 = isolate_real_roots(poly({-5, 0, 1})); // +-sqrt(5)
    auto r2 = isolate_real_roots(poly({-2, 0, 1})); // +-sqrt(2)
    CHECK(compare(r5[0], r2[0]) < 0);               // -sqrt5 < -sqrt2
    CHECK(compare(r2[1], r5[1]) < 0);               // sqrt2 < sqrt5
    CHECK(compare(r5[1], r5[1]) == 0);
    // same algebraic number from different polynomials
    auto r20 = isolate_real_roots(poly({-20, 0, 1})); // +-2sqrt(5)
    auto twice = isolate_real_roots(poly({-5, 0, 1}));
    CHECK(compare(r20[1], twice[1]) > 0);
    // sign_at: evaluate s^2 - 4 at sqrt(5) (positive), at sqrt(2) (negative)
    CHECK(sign_at(poly({-4, 0, 1}), r5[1]) == 1);
    CHECK(sign_at(poly({-4, 0, 1}), r2[1]) == -1);
    // vanishing case: s^2-5 at sqrt5
    CHECK(sign_at(poly({-5, 0, 1}), r5[1]) == 0);
    CHECK(sign_at(poly({-10, 0, 2}), r5[1]) == 0);
}

TEST_CASE("rational factorization") {
    auto f1 = factor_rational(poly({-5, 0, 1}));
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0] == std::make_pair(poly({-5, 0, 1}), 1));

    auto f2 = factor_rational(poly({-1, 0, 1}));
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == std::make_pair(poly({-1, 1}), 1));
    CHECK(f2.factors[1] == std::make_pair(poly({1, 1}), 1));

    auto f3 = factor_rational(poly({1, 0, 1}) * poly({-3, 1}));
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0] == std::make_pair(poly({-3, 1}), 1));
    CHECK(f3.factors[1] == std::make_pair(poly({1, 0, 1}), 1));
}

TEST_CASE("factorization reassembles the input and factors are irreducible") {
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Rat> c;
        int deg = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < deg; ++i)
            c.emplace_back(coeff(rng));
        c.emplace_back(1 + static_cast<int>(rng() % 3));
        RatPoly f(std::move(c));
        if (f.degree() < 1)
            continue;
        auto fac = factor_rational(f);
        RatPoly prod = RatPoly::constant(fac.unit);
        for (auto& [p, m] : fac.factors) {
            CHECK(p.leading() == 1);
            for (int i = 0; i < m; ++i)
                prod = prod * p;
            // irreducible: factoring again returns the factor itself
            auto again = factor_rational(p);
            CHECK(again.factors.size() == 1);
            CHECK(again.factors[0].second == 1);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("quartic with known quadratic split") {
    // (s^2 - s - 1)(s^2 + 3) has no rational roots; exercises the interpolation search
    RatPoly f = poly({-1, -1, 1}) * poly({3, 0, 1});
    auto fac = factor_rational(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == poly({-1, -1, 1}));
    CHECK(fac.factors[1].first == poly({3, 0, 1}));
}

TEST_CASE("delta transform") {
    CHECK(delta_transform(LaurentPoly::constant(Rat(1))) == RatPoly::constant(Rat(1)));
    // 3 - t - t^-1  ->  1 - 5s
    LaurentPoly tref = LaurentPoly::constant(Rat(3)) + LaurentPoly::monomial(Rat(-1), 1) +
                       LaurentPoly::monomial(Rat(-1), -1);
    CHECK(delta_transform(tref) == poly({1, -5}));
    // not symmetric
    CHECK_THROWS_AS(delta_transform(LaurentPoly::monomial(Rat(1), 1)), Error);
}

TEST_CASE("delta inverse") {
    // s - 10 -> (-9t - 22 - 9/t)/4
    LaurentPoly got = delta_inverse(poly({-10, 1}));
    LaurentPoly want = LaurentPoly::monomial(rat_of(-9, 4), 1) +
                       LaurentPoly::constant(rat_of(-22, 4)) +
                       LaurentPoly::monomial(rat_of(-9, 4), -1);
    CHECK(got == want);
    LaurentPoly tref = LaurentPoly::constant(Rat(3)) + LaurentPoly::monomial(Rat(-1), 1) +
                       LaurentPoly::monomial(Rat(-1), -1);
    CHECK(delta_inverse(poly({1, -5})) == tref);
    CHECK(delta_inverse(RatPoly::constant(Rat(1))) == LaurentPoly::constant(Rat(1)));
}

TEST_CASE("delta round trip on random symmetric polynomials") {
    for (int trial = 0; trial < 120; ++trial) {
        LaurentPoly p = random_symmetric_laurent(1 + static_cast<int>(rng() % 8));
        CHECK(delta_inverse(delta_transform(p)) == p);
    }
}

TEST_CASE("delta is multiplicative") {
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_symmetric_laurent(1 + static_cast<int>(rng() % 4));
        LaurentPoly q = random_symmetric_laurent(1 + static_cast<int>(rng() % 4));
        CHECK(delta_transform(p * q) == delta_transform(p) * delta_transform(q));
    }
}

TEST_CASE("mu maps roots of symmetric factors to roots of the transform") {
    // p = (t - z)(t - 1/z) * z has delta image with root mu(z); use z = 3 and z = 1/2.
    // (t-3)(t-1/3)*(-3)... simpler: p = t + t^-1 - (z + 1/z) is symmetric with roots z, 1/z.
    auto check_root = [](Rat z) {
        Rat s = z + Rat(1) / z;
        LaurentPoly p = LaurentPoly::monomial(Rat(1), 1) + LaurentPoly::monomial(Rat(1), -1) +
                        LaurentPoly::constant(-s);
        RatPoly q = delta_transform(p);
        auto [mre, mim] = mu_root_map({z, Rat(0)});
        CHECK(mim == 0);
        CHECK(q.eval(mre) == 0);
    };
    check_root(Rat(3));
    check_root(rat_of(1, 2));
    check_root(Rat(-5));

    auto [re3, im3] = mu_root_map({Rat(3), Rat(0)});
    CHECK(re3 == rat_of(1, 4));
    CHECK(im3 == 0);
    auto [rei, imi] = mu_root_map({Rat(0), Rat(1)});
    CHECK(rei == -1);
    CHECK(imi == 0);
    CHECK_THROWS_AS(mu_root_map({Rat(1), Rat(0)}), Error);
    CHECK_THROWS_AS(mu_root_map({Rat(0), Rat(0)}), Error);

    // mu(z) = mu(1/z)
    for (int trial = 0; trial < 20; ++trial) {
        Rat z = rat_of(2 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 7));
        if (z == 1)
            continue;
        auto a = mu_root_map({z, Rat(0)});
        auto b = mu_root_map({Rat(Rat(1) / z), Rat(0)});
        CHECK(a == b);
    }
}

TEST_CASE("root correspondence with multiplicity on quadratic products") {
    // Delta = (t + t^-1 - 10/3)^2 (t + t^-1 + 5/2): mu-images 1/4 (x2) and mu(-2) = 9
    LaurentPoly f1 = LaurentPoly::monomial(Rat(1), 1) + LaurentPoly::monomial(Rat(1), -1) +
                     LaurentPoly::constant(rat_of(-10, 3));
    LaurentPoly f2 = LaurentPoly::monomial(Rat(1), 1) + LaurentPoly::monomial(Rat(1), -1) +
                     LaurentPoly::constant(rat_of(5, 2));
    RatPoly q = delta_transform(f1 * f1 * f2);
    // roots of f1: 3 and 1/3 -> mu = 1/4; roots of f2: -2 and -1/2 -> mu = 9
    auto [m1re, m1im] = mu_root_map({Rat(3), Rat(0)});
    auto [m2re, m2im] = mu_root_map({Rat(-2), Rat(0)});
    REQUIRE(m1im == 0);
    REQUIRE(m2im == 0);
    auto fac = factor_rational(q);
    // expect (s - 1/4)^2 and (s - 9) up to unit
    int found_m1 = 0, found_m2 = 0;
    for (auto& [p, m] : fac.factors) {
        if (p == RatPoly(std::vector<Rat>{Rat(-m1re), Rat(1)}))
            found_m1 = m;
        if (p == RatPoly(std::vector<Rat>{Rat(-m2re), Rat(1)}))
            found_m2 = m;
    }
    CHECK(found_m1 == 2);
    CHECK(found_m2 == 1);
}

TEST_CASE("alexander normalization") {
    // t^2 - 3t + 1 -> -t + 3 - t^-1
    LaurentPoly f = LaurentPoly::monomial(Rat(1), 2) + LaurentPoly::monomial(Rat(-3), 1) +
                    LaurentPoly::constant(Rat(1));
    LaurentPoly n = normalize_alexander(f);
    LaurentPoly want = LaurentPoly::monomial(Rat(-1), 1) + LaurentPoly::constant(Rat(3)) +
                       LaurentPoly::monomial(Rat(-1), -1);
    CHECK(n == want);
    CHECK(n.eval(Rat(1)) == 1);

    // 2t^2 - 3t + 2 -> 2t - 3 + 2t^-1 (sign chosen so value at 1 is +1)
    LaurentPoly g = LaurentPoly::monomial(Rat(2), 2) + LaurentPoly::monomial(Rat(-3), 1) +
                    LaurentPoly::constant(Rat(2));
    LaurentPoly ng = normalize_alexander(g);
    LaurentPoly wantg = LaurentPoly::monomial(Rat(2), 1) + LaurentPoly::constant(Rat(-3)) +
                        LaurentPoly::monomial(Rat(2), -1);
    CHECK(ng == wantg);
    CHECK(ng.eval(Rat(1)) == 1);

    CHECK(normalize_alexander(LaurentPoly::constant(Rat(1))) == LaurentPoly::constant(Rat(1)));
    CHECK(normalize_alexander(LaurentPoly::constant(Rat(-1))) == LaurentPoly::constant(Rat(1)));

    // value at 1 not a unit
    LaurentPoly bad = LaurentPoly::monomial(Rat(1), 1) + LaurentPoly::constant(Rat(1));
    CHECK_THROWS_AS(normalize_alexander(bad), Error);
    // odd span can never be made symmetric by t^k
    LaurentPoly odd = LaurentPoly::monomial(Rat(2), 1) + LaurentPoly::constant(Rat(-1));
    CHECK_THROWS_AS(normalize_alexander(odd), Error);
}

TEST_CASE("laurent square detection") {
    LaurentPoly tref = LaurentPoly::constant(Rat(3)) + LaurentPoly::monomial(Rat(-1), 1) +
                       LaurentPoly::monomial(Rat(-1), -1);
    CHECK(!is_square_laurent(tref));
    LaurentPoly g = LaurentPoly::monomial(Rat(1), 1) + LaurentPoly::constant(Rat(-1)) +
                    LaurentPoly::monomial(Rat(1), -1);
    CHECK(is_square_laurent(g * g));
    CHECK(is_square_laurent(LaurentPoly::constant(Rat(1))));
    CHECK(is_square_laurent(LaurentPoly::constant(rat_of(9, 4))));
    CHECK(!is_square_laurent(LaurentPoly::constant(Rat(-1))));
    // square times a non-square unit is not a square
    CHECK(!is_square_laurent(g * g * LaurentPoly::constant(Rat(2))));
    // odd power of t is not a square even if the rest is
    CHECK(!is_square_laurent(g * g * LaurentPoly::monomial(Rat(1), 1)));
    CHECK(is_square_laurent(g * g * LaurentPoly::monomial(Rat(1), 2)));
}

TEST_CASE("polynomial text round trip") {
    CHECK(poly_text(poly({1, -5})) == "-5*s + 1");
    CHECK(poly_text(RatPoly()) == "0");
    CHECK(parse_poly_text("s^2 - 5") == poly({-5, 0, 1}));
    CHECK(parse_poly_text("-5*s+1") == poly({1, -5}));
    CHECK(parse_poly_text("1/4*s^2") == RatPoly({Rat(0), Rat(0), rat_of(1, 4)}));

    LaurentPoly tref = LaurentPoly::constant(Rat(3)) + LaurentPoly::monomial(Rat(-1), 1) +
                       LaurentPoly::monomial(Rat(-1), -1);
    CHECK(poly_text(tref) == "-t + 3 - t^-1");
    CHECK(parse_laurent_text("-t + 3 - t^-1") == tref);
    CHECK(parse_laurent_text("-t+3-t^-1") == tref);
    CHECK(poly_text(LaurentPoly()) == "0");
    CHECK(parse_laurent_text("0") == LaurentPoly());

    CHECK_THROWS_AS(parse_poly_text("s^-1"), Error);
    CHECK_THROWS_AS(parse_poly_text("t + 1"), Error);
    CHECK_THROWS_AS(parse_laurent_text(""), Error);
    CHECK_THROWS_AS(parse_laurent_text("t^"), Error);

    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly p;
        int lo = -static_cast<int>(rng() % 5);
        int n = 1 + static_cast<int>(rng() % 6);
        for (int k = lo; k < lo + n; ++k)
            p = p + LaurentPoly::monomial(Rat(coeff(rng)), k);
        CHECK(parse_laurent_text(poly_text(p)) == p);
    }
}
