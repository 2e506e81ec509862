#include "doctest.h"
#include "equiknot/error.hpp"
#include "equiknot/symmetric.hpp"
#include "helpers.hpp"

using namespace equiknot;
using testutil::random_valid_form;

namespace {

template <class F>
std::string error_name(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

RatPoly strip(RatPoly f, const RatPoly& g) {
    while (!f.is_zero() && g.divides(f)) f = f / g;
    return f;
}

bool proportional(const RatPoly& a, const RatPoly& b) {
    return !a.is_zero() && !b.is_zero() && a.monic() == b.monic();
}

// delta of the symmetrized order polynomial det(A - t A^t), centered so it is
// a symmetric Laurent polynomial of width 2m
RatPoly delta_of_form(const SeifertData& s) {
    LaurentPoly big = LaurentPoly::from_poly(det_linear_pencil(s.A, -s.A.transposed()),
                                             -s.half_rank());
    REQUIRE(big.is_symmetric());
    return delta_transform(big);
}

} // namespace

TEST_CASE("unknot generator: B = (2), S = (1)") {
    SymmetricStructure st = symmetric_structure_of(fixture_unknot_g());
    CHECK(st.dim() == 1);
    CHECK(st.B == MatQ{{2}});
    CHECK(st.S == MatQ{{1}});
}

TEST_CASE("figure-eight system: S = (1/5)") {
    SymmetricStructure st = symmetric_structure_of(fixture_fig8());
    REQUIRE(st.dim() == 1);
    CHECK(st.S.at(0, 0) == rat_of(1, 5));
    CHECK(sign(st.B.at(0, 0)) > 0);
}

TEST_CASE("structure -> form -> structure is exact") {
    SymmetricStructure st;
    st.B = MatQ{{2}};
    st.S = MatQ{{3}};
    SeifertData s = seifert_form_from_structure(st);
    CHECK(s.A == MatQ{{1, 3}, {-3, -3}});
    SymmetricStructure back = symmetric_structure_of(s);
    CHECK(back.B == st.B);
    CHECK(back.S == st.S);

    for (int n = 1; n <= 4; ++n) {
        SymmetricStructure t = symmetric_structure_of(random_valid_form(n));
        SymmetricStructure again = symmetric_structure_of(seifert_form_from_structure(t));
        CHECK(again.B == t.B);
        CHECK(again.S == t.S);
    }
}

TEST_CASE("require_structure rejects malformed data") {
    SymmetricStructure bad;
    bad.B = MatQ::identity(2);
    bad.S = MatQ{{0, 1}, {0, 0}};
    CHECK(error_name([&] { require_structure(bad); }) == "NotSymmetric"); // BS not symmetric

    bad.B = MatQ{{0, 0}, {0, 0}};
    bad.S = MatQ::identity(2);
    CHECK(error_name([&] { require_structure(bad); }) == "SingularSymmetrization");

    SymmetricStructure singular;
    singular.B = MatQ{{0}};
    singular.S = MatQ{{1}};
    CHECK(error_name([&] { seifert_form_from_structure(singular); }) == "NonInvertibleBeta");
}

TEST_CASE("exponent_reduce kills a Jordan block") {
    SymmetricStructure st;
    st.B = MatQ{{0, 1}, {1, 0}};
    st.S = MatQ{{2, 1}, {0, 2}};
    RatPoly p{-2, 1}; // s - 2
    REQUIRE_FALSE(eval_poly(p, st.S).is_zero());
    SymmetricStructure red = exponent_reduce(st, p);
    CHECK(red.dim() == 0); // Witt-trivial: the whole class dies

    // wrong p is refused
    CHECK(error_name([&] { exponent_reduce(st, RatPoly{-3, 1}); }) == "NotPrimary");
}

TEST_CASE("p_decompose splits along irreducible factors") {
    SymmetricStructure st;
    st.B = MatQ{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    st.S = MatQ{{2, 0, 0}, {0, 3, 0}, {0, 0, 3}};
    PDecomposition dec = p_decompose(st);
    REQUIRE(dec.pieces.size() == 2);
    CHECK(dec.s_primary.dim() == 0);
    int total = 0;
    for (auto& [p, piece] : dec.pieces) {
        total += piece.dim();
        if (p == RatPoly{-2, 1}) CHECK(piece.dim() == 1);
        if (p == RatPoly{-3, 1}) CHECK(piece.dim() == 2);
    }
    CHECK(total == st.dim());
}

TEST_CASE("trace transfer to Q[s]/(s^2-5)") {
    SymmetricStructure st;
    st.B = MatQ{{2, 0}, {0, 10}};
    st.S = MatQ{{0, 5}, {1, 0}};
    RatPoly p{-5, 0, 1};
    WittSummand w = trace_form_invariants(st, p);
    CHECK(w.rank_over_F == 1);
    CHECK(w.dim_ambient == 2);
    CHECK(squarefree_class(w.discriminant_class) == 5);
    REQUIRE(w.signatures.size() == 2); // both real embeddings
    for (auto& [root, sigma] : w.signatures) CHECK(sigma == 1);

    // non-reduced input is refused
    SymmetricStructure jordan;
    jordan.B = MatQ{{0, 1}, {1, 0}};
    jordan.S = MatQ{{2, 1}, {0, 2}};
    CHECK(error_name([&] { trace_form_invariants(jordan, RatPoly{-2, 1}); }) == "NotReduced");
}

TEST_CASE("signature parity matches rank over F") {
    for (int trial = 0; trial < 12; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        PDecomposition dec = p_decompose(symmetric_structure_of(s));
        for (auto& [p, piece] : dec.pieces) {
            SymmetricStructure red = piece;
            while (!eval_poly(p, red.S).is_zero()) red = exponent_reduce(red, p);
            if (red.dim() == 0) continue;
            WittSummand w = trace_form_invariants(red, p);
            for (auto& [root, sigma] : w.signatures)
                CHECK((sigma - w.rank_over_F) % 2 == 0);
        }
    }
}

TEST_CASE("equivariant signature: fixtures, additivity, sign flip") {
    CHECK(equivariant_signature(fixture_unknot_g()) == -2);
    CHECK(equivariant_signature(fixture_fig8()) == -2);
    CHECK(equivariant_signature(metabolic_double(MatQ{{1, 1}, {0, -2}})) == 0);

    for (int trial = 0; trial < 8; ++trial) {
        SeifertData a = random_valid_form(1 + trial % 3);
        SeifertData b = random_valid_form(1 + (trial + 1) % 3);
        CHECK(equivariant_signature(orthogonal_sum(a, b)) ==
              equivariant_signature(a) + equivariant_signature(b));
        CHECK(equivariant_signature(inverse(a)) == -equivariant_signature(a));
    }
}

TEST_CASE("Witt class of the +-1 eigenspaces") {
    EquivariantWittClass cls = equivariant_witt_class(fixture_unknot_g());
    CHECK(signature_symmetric(cls.q_plus).signature() == 1);
    CHECK(signature_symmetric(cls.q_minus).signature() == -1);
    CHECK(equivariant_signature(fixture_unknot_g()) ==
          signature_symmetric(cls.q_minus).signature() -
              signature_symmetric(cls.q_plus).signature());
}

TEST_CASE("metabolic double transfers to the trivial Witt class") {
    SeifertData d = metabolic_double(MatQ{{1, 1}, {0, -2}});
    PDecomposition dec = p_decompose(symmetric_structure_of(d));
    for (auto& [p, piece] : dec.pieces) {
        SymmetricStructure red = piece;
        while (!eval_poly(p, red.S).is_zero()) red = exponent_reduce(red, p);
        if (red.dim() == 0) continue;
        WittSummand w = trace_form_invariants(red, p);
        for (auto& [root, sigma] : w.signatures) CHECK(sigma == 0);
    }
}

TEST_CASE("charpoly of S is the delta-transform of the order polynomial") {
    auto law = [](const SeifertData& s) {
        const RatPoly lhs = strip(charpoly(symmetric_structure_of(s).S), RatPoly{-1, 1});
        const RatPoly rhs = strip(delta_of_form(s), RatPoly{-1, 1});
        if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
        return proportional(lhs, rhs);
    };
    CHECK(law(fixture_k13n1496()));
    CHECK(law(fixture_unknot_g()));
    CHECK(law(fixture_fig8()));
    CHECK(law(metabolic_double(MatQ{{1, 1}, {0, -2}})));
    for (int n = 1; n <= 4; ++n) CHECK(law(random_valid_form(n)));
}
