#include "doctest.h"
#include "equiknot/error.hpp"
#include "equiknot/signature.hpp"
#include "equiknot/symmetric.hpp"
#include "helpers.hpp"

using namespace equiknot;
using testutil::profile_value_at;
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

const MatQ trefoil_v{{-1, 1}, {0, -1}};
const MatQ fig8_v{{1, 1}, {0, -1}};

// jump at an irrational breakpoint, recomputed through the trace form of the
// matching p-primary piece
int jump_via_trace_form(const SeifertData& s, RealRoot bp) {
    PDecomposition dec = p_decompose(symmetric_structure_of(s));
    for (auto& [p, piece] : dec.pieces) {
        if (sign_at(p, bp) != 0) continue;
        SymmetricStructure red = piece;
        while (!eval_poly(p, red.S).is_zero()) red = exponent_reduce(red, p);
        if (red.dim() == 0) return 0; // Witt-trivial piece: no jump survives
        WittSummand w = trace_form_invariants(red, p);
        for (auto& [root, sigma] : w.signatures) {
            RealRoot r = root;
            if (compare(r, bp) == 0) return -sigma;
        }
        return 0;
    }
    FAIL("breakpoint does not belong to any p-primary piece");
    return 0;
}

} // namespace

TEST_CASE("pencil inertia is additive under orthogonal sum") {
    for (int trial = 0; trial < 6; ++trial) {
        SeifertData a = random_valid_form(1 + trial % 3);
        SeifertData b = random_valid_form(1 + (trial + 1) % 3);
        for (const Rat& lambda : {rat_of(-7, 3), Rat(0), rat_of(5, 2)}) {
            Inertia ia = pencil_at(a, lambda), ib = pencil_at(b, lambda);
            Inertia is = pencil_at(orthogonal_sum(a, b), lambda);
            CHECK(is.n_plus == ia.n_plus + ib.n_plus);
            CHECK(is.n_minus == ia.n_minus + ib.n_minus);
            CHECK(is.n_zero == ia.n_zero + ib.n_zero);
        }
    }
}

TEST_CASE("pencil inertia only sees the sign of the scale") {
    SeifertData s = random_valid_form(2);
    SeifertData doubled = s;
    doubled.A = s.A * Rat(2); // not unimodular any more, but the pencil is the same shape
    for (const Rat& lambda : {rat_of(-3, 2), Rat(2)})
        CHECK(pencil_at(doubled, lambda) == pencil_at(s, lambda));
}

TEST_CASE("profile of the unknot generator") {
    SignatureProfile pr = profile(fixture_unknot_g());
    REQUIRE(pr.breakpoints.size() == 1);
    CHECK(pr.breakpoints[0].is_rational());
    CHECK(pr.breakpoints[0].value() == 1);
    CHECK(pr.interval_values == std::vector<int>{0, -2});
    CHECK(pr.jumps == std::vector<int>{-1});
    CHECK(pr.values_at == std::vector<int>{-1});
    CHECK(pr.sigma() == 0);
    CHECK(pr.sigma_tilde() == -2);
}

TEST_CASE("profile of K13n1496 is flat") {
    SignatureProfile pr = profile(fixture_k13n1496());
    CHECK(pr.sigma() == 0);
    CHECK(pr.sigma_tilde() == 0);
    for (int j : pr.jumps) CHECK(j == 0);
}

TEST_CASE("pencil degenerates exactly at the breakpoints") {
    SeifertData s = fixture_fig8();
    CHECK(pencil_at(s, rat_of(1, 5)).n_zero > 0);
    CHECK(pencil_at(s, rat_of(1, 4)).n_zero == 0);
    CHECK(pencil_at(s, Rat(1)).n_zero == 0);
}

TEST_CASE("profile limits match the two boundary signatures") {
    for (int trial = 0; trial < 12; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        SignatureProfile pr = profile(s);
        CHECK(pr.sigma() == signature_symmetric(s.A + s.A.transposed()).signature());
        CHECK(pr.sigma_tilde() == equivariant_signature(s));
    }
}

TEST_CASE("jumps agree with the eigenspace route at rational breakpoints") {
    for (int trial = 0; trial < 10; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        SignatureProfile pr = profile(s);
        for (size_t i = 0; i < pr.breakpoints.size(); ++i) {
            if (!pr.breakpoints[i].is_rational()) continue;
            CHECK(pr.jumps[i] == jump_via_eigenspace(s, pr.breakpoints[i].value()));
        }
        // and the eigenspace route reports 0 away from the spectrum
        CHECK(jump_via_eigenspace(s, rat_of(833, 10)) == 0);
    }
}

TEST_CASE("jumps agree with the trace-form route at irrational breakpoints") {
    int seen = 0;
    for (int trial = 0; trial < 14 && seen < 8; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        SignatureProfile pr = profile(s);
        for (size_t i = 0; i < pr.breakpoints.size(); ++i) {
            if (pr.breakpoints[i].is_rational()) continue;
            ++seen;
            CHECK(pr.jumps[i] == jump_via_trace_form(s, pr.breakpoints[i]));
        }
    }
    CHECK(seen >= 8); // the generator must actually produce irrational spectra
}

TEST_CASE("Levine-Tristram on the trefoil and figure-eight") {
    CHECK(levine_tristram(trefoil_v, Rat(-1)) == -2);
    CHECK(levine_tristram(trefoil_v, Rat(-2)) == -2); // non-square path
    CHECK(levine_tristram(trefoil_v, Rat(-3)) == -1); // singular point: average
    CHECK(levine_tristram(trefoil_v, Rat(-4)) == 0);  // past the breakpoint
    CHECK(levine_tristram(trefoil_v, rat_of(-7, 2)) == 0);
    CHECK(levine_tristram(trefoil_v, rat_of(-1, 100)) ==
          signature_symmetric(trefoil_v + trefoil_v.transposed()).signature());

    for (const Rat& lambda : {Rat(-1), Rat(-2), rat_of(-1, 3), Rat(-5)})
        CHECK(levine_tristram(fig8_v, lambda) == 0);
}

TEST_CASE("Levine-Tristram input guards") {
    CHECK(error_name([] { levine_tristram(trefoil_v, Rat(0)); }) == "NonnegativeLambda");
    CHECK(error_name([] { levine_tristram(trefoil_v, Rat(2)); }) == "NonnegativeLambda");
    CHECK(error_name([] { levine_tristram(MatQ::identity(2), Rat(-1)); }) == "InvalidInput");
}

TEST_CASE("profile value at lambda equals Levine-Tristram at 1/lambda") {
    const std::vector<Rat> lambdas{Rat(-1), Rat(-4), rat_of(-1, 4), Rat(-2), rat_of(-1, 2), Rat(-3)};
    for (int trial = 0; trial < 12; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        SignatureProfile pr = profile(s);
        for (const Rat& lambda : lambdas)
            CHECK(profile_value_at(pr, lambda) == levine_tristram(s.A, Rat(1) / lambda));
    }
}

TEST_CASE("profile negates under the concordance inverse") {
    for (int trial = 0; trial < 8; ++trial) {
        SeifertData s = random_valid_form(1 + trial % 4);
        SignatureProfile pr = profile(s);
        SignatureProfile ni = profile(inverse(s));
        REQUIRE(pr.interval_values.size() == ni.interval_values.size());
        for (size_t i = 0; i < pr.interval_values.size(); ++i)
            CHECK(pr.interval_values[i] == -ni.interval_values[i]);
        for (size_t i = 0; i < pr.jumps.size(); ++i) CHECK(pr.jumps[i] == -ni.jumps[i]);
    }
}

TEST_CASE("profile is additive where both summands are continuous") {
    for (int trial = 0; trial < 8; ++trial) {
        SeifertData a = random_valid_form(1 + trial % 3);
        SeifertData b = random_valid_form(1 + (trial + 1) % 3);
        SignatureProfile pa = profile(a), pb = profile(b);
        SignatureProfile ps = profile(orthogonal_sum(a, b));
        CHECK(ps.sigma() == pa.sigma() + pb.sigma());
        CHECK(ps.sigma_tilde() == pa.sigma_tilde() + pb.sigma_tilde());
        for (const Rat& lambda : {rat_of(-13, 7), rat_of(-3, 5), rat_of(22, 7)})
            CHECK(profile_value_at(ps, lambda) ==
                  profile_value_at(pa, lambda) + profile_value_at(pb, lambda));
    }
}

TEST_CASE("stabilization moves only the jump at lambda = 1") {
    SeifertData s = fixture_fig8();
    SeifertData stab = orthogonal_sum(s, fixture_unknot_g());
    GenusBoundReport before = genus_bounds(s);
    GenusBoundReport after = genus_bounds(stab);
    CHECK(before.max_jump == after.max_jump);
    CHECK(before.g4_lower == after.g4_lower);
    CHECK(profile(stab).sigma_tilde() == profile(s).sigma_tilde() - 2);
}

TEST_CASE("genus bounds on the figure-eight system and its doubles") {
    GenusBoundReport g1 = genus_bounds(fixture_fig8());
    CHECK(g1.max_jump == 1);
    CHECK(g1.g4_lower == rat_of(1, 4));
    CHECK(g1.sc_lower == rat_of(1, 2));
    REQUIRE(g1.per_lambda.size() == 1);
    CHECK(g1.per_lambda[0].second == -1);

    SeifertData two = orthogonal_sum(fixture_fig8(), fixture_fig8());
    GenusBoundReport g2 = genus_bounds(two);
    CHECK(g2.max_jump == 2);
    CHECK(g2.g4_lower == rat_of(1, 2));

    SeifertData bad;
    bad.A = MatQ{{0, 2}, {0, 0}};
    bad.P = MatQ{{0, 1}, {1, 0}};
    CHECK(error_name([&] { genus_bounds(bad); }) == "InvalidInput");
}
