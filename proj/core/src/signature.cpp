#include "equiknot/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "equiknot/error.hpp"
#include "equiknot/symmetric.hpp"

namespace equiknot {

Inertia pencil_at(const SeifertData& form, const Rat& lambda) {
    const int n = form.size();
    require(form.P.rows() == n && form.P.cols() == n && form.A.is_square(),
            "ShapeMismatch", "A and P must be square of the same size");
    const MatQ q = form.A + form.A.transposed();
    const Rat one_minus = Rat(1) - lambda;
    const Rat one_plus = Rat(1) + lambda;
    const MatQ real =
        (q * one_minus - (q * form.P) * one_plus) * rat_of(1, 2);
    require(real.is_symmetric(), "NotSymmetric",
            "pencil real part is not symmetric: Q P must be symmetric");
    const MatQ imag = form.A - form.A.transposed();
    return signature_hermitian(real, imag, Rat(1));
}

SignatureProfile profile(const SeifertData& form) {
    const SymmetricStructure st = symmetric_structure_of(form);

    std::vector<RealRoot> roots;
    if (st.dim() > 0)
        roots = isolate_real_roots(charpoly(st.S));
    // enclosures from isolation are disjoint but may touch; push them strictly
    // apart so the gap midpoints land between consecutive eigenvalues
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        while (!(roots[i].hi < roots[i + 1].lo)) {
            roots[i].refine();
            roots[i + 1].refine();
        }

    std::vector<Rat> samples;
    if (roots.empty()) {
        samples.push_back(Rat(0));
    } else {
        // sentinels at +-(1 + Cauchy bound): strictly beyond every eigenvalue
        const RatPoly chi = charpoly(st.S);
        Rat cauchy(1);
        for (int i = 0; i < chi.degree(); ++i)
            cauchy = std::max(cauchy, Rat(abs(chi.coeff(i))));
        const Rat sentinel = cauchy + 2; // 1 + (1 + max |c_i|)
        samples.push_back(Rat(-sentinel));
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            samples.push_back(Rat((roots[i].hi + roots[i + 1].lo) / 2));
        samples.push_back(sentinel);
    }

    SignatureProfile out;
    for (const Rat& x : samples) {
        const Inertia in = pencil_at(form, x);
        require(in.n_zero == 0, "InvalidInput",
                "pencil degenerates away from the eigenvalues of S");
        out.interval_values.push_back(in.signature());
    }
    for (size_t i = 0; i < roots.size(); ++i) {
        const int left = out.interval_values[i];
        const int right = out.interval_values[i + 1];
        require((right - left) % 2 == 0, "OddResult",
                "signature parity mismatch across a breakpoint");
        out.jumps.push_back((right - left) / 2);
        out.values_at.push_back((right + left) / 2);
    }
    out.breakpoints = std::move(roots);
    return out;
}

int jump_via_eigenspace(const SeifertData& form, const Rat& lambda) {
    const SymmetricStructure st = symmetric_structure_of(form);
    if (st.dim() == 0)
        return 0;
    const Rat neg = -lambda;
    const RatPoly linear(std::vector<Rat>{neg, Rat(1)}); // s - lambda
    const Subspace v = generalized_eigenspace(st.S, linear);
    if (v.dim() == 0)
        return 0;
    const MatQ b = v.basis().transposed() * st.B * v.basis();
    return -signature_symmetric(b).signature();
}

int levine_tristram(const MatQ& seifert_v, const Rat& lambda) {
    require(seifert_v.is_square(), "ShapeMismatch", "Seifert matrix must be square");
    require(sign(lambda) < 0, "NonnegativeLambda",
            "lambda must be negative (omega off the real axis)");
    const MatQ q = seifert_v + seifert_v.transposed();
    const MatQ c = seifert_v - seifert_v.transposed();
    require(sign(c.det()) != 0, "InvalidInput", "V - V^t must be invertible");
    const Rat neg = -lambda;
    if (is_rational_square(neg))
        return signature_hermitian(q, c, sqrt_rational(neg)).signature();

    // sqrt(-lambda) irrational: diag(1, 1/sqrt(-lambda)) is a congruence from
    // the realified Hermitian matrix to [[Q, -C], [C, -Q/lambda]], which is
    // rational. Its counts stay even and halve to the Hermitian inertia.
    const int n = seifert_v.rows();
    MatQ big(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big.at(i, j) = q.at(i, j);
            big.at(i, n + j) = -c.at(i, j);
            big.at(n + i, j) = c.at(i, j);
            big.at(n + i, n + j) = -q.at(i, j) / lambda;
        }
    const Inertia in = signature_symmetric(big);
    require(in.n_plus % 2 == 0 && in.n_minus % 2 == 0, "OddResult",
            "realified inertia is not even");
    return (in.n_plus - in.n_minus) / 2;
}

GenusBoundReport genus_bounds(const SeifertData& system) {
    require(validate(system).empty(), "InvalidInput",
            "genus bounds are only meaningful for valid systems");
    SignatureProfile prof = profile(system);
    GenusBoundReport rep;
    for (size_t i = 0; i < prof.breakpoints.size(); ++i) {
        RealRoot& bp = prof.breakpoints[i];
        rep.per_lambda.emplace_back(bp, prof.jumps[i]);
        if (bp.is_rational() && bp.value() == Rat(1))
            continue; // lambda = 1 carries no 4-genus information
        rep.max_jump = std::max(rep.max_jump, std::abs(prof.jumps[i]));
    }
    rep.g4_lower = rat_of(rep.max_jump, 4);
    rep.sc_lower = rat_of(rep.max_jump, 2);
    return rep;
}

} // namespace equiknot
