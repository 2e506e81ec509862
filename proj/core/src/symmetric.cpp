#include "equiknot/symmetric.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "equiknot/error.hpp"

namespace equiknot {
namespace {

// Unique solution columns X of M X = Rhs. M must have full column rank and
// every rhs column must lie in its column span; both are certain for the
// callers here (restriction of an operator to an invariant subspace), so a
// violation is a bug, not bad input.
MatQ solve_columns(const MatQ& m, const MatQ& rhs) {
    require(m.rows() == rhs.rows(), "ShapeMismatch", "solve: row counts differ");
    MatQ aug = m.hstack(rhs);
    std::vector<int> pivots = rref_in_place(aug);
    bool ok = static_cast<int>(pivots.size()) == m.cols();
    for (size_t k = 0; ok && k < pivots.size(); ++k)
        ok = pivots[k] == static_cast<int>(k);
    require(ok, "InvalidInput", "solve: system is not uniquely solvable");
    MatQ x(m.cols(), rhs.cols());
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            x.at(i, j) = aug.at(i, m.cols() + j);
    return x;
}

MatQ restrict_form(const MatQ& b, const MatQ& basis) {
    return basis.transposed() * b * basis;
}

// Matrix of S on span(basis) w.r.t. basis; the span must be S-invariant.
MatQ restrict_operator(const MatQ& s, const MatQ& basis) {
    return solve_columns(basis, s * basis);
}

SymmetricStructure empty_structure() {
    return SymmetricStructure{MatQ(0, 0), MatQ(0, 0)};
}

// One quotient step W^perp / W for W = im p(S)^(N-1), N minimal with
// p(S)^N = 0. Certified before returning.
SymmetricStructure reduce_once(const SymmetricStructure& st, const RatPoly& p) {
    const int n = st.dim();
    const MatQ ps = eval_poly(p, st.S);
    MatQ pw = ps;
    int nexp = 1;
    while (!pw.is_zero()) {
        require(nexp <= n, "NotPrimary", "p(S) is not nilpotent");
        pw = pw * ps;
        ++nexp;
    }
    // caller guarantees ps != 0, so nexp >= 2 and W below is nonzero
    MatQ top = ps;
    for (int i = 2; i + 1 <= nexp; ++i)
        top = top * ps;
    const Subspace w = Subspace::span(top);
    const Subspace wperp = kernel(w.basis().transposed() * st.B);
    require(wperp.contains(w), "NotPrimary", "im p(S)^(N-1) is not isotropic");

    // greedy complement of W inside W^perp
    Subspace acc = w;
    std::vector<VecQ> comp;
    for (int j = 0; j < wperp.dim(); ++j) {
        VecQ v = wperp.basis().column(j);
        if (acc.contains(v))
            continue;
        comp.push_back(v);
        acc = acc.sum(Subspace::span(MatQ::from_columns({v}, n)));
    }
    const MatQ c = MatQ::from_columns(comp, n);
    const int m = c.cols();

    SymmetricStructure out;
    out.B = restrict_form(st.B, c);
    // S maps W^perp to itself; its matrix on the quotient is the C-block of
    // the coordinates of S*C in the basis [W | C].
    const MatQ wc = w.basis().hstack(c);
    const MatQ coords_sc = solve_columns(wc, st.S * c);
    out.S = MatQ(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.S.at(i, j) = coords_sc.at(w.dim() + i, j);

    // Certificate that (B,S) and the quotient are Witt equivalent: the graph
    // {(u, [u]) : u in W^perp} must be an invariant isotropic subspace of half
    // rank in the difference sum.
    const MatQ coords_u = solve_columns(wc, wperp.basis());
    MatQ gens(n + m, wperp.dim());
    for (int j = 0; j < wperp.dim(); ++j) {
        for (int i = 0; i < n; ++i)
            gens.at(i, j) = wperp.basis().at(i, j);
        for (int i = 0; i < m; ++i)
            gens.at(n + i, j) = coords_u.at(w.dim() + i, j);
    }
    const MatQ diff_b = MatQ::block_diag(st.B, -out.B);
    require((gens.transposed() * diff_b * gens).is_zero(), "NotPrimary",
            "quotient certificate failed: graph not isotropic");
    const Subspace graph = Subspace::span(gens);
    require(2 * graph.dim() == n + m, "NotPrimary",
            "quotient certificate failed: graph is not half rank");
    const MatQ diff_s = MatQ::block_diag(st.S, out.S);
    for (int j = 0; j < gens.cols(); ++j)
        require(graph.contains(diff_s.apply(gens.column(j))), "NotPrimary",
                "quotient certificate failed: graph not invariant");

    require_structure(out);
    return out;
}

RatPoly poly_mod(const RatPoly& a, const RatPoly& p) {
    return a.divmod(p).second;
}

// Inverse of a mod irreducible p, extended Euclid. A nontrivial gcd can only
// appear when p is reducible, which the caller's precondition excludes.
RatPoly poly_invmod(const RatPoly& a, const RatPoly& p) {
    RatPoly r0 = p, r1 = poly_mod(a, p);
    RatPoly s0, s1 = RatPoly::constant(Rat(1));
    require(!r1.is_zero(), "InvalidInput", "inverting 0 in Q[s]/(p)");
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    require(r0.degree() == 0, "InvalidInput", "p is not irreducible: gcd found a factor");
    return poly_mod(s0 * RatPoly::constant(Rat(1) / r0.coeff(0)), p);
}

// trace of multiplication by s^k on Q[s]/(p) for k = 0 .. 2d-2, via powers of
// the companion matrix.
std::vector<Rat> power_traces(const RatPoly& p) {
    const int d = p.degree();
    MatQ comp(d, d);
    for (int i = 0; i + 1 < d; ++i)
        comp.at(i + 1, i) = Rat(1);
    for (int i = 0; i < d; ++i)
        comp.at(i, d - 1) = -p.coeff(i);
    std::vector<Rat> tr;
    MatQ pw = MatQ::identity(d);
    for (int k = 0; k <= 2 * d - 2; ++k) {
        tr.push_back(pw.trace());
        pw = pw * comp;
    }
    return tr;
}

} // namespace

void require_structure(const SymmetricStructure& st) {
    require(st.B.is_square() && st.S.is_square() && st.B.rows() == st.S.rows(),
            "ShapeMismatch", "B and S must be square of the same size");
    require(st.B.is_symmetric(), "NotSymmetric", "B must be symmetric");
    require((st.B * st.S).is_symmetric(), "NotSymmetric",
            "S must be B-self-adjoint (B S = S^t B)");
    if (st.dim() > 0)
        require(sign(st.B.det()) != 0, "SingularSymmetrization", "B must be non-degenerate");
}

SymmetricStructure symmetric_structure_of(const SeifertData& form) {
    const int n = form.size();
    require(form.P.rows() == n && form.P.cols() == n && form.A.is_square(),
            "ShapeMismatch", "A and P must be square of the same size");
    const MatQ q = form.A + form.A.transposed();
    require(sign(q.det()) != 0, "SingularSymmetrization",
            "det(A + A^t) = 0: the symmetrized form is degenerate");
    const MatQ t = q.inverse() * (form.A.transposed() - form.A);
    require((q + t.transposed() * q) * rat_of(1, 2) == form.A, "InvalidInput",
            "A is not reconstructed by (Q + T^t Q)/2");

    const Subspace eplus = kernel(form.P - MatQ::identity(n));
    const Subspace eminus = kernel(form.P + MatQ::identity(n));
    require(eplus.dim() + eminus.dim() == n, "InvalidInput",
            "P does not split the space into +1/-1 eigenspaces");
    const MatQ u = eplus.basis();
    const MatQ t2u = t * (t * u);
    for (int j = 0; j < u.cols(); ++j)
        require(eplus.contains(t2u.column(j)), "InvalidInput",
                "T^2 does not preserve the +1 eigenspace of P");

    SymmetricStructure st;
    st.B = restrict_form(q, u);
    st.S = u.cols() > 0 ? solve_columns(u, t2u) : MatQ(0, 0);
    require_structure(st);
    return st;
}

SeifertData seifert_form_from_structure(const SymmetricStructure& st) {
    require(st.B.is_square() && st.S.is_square() && st.B.rows() == st.S.rows(),
            "ShapeMismatch", "B and S must be square of the same size");
    require(st.B.is_symmetric(), "NotSymmetric", "B must be symmetric");
    require((st.B * st.S).is_symmetric(), "NotSymmetric",
            "S must be B-self-adjoint (B S = S^t B)");
    require(st.dim() == 0 || sign(st.B.det()) != 0, "NonInvertibleBeta",
            "beta must be invertible to rebuild a Seifert form");

    const int n = st.dim();
    const MatQ bs = st.B * st.S;
    const Rat half = rat_of(1, 2);
    MatQ a(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a.at(i, j) = st.B.at(i, j) * half;
            a.at(i, n + j) = bs.at(i, j) * half;
            a.at(n + i, j) = -bs.at(i, j) * half;
            a.at(n + i, n + j) = -bs.at(i, j) * half;
        }
    SeifertData out;
    out.A = a;
    out.P = MatQ::block_diag(MatQ::identity(n), -MatQ::identity(n));
    out.name = "";
    return out; // bare form: no covectors
}

SymmetricStructure exponent_reduce(const SymmetricStructure& st, const RatPoly& p) {
    require_structure(st);
    require(p.degree() >= 1, "InvalidInput", "p must be non-constant");
    const RatPoly pm = p.monic();
    if (st.dim() == 0)
        return st;

    RatPoly rem = charpoly(st.S);
    while (rem.degree() > 0) {
        auto [quo, r] = rem.divmod(pm);
        require(r.is_zero(), "NotPrimary", "charpoly(S) is not a power of p");
        rem = quo;
    }

    SymmetricStructure cur = st;
    while (cur.dim() > 0 && !eval_poly(pm, cur.S).is_zero())
        cur = reduce_once(cur, pm);
    return cur;
}

PDecomposition p_decompose(const SymmetricStructure& st) {
    require_structure(st);
    PDecomposition out;
    out.s_primary = empty_structure();
    if (st.dim() == 0)
        return out;

    const Factorization fac = factor_rational(charpoly(st.S));
    int seen = 0;
    std::vector<MatQ> bases;
    for (const auto& [p, mult] : fac.factors) {
        const Subspace v = generalized_eigenspace(st.S, p);
        require(v.dim() == mult * p.degree(), "InvalidInput",
                "generalized eigenspace has the wrong dimension");
        SymmetricStructure piece;
        piece.B = restrict_form(st.B, v.basis());
        piece.S = restrict_operator(st.S, v.basis());
        require_structure(piece);
        bases.push_back(v.basis());
        seen += v.dim();
        if (p == RatPoly::x())
            out.s_primary = piece;
        else
            out.pieces.emplace_back(p, piece);
    }
    require(seen == st.dim(), "InvalidInput", "eigenspaces do not fill the space");
    // distinct pieces must be B-orthogonal, otherwise the split is useless
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j)
            require((bases[i].transposed() * st.B * bases[j]).is_zero(), "InvalidInput",
                    "primary pieces are not B-orthogonal");
    return out;
}

WittSummand trace_form_invariants(const SymmetricStructure& st, const RatPoly& p) {
    require_structure(st);
    require(p.degree() >= 1, "InvalidInput", "p must be non-constant");
    const RatPoly pm = p.monic();
    require(eval_poly(pm, st.S).is_zero(), "NotReduced", "p(S) != 0: reduce the exponent first");

    const int n = st.dim();
    const int d = pm.degree();
    require(n % d == 0, "InvalidInput", "dim V is not a multiple of deg p");
    const int r = n / d;

    WittSummand out;
    out.p = pm;
    out.rank_over_F = r;
    out.dim_ambient = n;
    if (n == 0) {
        out.discriminant_class = Rat(1);
        return out;
    }
    out.discriminant_class = Rat(squarefree_class(st.B.det()));

    // Greedy F-basis: every new vector spans a fresh d-dimensional Q-chunk.
    std::vector<VecQ> fbasis;
    Subspace span = Subspace::zero(n);
    for (int k = 0; k < n && static_cast<int>(fbasis.size()) < r; ++k) {
        VecQ e(n, Rat(0));
        e[k] = Rat(1);
        if (span.contains(e))
            continue;
        fbasis.push_back(e);
        VecQ v = e;
        for (int j = 0; j < d; ++j) {
            span = span.sum(Subspace::span(MatQ::from_columns({v}, n)));
            v = st.S.apply(v);
        }
    }
    require(static_cast<int>(fbasis.size()) == r && span.dim() == n, "InvalidInput",
            "S does not act freely: no F-basis");

    // F-valued form: [x,y] is pinned by tr(s^i [x,y]) = B(S^i x, y). The trace
    // Gram of 1, s, .., s^(d-1) is invertible because p is separable.
    const std::vector<Rat> tr = power_traces(pm);
    MatQ tgram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            tgram.at(i, j) = tr[i + j];
    auto f_pair = [&](const VecQ& x, const VecQ& y) {
        MatQ rhs(d, 1);
        VecQ sx = x;
        for (int i = 0; i < d; ++i) {
            VecQ bx = st.B.apply(sx);
            Rat acc(0);
            for (int k = 0; k < n; ++k)
                acc += bx[k] * y[k];
            rhs.at(i, 0) = acc;
            sx = st.S.apply(sx);
        }
        const MatQ sol = solve_columns(tgram, rhs);
        std::vector<Rat> coeffs(d);
        for (int i = 0; i < d; ++i)
            coeffs[i] = sol.at(i, 0);
        return RatPoly(coeffs);
    };

    std::vector<std::vector<RatPoly>> g(r, std::vector<RatPoly>(r));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
            g[i][j] = g[j][i] = f_pair(fbasis[i], fbasis[j]);

    // symmetric Gaussian diagonalization over F = Q[s]/(p)
    std::vector<RatPoly> diag;
    for (int k = 0; k < r; ++k) {
        if (g[k][k].is_zero()) {
            int swap_with = -1, mix_with = -1;
            for (int l = k + 1; l < r; ++l) {
                if (swap_with < 0 && !g[l][l].is_zero())
                    swap_with = l;
                if (mix_with < 0 && !g[k][l].is_zero())
                    mix_with = l;
            }
            if (swap_with >= 0) {
                std::swap(g[swap_with], g[k]);
                for (int i = 0; i < r; ++i)
                    std::swap(g[i][swap_with], g[i][k]);
            } else {
                require(mix_with >= 0, "InvalidInput", "trace form is degenerate over F");
                for (int i = 0; i < r; ++i)
                    g[k][i] = poly_mod(g[k][i] + g[mix_with][i], pm);
                for (int i = 0; i < r; ++i)
                    g[i][k] = poly_mod(g[i][k] + g[i][mix_with], pm);
            }
        }
        const RatPoly inv = poly_invmod(g[k][k], pm);
        for (int l = k + 1; l < r; ++l) {
            const RatPoly f = poly_mod(g[l][k] * inv, pm);
            if (f.is_zero())
                continue;
            for (int i = 0; i < r; ++i)
                g[l][i] = poly_mod(g[l][i] - f * g[k][i], pm);
            for (int i = 0; i < r; ++i)
                g[i][l] = poly_mod(g[i][l] - f * g[i][k], pm);
        }
        diag.push_back(g[k][k]);
    }

    // a diagonal entry has degree < d, so it cannot vanish at a root of p
    for (RealRoot& root : isolate_real_roots(pm)) {
        int sigma = 0;
        for (const RatPoly& entry : diag) {
            const int s = sign_at(entry, root);
            require(s != 0, "InvalidInput", "diagonal entry vanishes at a root of p");
            sigma += s;
        }
        out.signatures.emplace_back(root, sigma);
    }
    return out;
}

EquivariantWittClass equivariant_witt_class(const SeifertData& form) {
    const int n = form.size();
    require(form.P.rows() == n && form.P.cols() == n && form.A.is_square(),
            "ShapeMismatch", "A and P must be square of the same size");
    const Subspace eplus = kernel(form.P - MatQ::identity(n));
    const Subspace eminus = kernel(form.P + MatQ::identity(n));
    require(eplus.dim() + eminus.dim() == n, "InvalidInput",
            "P does not split the space into +1/-1 eigenspaces");
    const MatQ q = form.A + form.A.transposed();
    EquivariantWittClass out;
    out.q_plus = restrict_form(q, eplus.basis());
    out.q_minus = restrict_form(q, eminus.basis());
    return out;
}

int equivariant_signature(const SeifertData& form) {
    const EquivariantWittClass w = equivariant_witt_class(form);
    return signature_symmetric(w.q_minus).signature() -
           signature_symmetric(w.q_plus).signature();
}

} // namespace equiknot
