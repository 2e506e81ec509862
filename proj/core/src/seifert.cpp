#include "equiknot/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "equiknot/error.hpp"
#include "equiknot/signature.hpp"

namespace equiknot {

namespace {

VecQ row_times(const VecQ& row, const MatQ& m) {
    VecQ out(m.cols(), Rat(0));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            out[j] += row[i] * m.at(i, j);
    return out;
}

VecQ negated(const VecQ& v) {
    VecQ out = v;
    for (Rat& x : out)
        x = -x;
    return out;
}

Rat pair_value(const MatQ& a, const VecQ& x, const VecQ& y) {
    Rat acc(0);
    VecQ ay = a.apply(y);
    for (size_t i = 0; i < x.size(); ++i)
        acc += x[i] * ay[i];
    return acc;
}

Rat dot(const VecQ& a, const VecQ& b) {
    Rat acc(0);
    for (size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

} // namespace

std::vector<std::string> validate(const SeifertData& s) {
    require(s.A.is_square(), "ShapeMismatch", "A must be square");
    require(s.P.is_square() && s.P.rows() == s.A.rows(), "ShapeMismatch",
            "P must be square of the same size as A");
    int n = s.A.rows();
    require(s.h.empty() || static_cast<int>(s.h.size()) == n, "ShapeMismatch",
            "h has the wrong length");
    require(s.lk.empty() || static_cast<int>(s.lk.size()) == n, "ShapeMismatch",
            "lk has the wrong length");

    std::vector<std::string> bad;
    if (!(s.P * s.P == MatQ::identity(n)))
        bad.push_back("P^2 = I");
    if (!(s.P.transposed() * s.A * s.P == s.A.transposed()))
        bad.push_back("A(Px,Py) = A^t(x,y)");
    if ((s.A - s.A.transposed()).det() != 1)
        bad.push_back("A - A^t is unimodular");
    if (!s.h.empty() && row_times(s.h, s.P) != negated(s.h))
        bad.push_back("h o P = -h");
    if (!s.lk.empty() && row_times(s.lk, s.P) != s.lk)
        bad.push_back("lk o P = lk");
    return bad;
}

SeifertData orthogonal_sum(const SeifertData& a, const SeifertData& b) {
    require(a.A.is_square() && b.A.is_square() && a.P.rows() == a.A.rows() &&
                b.P.rows() == b.A.rows(),
            "InvalidInput", "orthogonal sum needs two well-shaped summands");
    SeifertData out;
    out.A = MatQ::block_diag(a.A, b.A);
    out.P = MatQ::block_diag(a.P, b.P);
    if (a.has_covectors() && b.has_covectors()) {
        out.h = a.h;
        out.h.insert(out.h.end(), b.h.begin(), b.h.end());
        out.lk = a.lk;
        out.lk.insert(out.lk.end(), b.lk.begin(), b.lk.end());
    }
    if (!a.name.empty() && !b.name.empty())
        out.name = a.name + " + " + b.name;
    return out;
}

SeifertData inverse(const SeifertData& s) {
    require(s.A.is_square() && s.P.rows() == s.A.rows(), "InvalidInput",
            "inverse needs a well-shaped input");
    SeifertData out = s;
    out.A = -s.A.transposed();
    out.lk = negated(s.lk);
    if (!s.name.empty())
        out.name = "-" + s.name;
    return out;
}

MatQ anti_diagonal_witness(const SeifertData& s) {
    int n = s.size();
    MatQ w(2 * n, n);
    for (int j = 0; j < n; ++j) {
        w.at(j, j) = 1;
        for (int i = 0; i < n; ++i)
            w.at(n + i, j) = s.P.at(i, j);
    }
    return w;
}

bool verify_metabolizer(const SeifertData& s, const MatQ& generators, bool full,
                        std::vector<std::string>* reasons) {
    require(generators.rows() == s.size(), "DimensionMismatch",
            "witness generators live in the wrong dimension");
    require(generators.cols() > 0 ? generators.rank() == generators.cols() : true, "InvalidInput",
            "witness generators must be linearly independent");

    std::vector<std::string> why;
    Subspace h = Subspace::span(generators);

    bool invariant = Subspace::span(s.P * generators) == h;
    if (!invariant)
        why.push_back("span is not P-invariant");

    if (!(generators.transposed() * s.A * generators).is_zero())
        why.push_back("A does not vanish on the span");

    if (s.has_covectors()) {
        MatQ hrow(1, s.size()), lkrow(1, s.size());
        for (int j = 0; j < s.size(); ++j) {
            hrow.at(0, j) = s.h[j];
            lkrow.at(0, j) = s.lk[j];
        }
        if (!(hrow * generators).is_zero())
            why.push_back("span is not inside ker(h)");
        if (!(lkrow * generators).is_zero())
            why.push_back("span is not inside ker(lk)");
    }

    if (full && h.dim() != s.half_rank())
        why.push_back("rank " + std::to_string(h.dim()) + " != half rank " +
                      std::to_string(s.half_rank()));

    if (reasons)
        *reasons = why;
    return why.empty();
}

long search_budget() {
    if (const char* env = std::getenv("EQUIKNOT_SEARCH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 10'000'000L;
}

namespace {

// Everything the enumeration needs about one candidate generator.
struct Candidate {
    VecQ v;
    int eigen; // +1 or -1
    bool isotropic;
};

// ker(h) /\ ker(lk) (the whole space for bare forms).
Subspace admissible_space(const SeifertData& s) {
    if (!s.has_covectors())
        return Subspace::full(s.size());
    MatQ rows(2, s.size());
    for (int j = 0; j < s.size(); ++j) {
        rows.at(0, j) = s.h[j];
        rows.at(1, j) = s.lk[j];
    }
    return kernel(rows);
}

Subspace eigen_slice(const SeifertData& s, const Subspace& n, int sign) {
    MatQ shifted = s.P - MatQ::identity(s.size()) * Rat(sign);
    return kernel(shifted).intersect(n);
}

// Exact rational-isotropy decision for the quadratic form x -> x^t A x on a
// piece of dimension <= 2; within one eigenspace the restricted form is
// symmetric, so this settles rank-1 existence there completely.
std::optional<VecQ> isotropic_line_exact(const MatQ& a, const MatQ& basis) {
    int d = basis.cols();
    if (d == 0)
        return std::nullopt;
    VecQ u0 = basis.column(0);
    Rat qa = pair_value(a, u0, u0);
    if (d == 1) {
        if (sgn(qa) == 0)
            return u0;
        return std::nullopt;
    }
    VecQ u1 = basis.column(1);
    if (sgn(qa) == 0)
        return u0;
    // q(x,y) = qa x^2 + qb xy + qc y^2 with qa != 0: rational zero iff the
    // discriminant is a rational square
    Rat qb = pair_value(a, u0, u1) + pair_value(a, u1, u0);
    Rat qc = pair_value(a, u1, u1);
    Rat disc = qb * qb - qa * qc * 4;
    if (!is_rational_square(disc))
        return std::nullopt;
    Rat root = sqrt_rational(disc);
    // x/y = (-qb + root) / (2 qa)
    VecQ out(u0.size(), Rat(0));
    Rat x = -qb + root, y = qa * 2;
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = x * u0[i] + y * u1[i];
    return out;
}

std::vector<Candidate> enumerate_candidates(const SeifertData& s, const Subspace& piece, int eigen,
                                            long coeff_bound, long& steps, long budget) {
    std::vector<Candidate> out;
    int d = piece.dim();
    if (d == 0)
        return out;
    std::vector<long> c(d, 0);
    c[d - 1] = 1; // first tuple with positive leading nonzero entry
    const MatQ& u = piece.basis();
    while (true) {
        if (++steps > budget)
            fail("BoundTooLargeForBudget",
                 "candidate enumeration exceeded " + std::to_string(budget) + " steps");
        // use tuples whose first nonzero coefficient is positive (v and -v
        // span the same line)
        int first = 0;
        while (first < d && c[first] == 0)
            ++first;
        if (first < d && c[first] > 0) {
            VecQ v(u.rows(), Rat(0));
            for (int k = 0; k < d; ++k)
                if (c[k] != 0)
                    for (int i = 0; i < u.rows(); ++i)
                        v[i] += u.at(i, k) * Rat(c[k]);
            Candidate cand;
            cand.isotropic = sgn(pair_value(s.A, v, v)) == 0;
            cand.v = std::move(v);
            cand.eigen = eigen;
            out.push_back(std::move(cand));
        }
        // odometer over [-b, b]^d in lexicographic order
        int pos = d - 1;
        while (pos >= 0 && c[pos] == coeff_bound) {
            c[pos] = -coeff_bound;
            --pos;
        }
        if (pos < 0)
            break;
        ++c[pos];
    }
    return out;
}

bool extends(const SeifertData& s, const std::vector<const Candidate*>& chosen, const Candidate& c,
             const MatQ& stacked) {
    for (const Candidate* w : chosen) {
        if (sgn(pair_value(s.A, c.v, w->v)) != 0 || sgn(pair_value(s.A, w->v, c.v)) != 0)
            return false;
    }
    // linear independence from the span so far
    MatQ trial = stacked.hstack(MatQ::from_columns({c.v}, s.size()));
    return trial.rank() == trial.cols();
}

// DFS over increasing candidate indices; the first hit is the
// lexicographically smallest witness in candidate order.
std::optional<MatQ> dfs_search(const SeifertData& s, const std::vector<Candidate>& cands,
                               int target, long& steps, long budget) {
    std::vector<const Candidate*> chosen;

    std::function<std::optional<MatQ>(size_t, const MatQ&)> grow =
        [&](size_t from, const MatQ& stacked) -> std::optional<MatQ> {
        if (static_cast<int>(chosen.size()) == target)
            return stacked;
        for (size_t i = from; i < cands.size(); ++i) {
            if (!cands[i].isotropic)
                continue;
            if (++steps > budget)
                fail("BoundTooLargeForBudget",
                     "metabolizer search exceeded " + std::to_string(budget) + " steps");
            if (!extends(s, chosen, cands[i], stacked))
                continue;
            chosen.push_back(&cands[i]);
            auto got = grow(i + 1, stacked.hstack(MatQ::from_columns({cands[i].v}, s.size())));
            chosen.pop_back();
            if (got)
                return got;
        }
        return std::nullopt;
    };
    return grow(0, MatQ(s.size(), 0));
}

} // namespace

SearchOutcome search_partial_metabolizer(const SeifertData& s, int target_rank, long coeff_bound) {
    require(target_rank >= 0 && target_rank <= s.half_rank(), "InvalidInput",
            "target rank must lie in [0, m]");
    SearchOutcome out;
    long budget = search_budget();

    if (target_rank == 0) {
        out.witness = MatQ(s.size(), 0);
        out.exhaustive = true;
        return out;
    }

    Subspace n = admissible_space(s);
    Subspace np = eigen_slice(s, n, 1);
    Subspace nm = eigen_slice(s, n, -1);
    MatQ bp = primitive_integer_columns(np.basis());
    MatQ bm = primitive_integer_columns(nm.basis());

    if (np.dim() + nm.dim() < target_rank) {
        out.exhaustive = true; // every candidate lives in the eigen split of N
        return out;
    }

    // a rank-1 witness lies in a single eigenpiece; pieces of dimension <= 2
    // are decided exactly by the discriminant test
    if (target_rank == 1) {
        bool undecided_piece = false;
        for (const MatQ& basis : {bp, bm}) {
            if (basis.cols() <= 2) {
                if (auto v = isotropic_line_exact(s.A, basis)) {
                    out.witness = primitive_integer_columns(MatQ::from_columns({*v}, s.size()));
                    out.exhaustive = true;
                    return out;
                }
            } else {
                undecided_piece = true;
            }
        }
        if (!undecided_piece) {
            out.exhaustive = true; // both pieces proved anisotropic
            return out;
        }
    }

    std::vector<Candidate> cands =
        enumerate_candidates(s, np, 1, coeff_bound, out.steps, budget);
    std::vector<Candidate> minus =
        enumerate_candidates(s, nm, -1, coeff_bound, out.steps, budget);
    cands.insert(cands.end(), minus.begin(), minus.end());

    if (auto w = dfs_search(s, cands, target_rank, out.steps, budget))
        out.witness = primitive_integer_columns(*w);
    return out;
}

ComplexityReport complexity_report(const SeifertData& s, long coeff_bound) {
    require(validate(s).empty(), "InvalidInput", "complexity report needs a valid input");
    ComplexityReport rep;
    rep.m = s.half_rank();

    Subspace n = admissible_space(s);
    int upper = std::min(rep.m, n.dim());
    std::string upper_method = "min(m, dim ker)";

    // if the form is not identically zero on N = ker(h) /\ ker(lk), the whole
    // of N is never a witness
    if (n.dim() > 0 && !(n.basis().transposed() * s.A * n.basis()).is_zero() &&
        n.dim() - 1 < upper) {
        upper = n.dim() - 1;
        upper_method = "form nonvanishing on ker";
    }

    // signature certificates: every partial metabolizer is isotropic for the
    // whole pencil, so rank <= m - |sigma_lambda|/2 at nondegenerate lambda
    try {
        SignatureProfile prof = profile(s);
        int best = 0;
        Rat best_at(0);
        for (int v : prof.interval_values)
            best = std::max(best, std::abs(v));
        for (int j : prof.jumps)
            best = std::max(best, std::abs(j)); // |jump| <= sup |sigma| nearby
        int sig_upper = rep.m - (best + 1) / 2;
        if (sig_upper < upper) {
            upper = sig_upper;
            upper_method = "pencil signature";
        }
    } catch (const Error&) {
        // degenerate symmetrization: no signature certificate available
    }

    // exact rank-1 decision can push the upper bound to zero
    bool rank1_exhaustive_none = false;
    if (upper >= 1) {
        SearchOutcome r1 = search_partial_metabolizer(s, 1, coeff_bound);
        if (r1.exhaustive && !r1.witness) {
            upper = 0;
            upper_method = "no isotropic invariant line (exact)";
            rank1_exhaustive_none = true;
        }
    }

    int lower = 0;
    std::string lower_method = "zero subspace";
    if (!rank1_exhaustive_none) {
        for (int k = upper; k >= 1; --k) {
            try {
                SearchOutcome got = search_partial_metabolizer(s, k, coeff_bound);
                if (got.witness) {
                    lower = k;
                    lower_method = "search witness (coeff bound " + std::to_string(coeff_bound) +
                                   ", rank " + std::to_string(k) + ")";
                    break;
                }
            } catch (const Error& e) {
                if (std::string(e.name()) != "BoundTooLargeForBudget")
                    throw;
                lower_method = "zero subspace (budget exhausted above)";
            }
        }
    }

    rep.partial_rank_lower = lower;
    rep.partial_rank_upper = std::max(upper, lower);
    rep.ac_lower = rep.m - rep.partial_rank_upper;
    rep.ac_upper = rep.m - rep.partial_rank_lower;
    rep.method = "upper rank: " + upper_method + "; lower rank: " + lower_method;
    return rep;
}

SeifertData fixture_k13n1496() {
    SeifertData s;
    s.A = MatQ{{1, 1, 0, 0}, {0, -1, -1, 0}, {0, -1, -1, -1}, {0, 0, 0, -1}};
    s.P = MatQ{{1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 1, 1}};
    s.h = {Rat(0), Rat(-1), Rat(1), Rat(0)};
    s.lk = {Rat(-2), Rat(-1), Rat(1), Rat(2)};
    s.name = "K13n1496";
    return s;
}

SeifertData fixture_unknot_g() {
    SeifertData s;
    s.A = MatQ{{0, 1}, {0, 0}};
    s.P = MatQ{{0, 1}, {1, 0}};
    s.h = {Rat(0), Rat(0)};
    s.lk = {Rat(0), Rat(0)};
    s.name = "unknot-G";
    return s;
}

SeifertData fixture_fig8() {
    SeifertData s;
    s.A = MatQ{{1, 1}, {0, -1}};
    s.P = MatQ{{1, 0}, {1, -1}};
    s.h = {Rat(1), Rat(-2)};
    s.lk = {Rat(0), Rat(0)};
    s.name = "4_1-equivariant";
    return s;
}

SeifertData metabolic_double(const MatQ& theta) {
    require(theta.is_square(), "InvalidInput", "theta must be square");
    int n = theta.rows();
    SeifertData s;
    s.A = MatQ::block_diag(theta, theta.transposed());
    s.P = MatQ(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        s.P.at(i, n + i) = 1;
        s.P.at(n + i, i) = 1;
    }
    s.h = VecQ(2 * n, Rat(0));
    s.lk = VecQ(2 * n, Rat(0));
    s.name = "double";
    return s;
}

} // namespace equiknot
