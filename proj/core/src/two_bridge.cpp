#include "equiknot/two_bridge.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "equiknot/error.hpp"
#include "equiknot/signature.hpp"

namespace equiknot {
namespace {

long checked_fraction(long p, long& q) {
    require(p >= 3 && p % 2 == 1, "InvalidInput", "p must be odd and >= 3");
    require(q != 0, "InvalidInput", "q must be nonzero");
    long qq = ((q % p) + p) % p;
    require(qq != 0 && std::gcd(p, qq) == 1, "InvalidInput", "q must be coprime to p");
    q = qq; // representative in (0, p)
    return p;
}

} // namespace

EvenCF even_cf(long p, long q) {
    checked_fraction(p, q);
    long qe = q % 2 == 0 ? q : q - p; // even representative, |qe| < p
    EvenCF cf;
    cf.p = p;
    cf.q_used = qe;
    // nearest-even quotients: r0/r1 = b + r2/r1 with b even and |r2| < |r1|.
    // The parities alternate (odd,even) -> (even,odd), so a tie (which would
    // need r1 = +-1 with an odd quotient) never happens and the loop ends on
    // an exact even division.
    long r0 = p, r1 = qe;
    while (r1 != 0) {
        const Rat half_quot = Rat(r0) / Rat(2 * r1);
        const long b = 2 * static_cast<long>(rat_floor(half_quot + rat_of(1, 2)).get_si());
        require(b != 0, "NoExpansion", "zero quotient in the even expansion");
        cf.entries.push_back(b / 2);
        const long r2 = r0 - b * r1;
        r0 = r1;
        r1 = r2;
    }
    require(cf.entries.size() % 2 == 0, "NoExpansion", "odd-length even expansion");
    // reconstruction: [2a_1, ..., 2a_m] evaluated back to front equals p/qe
    Rat value(0);
    for (size_t i = cf.entries.size(); i-- > 0;) {
        Rat term(2 * cf.entries[i]);
        value = sign(value) == 0 ? term : Rat(term + 1 / value);
    }
    require(value == Rat(p) / Rat(qe), "NoExpansion", "expansion does not reproduce p/q");
    return cf;
}

LaurentPoly alexander_from_matrix(const MatQ& v) {
    const RatPoly det = det_linear_pencil(v, -v.transposed()); // det(V - t V^t)
    return normalize_alexander(LaurentPoly::from_poly(det));
}

LaurentPoly alexander_oracle(long p, long q) {
    checked_fraction(p, q);
    if (q % 2 == 0)
        q = p - q; // odd representative: the even one is the mirror image
    // relator Omega x Omega^-1 y^-1 with Omega = x^e1 y^e2 ... y^e(p-1);
    // Fox derivative d/dx abelianized: D_Omega (1 - t) + t^e, where the walk
    // adds +t^k for x at prefix-exponent k and -t^(k-1) for x^-1.
    LaurentPoly d;
    long k = 0;
    for (long i = 1; i < p; ++i) {
        const long eps = ((i * q) / p) % 2 == 0 ? 1 : -1;
        if (i % 2 == 1) // letter x
            d = d + (eps > 0 ? LaurentPoly::monomial(Rat(1), static_cast<int>(k))
                             : LaurentPoly::monomial(Rat(-1), static_cast<int>(k - 1)));
        k += eps;
    }
    const LaurentPoly one_minus_t(0, {Rat(1), Rat(-1)});
    const LaurentPoly raw = d * one_minus_t + LaurentPoly::monomial(Rat(1), static_cast<int>(k));
    return normalize_alexander(raw);
}

MatQ two_bridge_seifert_matrix(const EvenCF& cf) {
    const int m = static_cast<int>(cf.entries.size());
    MatQ v(m, m);
    for (int i = 0; i < m; ++i) {
        v.at(i, i) = Rat(i % 2 == 0 ? cf.entries[i] : -cf.entries[i]);
        if (i + 1 < m)
            v.at(i, i + 1) = Rat(1);
    }
    // the convention is self-certifying: branched double cover order and an
    // independently computed Alexander polynomial
    const Rat dq = (v + v.transposed()).det();
    require(abs(dq) == Rat(cf.p), "OracleMismatch",
            "|det(V+V^t)| != p: Seifert matrix convention broken");
    require(alexander_from_matrix(v) == alexander_oracle(cf.p, cf.q_used), "OracleMismatch",
            "det(V - tV^t) disagrees with the Fox-calculus oracle");
    return v;
}

int two_bridge_max_jump(long p, long q) {
    const EvenCF cf = even_cf(p, q);
    const MatQ v = two_bridge_seifert_matrix(cf);
    const LaurentPoly delta = alexander_from_matrix(v);
    const RatPoly cleared = delta.cleared();

    // scope guard 1: all roots simple
    const SquarefreeDecomposition sq = squarefree_decompose(cleared);
    require(sq.parts.size() == 1 && sq.parts[0].second == 1, "HypothesisFailure",
            "Alexander polynomial has a multiple root");

    // scope guard 2: ordinary Levine-Tristram function identically zero.
    // Unit-circle roots of Delta sit at the negative real roots s of
    // delta(Delta); the corresponding signature parameter is lambda = 1/s, so
    // sampling 1/s* for s* between consecutive negative roots (plus the two
    // outer gaps) covers every constancy interval of sigma_omega.
    std::vector<RealRoot> sroots = isolate_real_roots(delta_transform(delta));
    std::vector<RealRoot> negatives;
    for (RealRoot& r : sroots) {
        while (!r.is_rational() && sign(r.lo) != sign(r.hi))
            r.refine();
        if (sign(r.is_rational() ? r.value() : r.hi) < 0)
            negatives.push_back(r);
    }
    for (size_t i = 0; i + 1 < negatives.size(); ++i)
        while (!(negatives[i].hi < negatives[i + 1].lo)) {
            negatives[i].refine();
            negatives[i + 1].refine();
        }
    std::vector<Rat> samples;
    if (negatives.empty()) {
        samples.push_back(Rat(-1));
    } else {
        samples.push_back(Rat(negatives.front().lo - 1));
        for (size_t i = 0; i + 1 < negatives.size(); ++i)
            samples.push_back(Rat((negatives[i].hi + negatives[i + 1].lo) / 2));
        samples.push_back(Rat(negatives.back().hi / 2));
    }
    for (const Rat& s : samples)
        require(levine_tristram(v, Rat(1 / s)) == 0, "HypothesisFailure",
                "Levine-Tristram signature function is not identically zero");

    return isolate_real_roots(cleared).empty() ? 0 : 1;
}

bool fox_milnor_square(long p, long q) {
    const EvenCF cf = even_cf(p, q);
    return is_square_laurent(alexander_from_matrix(two_bridge_seifert_matrix(cf)));
}

std::vector<TwoBridgeKnot> load_catalog_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto strip = [](std::string s) {
        const size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            return std::string();
        const size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    require(static_cast<bool>(std::getline(in, line)), "InvalidInput", "empty catalog");
    require(strip(line) == "name,p,q,order,J", "InvalidInput",
            "catalog header must be 'name,p,q,order,J'");
    std::vector<TwoBridgeKnot> rows;
    while (std::getline(in, line)) {
        if (strip(line).empty())
            continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> f;
        while (std::getline(ls, field, ','))
            f.push_back(strip(field));
        require(f.size() == 5, "InvalidInput", "catalog row needs 5 fields: " + line);
        TwoBridgeKnot k;
        k.name = f[0];
        k.p = std::strtol(f[1].c_str(), nullptr, 10);
        k.q = std::strtol(f[2].c_str(), nullptr, 10);
        k.catalog_order = f[3];
        require(f[4] == "0" || f[4] == "1", "InvalidInput", "J must be 0 or 1: " + line);
        k.catalog_J = f[4] == "1" ? 1 : 0;
        require(k.p >= 3 && k.p % 2 == 1 && k.q != 0 && std::labs(k.q) < k.p &&
                    std::gcd(k.p, std::labs(k.q)) == 1,
                "InvalidInput", "bad 2-bridge fraction in row: " + line);
        rows.push_back(std::move(k));
    }
    return rows;
}

std::vector<TwoBridgeKnot> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "InvalidInput", "cannot open catalog: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_catalog_csv(buffer.str());
}

TableReport table_run(const std::vector<TwoBridgeKnot>& catalog) {
    TableReport report;
    for (const TwoBridgeKnot& knot : catalog) {
        TableRow row;
        row.knot = knot;
        const EvenCF cf = even_cf(knot.p, knot.q);
        const MatQ v = two_bridge_seifert_matrix(cf);
        row.alexander = poly_text(alexander_from_matrix(v));
        row.determinant = std::labs(to_int((v + v.transposed()).det()).get_si());
        row.computed_J = two_bridge_max_jump(knot.p, knot.q);
        row.match = row.computed_J == knot.catalog_J;
        if (!row.match)
            ++report.mismatches;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace equiknot
