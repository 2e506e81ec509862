#pragma once

// Shared test plumbing: fixture loading, a generator of random valid
// equivariant Seifert forms, and exact profile evaluation at a given lambda.

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "equiknot/json_io.hpp"
#include "equiknot/seifert.hpp"
#include "equiknot/signature.hpp"

namespace testutil {

using namespace equiknot;

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline SeifertData load_fixture(const std::string& name) {
    return seifert_from_json(read_file(std::string(EQUIKNOT_DATA_DIR) + "/" + name));
}

inline std::mt19937& rng() {
    static std::mt19937 engine(0x5eed);
    return engine;
}

inline long ri(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline MatQ random_unimodular(int n) {
    MatQ u = MatQ::identity(n);
    for (int k = 0; k < 3 * n; ++k) {
        int i = static_cast<int>(ri(0, n - 1)), j = static_cast<int>(ri(0, n - 1));
        if (i == j) continue;
        Rat c(ri(-2, 2));
        for (int r = 0; r < n; ++r) u.at(r, j) += c * u.at(r, i);
    }
    return u;
}

// Random valid bare form of size 2n: start from A = 1/2 [[B, M], [-M, -M]]
// with B symmetric invertible and M symmetric unimodular (so A - A^t = M with
// det 1 and P = diag(I, -I) is compatible), then hide the block shape by a
// unimodular change of basis.
inline SeifertData random_valid_form(int n) {
    MatQ d(n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = Rat(ri(0, 1) ? 1 : -1);
    MatQ u = random_unimodular(n);
    MatQ m = u.transposed() * d * u;
    MatQ b(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) b.at(i, j) = b.at(j, i) = Rat(ri(-3, 3));
    } while (sign(b.det()) == 0);
    MatQ a(2 * n, 2 * n);
    const Rat half = rat_of(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a.at(i, j) = b.at(i, j) * half;
            a.at(i, n + j) = m.at(i, j) * half;
            a.at(n + i, j) = -m.at(i, j) * half;
            a.at(n + i, n + j) = -m.at(i, j) * half;
        }
    MatQ p = MatQ::block_diag(MatQ::identity(n), -MatQ::identity(n));
    MatQ v = random_unimodular(2 * n);
    SeifertData s;
    s.A = v.transposed() * a * v;
    s.P = v.inverse() * p * v;
    s.name = "random";
    return s;
}

// Exact value of the profile step function at a rational lambda. Irrational
// breakpoints are refined until the enclosure no longer straddles lambda.
inline int profile_value_at(SignatureProfile& pr, const Rat& lambda) {
    for (size_t i = 0; i < pr.breakpoints.size(); ++i) {
        RealRoot& bp = pr.breakpoints[i];
        if (bp.is_rational()) {
            if (lambda == bp.value()) return pr.values_at[i];
            if (lambda < bp.value()) return pr.interval_values[i];
        } else {
            while (bp.lo < lambda && lambda <= bp.hi) bp.refine();
            if (lambda <= bp.lo) return pr.interval_values[i];
        }
    }
    return pr.interval_values.back();
}

} // namespace testutil
