// Microbenchmarks for the hot paths: exact symmetric signature, the full
// profile pipeline, one catalog row end to end, and the delta transform pair.
// All inputs are deterministic (fixed seed / fixtures) so runs are comparable.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "equiknot/polynomial.hpp"
#include "equiknot/seifert.hpp"
#include "equiknot/signature.hpp"
#include "equiknot/two_bridge.hpp"

using namespace equiknot;

namespace {

std::mt19937 rng(0xbe7c);

long ri(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

MatQ random_unimodular(int n) {
    MatQ u = MatQ::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = static_cast<int>(ri(0, n - 1)), j = static_cast<int>(ri(0, n - 1));
        if (i == j) continue;
        Rat c(ri(-2, 2));
        for (int r = 0; r < n; ++r) u.at(r, j) = u.at(r, j) + c * u.at(r, i);
    }
    return u;
}

SeifertData random_form(int n) {
    for (;;) {
        MatQ d = MatQ::identity(n);
        for (int i = 0; i < n; ++i) d.at(i, i) = Rat(ri(0, 1) ? 1 : -1);
        MatQ u = random_unimodular(n);
        MatQ m = u.transposed() * d * u;
        MatQ b(n, n);
        for (int i = 0; i < n; ++i) {
            b.at(i, i) = Rat(ri(-3, 3));
            for (int j = i + 1; j < n; ++j) b.at(i, j) = b.at(j, i) = Rat(ri(-3, 3));
        }
        if (sign(b.det()) == 0) continue;
        MatQ a(2 * n, 2 * n);
        const Rat half = rat_of(1, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = half * b.at(i, j);
                a.at(i, n + j) = half * m.at(i, j);
                a.at(n + i, j) = -half * m.at(i, j);
                a.at(n + i, n + j) = -half * m.at(i, j);
            }
        MatQ p(2 * n, 2 * n);
        for (int i = 0; i < n; ++i) {
            p.at(i, i) = Rat(1);
            p.at(n + i, n + i) = Rat(-1);
        }
        SeifertData s;
        s.A = a;
        s.P = p;
        s.h.assign(2 * n, Rat(0));
        s.lk.assign(2 * n, Rat(0));
        if (!validate(s).empty()) continue;
        MatQ v = random_unimodular(2 * n);
        s.A = v.transposed() * s.A * v;
        s.P = v.inverse() * s.P * v;
        return s;
    }
}

void BM_signature_symmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MatQ b(n, n);
    for (int i = 0; i < n; ++i) {
        b.at(i, i) = Rat(ri(-4, 4));
        for (int j = i + 1; j < n; ++j) b.at(i, j) = b.at(j, i) = Rat(ri(-4, 4));
    }
    for (auto _ : state) benchmark::DoNotOptimize(signature_symmetric(b));
}
BENCHMARK(BM_signature_symmetric)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_profile(benchmark::State& state) {
    SeifertData s = random_form(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(profile(s));
}
BENCHMARK(BM_profile)->Arg(2)->Arg(4)->Arg(6);

void BM_profile_fixture_k13n1496(benchmark::State& state) {
    SeifertData s = fixture_k13n1496();
    for (auto _ : state) benchmark::DoNotOptimize(profile(s));
}
BENCHMARK(BM_profile_fixture_k13n1496);

void BM_catalog_row(benchmark::State& state) {
    // 61/17 is one of the larger determinants in the shipped table
    TwoBridgeKnot k;
    k.p = 61;
    k.q = 17;
    k.name = "bench";
    k.catalog_order = "?";
    k.catalog_J = 0;
    std::vector<TwoBridgeKnot> one{k};
    for (auto _ : state) benchmark::DoNotOptimize(table_run(one));
}
BENCHMARK(BM_catalog_row);

void BM_table_full(benchmark::State& state) {
    std::vector<TwoBridgeKnot> rows =
        load_catalog_file(std::string(EQUIKNOT_DATA_DIR) + "/table1.csv");
    for (auto _ : state) benchmark::DoNotOptimize(table_run(rows));
}
BENCHMARK(BM_table_full);

void BM_delta_round_trip(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    LaurentPoly f = LaurentPoly::constant(Rat(2));
    for (int k = 1; k <= d; ++k) {
        Rat c(ri(-5, 5));
        if (sign(c) == 0) c = Rat(1);
        f = f + LaurentPoly::monomial(c, k) + LaurentPoly::monomial(c, -k);
    }
    if (f.eval(Rat(-1)) == 0) f = f + LaurentPoly::constant(Rat(1));
    for (auto _ : state) benchmark::DoNotOptimize(delta_inverse(delta_transform(f)));
}
BENCHMARK(BM_delta_round_trip)->Arg(4)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
