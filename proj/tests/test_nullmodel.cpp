#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "sizebias/error.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/synth.hpp"

using namespace sizebias;
using Catch::Matchers::WithinAbs;

namespace {

Dataset pareto_dataset(std::vector<std::uint64_t> sizes, std::uint64_t seed) {
    Rng rng(seed);
    return synth::build_synthetic_dataset(sizes, synth::CitationModel{1.5, 1.0}, rng);
}

std::vector<double> as_double(std::span<const std::uint64_t> v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("pooling concatenates every unit", "[nullmodel]") {
    Dataset d("d", {Unit("a", "A", {1, 2}), Unit("b", "B", {3})});
    auto p = pool(d);
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<Citations>{1, 2, 3});
    CHECK(checksum(p) == PoolChecksum{3, 6});
}

TEST_CASE("degenerate reshuffles", "[nullmodel]") {
    Rng rng(1);
    const std::vector<Citations> c{9, 4, 4, 1, 0, 12};
    const std::vector<std::uint64_t> one{6};
    for (int i = 0; i < 20; ++i) CHECK(reshuffle_once(c, one, rng) == std::vector<std::uint64_t>{oracle::h_index(c)});

    const std::vector<Citations> flat(30, 7);
    const std::vector<std::uint64_t> sizes{3, 12, 15};
    for (int i = 0; i < 20; ++i) CHECK(reshuffle_once(flat, sizes, rng) == std::vector<std::uint64_t>{3, 7, 7});

    const std::vector<std::uint64_t> wrong{3, 12};
    CHECK_THROWS_AS(reshuffle_once(flat, wrong, rng), ConfigError);
}

TEST_CASE("every replicate conserves the pool", "[nullmodel][property]") {
    const auto d = pareto_dataset({50, 120, 7, 300, 1, 64}, 3);
    const auto p = pool(d);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        auto shuffled = p;
        reshuffle_in_place(shuffled, d.productivities(), rng);
        std::sort(shuffled.begin(), shuffled.end());
        REQUIRE(shuffled == sorted);
    }

    const auto r = run_null_model(d, {100, 5, 0});
    CHECK(r.pool_checksum == checksum(p));
    REQUIRE(r.replicate_checksums.size() == 100);
    for (const auto& c : r.replicate_checksums) REQUIRE(c == r.pool_checksum);
}

TEST_CASE("replicates are deterministic across thread counts", "[nullmodel]") {
    const auto d = pareto_dataset({50, 120, 7, 300, 1, 64, 900, 33}, 4);
    const auto serial = reference::run_null_model(d, {64, 77, 1});
    for (int threads : {1, 2, 8}) {
        const auto r = run_null_model(d, {64, 77, threads});
        CHECK(r.h_samples == serial.h_samples);
        CHECK(r.real_h == serial.real_h);
    }
    const auto other = run_null_model(d, {64, 78, 2});
    CHECK(other.h_samples != serial.h_samples);

    CHECK(resolve_threads({1, 0, 3}) == 3);
}

TEST_CASE("replicate means approach the exhaustive expectation", "[nullmodel][property]") {
    Dataset d("tiny", {Unit("a", "A", {5}), Unit("b", "B", {0, 8}), Unit("c", "C", {1, 2, 3})});
    const auto expected = oracle::exhaustive_null_mean(pool(d), {1, 2, 3});
    const std::size_t reps = 5000;
    const auto r = run_null_model(d, {reps, 2024, 0});
    for (std::size_t u = 0; u < 3; ++u) {
        const auto col = as_double(r.column(u));
        const double mean = std::accumulate(col.begin(), col.end(), 0.0) / reps;
        double ss = 0;
        for (double v : col) ss += (v - mean) * (v - mean);
        const double se = std::sqrt(ss / (reps - 1) / reps);
        CHECK(std::fabs(mean - expected[u]) <= std::max(2.5 * se, 1e-12));
    }
}

TEST_CASE("equal-size units are exchangeable", "[nullmodel][property]") {
    const auto d = pareto_dataset({40, 40, 15}, 12);
    const std::size_t reps = 2000;
    const auto r = run_null_model(d, {reps, 99, 0});
    auto a = as_double(r.column(0));
    auto b = as_double(r.column(1));

    double mean = 0;
    for (std::size_t i = 0; i < reps; ++i) mean += a[i] - b[i];
    mean /= reps;
    double ss = 0;
    for (std::size_t i = 0; i < reps; ++i) ss += (a[i] - b[i] - mean) * (a[i] - b[i] - mean);
    const double sd = std::sqrt(ss / (reps - 1));
    if (sd > 0) CHECK(std::fabs(mean / (sd / std::sqrt(reps))) < 3.3);

    // Two-sample Kolmogorov-Smirnov at the 1% level.
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ks = 0;
    for (double v : a) {
        const double fa = static_cast<double>(std::upper_bound(a.begin(), a.end(), v) - a.begin()) / reps;
        const double fb = static_cast<double>(std::upper_bound(b.begin(), b.end(), v) - b.begin()) / reps;
        ks = std::max(ks, std::fabs(fa - fb));
    }
    CHECK(ks < 1.63 * std::sqrt(2.0 / reps));
}

TEST_CASE("spearman correlation", "[nullmodel]") {
    const std::vector<double> x{1, 2, 2, 4};
    const std::vector<double> y{1, 3, 2, 4};
    CHECK_THAT(spearman(x, y), WithinAbs(0.9486832980505138, 1e-14));
    CHECK_THAT(spearman(x, y), WithinAbs(oracle::spearman(x, y), 1e-14));
    CHECK_THAT(spearman(x, x), WithinAbs(1.0, 1e-15));
    const std::vector<double> rev{4, 3, 2, 1};
    const std::vector<double> inc{1, 2, 3, 4};
    CHECK_THAT(spearman(inc, rev), WithinAbs(-1.0, 1e-15));

    CHECK(average_ranks(x) == std::vector<double>{1, 2.5, 2.5, 4});

    CHECK_THROWS_AS(spearman(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), DomainError);
    CHECK_THROWS_AS(spearman(std::vector<double>{1}, std::vector<double>{1}), DomainError);
    CHECK_THROWS_AS(spearman(std::vector<double>{3, 3, 3}, std::vector<double>{1, 2, 3}), DomainError);
}

TEST_CASE("spearman agrees with rank-then-pearson and ignores monotone maps", "[nullmodel][property]") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 60)(gen);
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::uniform_int_distribution<int>(0, 15)(gen);
            y[i] = x[i] + std::uniform_int_distribution<int>(-8, 8)(gen);
        }
        if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end()) continue;
        if (std::adjacent_find(y.begin(), y.end(), std::not_equal_to<>()) == y.end()) continue;
        const double rho = spearman(x, y);
        REQUIRE_THAT(rho, WithinAbs(oracle::spearman(x, y), 1e-12));

        std::vector<double> fx(n), gy(n);
        for (std::size_t i = 0; i < n; ++i) {
            fx[i] = std::exp(x[i] / 3.0);
            gy[i] = 5.0 * y[i] * y[i] * y[i] - 2.0;
        }
        REQUIRE_THAT(spearman(fx, gy), WithinAbs(rho, 1e-12));
    }
}

TEST_CASE("null-model rank diagnostics", "[nullmodel]") {
    // Constant citations make every replicate reproduce the real h exactly.
    Dataset fixed("fixed", {Unit("a", "A", std::vector<Citations>(3, 50)),
                            Unit("b", "B", std::vector<Citations>(10, 50)),
                            Unit("c", "C", std::vector<Citations>(6, 50))});
    const auto r = run_null_model(fixed, {20, 1, 0});
    CHECK_THAT(mean_spearman_vs_real(r), WithinAbs(1.0, 1e-15));

    // With two units every defined per-replicate correlation is +1 or -1.
    const auto two = pareto_dataset({30, 200}, 8);
    const auto rr = run_null_model(two, {200, 4, 0});
    const auto real = as_double(rr.real_h);
    for (std::size_t i = 0; i < rr.replicates; ++i) {
        const auto row = as_double(rr.row(i));
        if (row[0] == row[1] || real[0] == real[1]) continue;
        const double rho = spearman(real, row);
        REQUIRE(std::fabs(std::fabs(rho) - 1.0) < 1e-15);
    }
}
