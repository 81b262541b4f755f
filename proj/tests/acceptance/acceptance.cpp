#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sizebias/cli.hpp"
#include "sizebias/combinatorics.hpp"
#include "sizebias/csv.hpp"
#include "sizebias/ingest.hpp"
#include "sizebias/model.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/report.hpp"
#include "sizebias/scaling.hpp"
#include "sizebias/synth.hpp"

using namespace sizebias;

namespace {

// Tolerances and limits.
constexpr double kPmfAbsTol = 1e-12;
constexpr double kPmfSumTol = 1e-12;
constexpr double kBetaExactTol = 1e-6;
constexpr double kOlsOracleTol = 1e-10;
constexpr double kTableBetaTol = 0.05;
constexpr double kTable2Beta = 0.338;
constexpr double kTable3Beta = 0.46;
constexpr double kSignificance = 0.01;
constexpr double kAlphaBetaTol = 0.05;
constexpr double kMinMeanSpearman = 0.6;
constexpr double kMeanZTol = 0.1;
constexpr double kMeanLogResidualTol = 0.05;
constexpr double kTrendMinP = 0.01;
constexpr double kCurveSumTol = 1e-9;
constexpr std::size_t kReplicates = 200;
constexpr std::uint64_t kSeed = 20190601;

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_s;
    std::function<Outcome()> body;
};

std::string fmt(double v) { return report::format_double(v); }

std::vector<std::uint64_t> table2_sizes() {
    std::vector<std::uint64_t> out;
    for (const auto& r : load_summary("bundled:ukraine_2019").rows) out.push_back(r.n_publications);
    return out;
}

Dataset table2_synthetic(std::uint64_t seed) {
    auto rng = make_stream(seed, StreamDomain::citations, 0);
    return synth::build_synthetic_dataset(table2_sizes(), synth::CitationModel{1.5, 1.0}, rng);
}

Outcome ac1() {
    double worst = 0;
    for (unsigned total = 1; total <= 12; ++total) {
        for (unsigned black = 0; black <= total; ++black) {
            const combinatorics::PoolSpec pool(black, total - black);
            for (unsigned k = 0; k <= total; ++k) {
                const auto expected = oracle::enumerate_baskets(black, total - black, k);
                for (unsigned k1 = 0; k1 <= k; ++k1) {
                    worst = std::max(worst, std::fabs(combinatorics::hypergeom_pmf(pool, {k}, k1) - expected[k1]));
                }
            }
        }
    }
    const auto d = combinatorics::count_distribution(combinatorics::PoolSpec(2120, 1880), 100);
    double sum = 0;
    for (const auto& p : d) sum += p.probability;
    const auto mode = combinatorics::distribution_mode(d);
    const bool ok = worst <= kPmfAbsTol && mode == 53 && std::fabs(sum - 1.0) <= kPmfSumTol;
    return {ok, "max |pmf - enum| = " + fmt(worst) + ", mode = " + std::to_string(mode) +
                    ", |sum - 1| = " + fmt(std::fabs(sum - 1.0))};
}

Outcome ac2() {
    std::mt19937_64 gen(kSeed);
    HIndexWorkspace ws;
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<Citations> c(std::uniform_int_distribution<std::size_t>(0, 500)(gen));
        const auto cap = std::uniform_int_distribution<Citations>(0, 10000)(gen);
        for (auto& x : c) x = std::uniform_int_distribution<Citations>(0, cap)(gen);
        const auto expected = oracle::h_index(c);
        if (h_index(c) != expected || ws(c) != expected) ++mismatches;
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches in 1000 multisets"};
}

Outcome ac3() {
    std::vector<SizePoint> exact;
    for (double n : {10.0, 100.0, 1000.0, 10000.0}) exact.push_back({n, 2.0 * std::pow(n, 0.4)});
    const double d_beta = std::fabs(fit_power_law(exact).beta - 0.4);

    std::mt19937_64 gen(kSeed);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 80)(gen);
        std::vector<SizePoint> pts;
        std::vector<double> lx, ly;
        std::normal_distribution<double> noise(0.0, 0.2);
        for (std::size_t i = 0; i < n; ++i) {
            const double N = std::pow(10.0, std::uniform_real_distribution<double>(1.0, 4.5)(gen));
            const double h = std::pow(10.0, 0.3 + 0.4 * std::log10(N) + noise(gen));
            pts.push_back({N, h});
            lx.push_back(std::log10(N));
            ly.push_back(std::log10(h));
        }
        const auto line = oracle::ols(lx, ly);
        const auto fit = fit_power_law(pts);
        worst = std::max({worst, std::fabs(fit.beta - line.slope), std::fabs(fit.log10_prefactor - line.intercept)});
    }
    return {d_beta <= kBetaExactTol && worst <= kOlsOracleTol,
            "|d beta| exact = " + fmt(d_beta) + ", max oracle gap = " + fmt(worst)};
}

Outcome ac4() {
    const auto ua = fit_power_law(size_points(load_summary("bundled:ukraine_2019")));
    const auto uk = fit_power_law(size_points(load_summary("bundled:uk_rae2008_physics")));
    const bool ok = std::fabs(ua.beta - kTable2Beta) <= kTableBetaTol && std::fabs(uk.beta - kTable3Beta) <= kTableBetaTol &&
                    slope_significance(ua, kSignificance) && slope_significance(uk, kSignificance);
    return {ok, "ukraine beta = " + fmt(ua.beta) + " (p = " + fmt(ua.p_value) + "), uk beta = " + fmt(uk.beta) +
                    " (p = " + fmt(uk.p_value) + ")"};
}

Outcome ac5() {
    const auto check =
        synth::verify_beta_relation(1.5, synth::SizeModel::powerlaw(1.0, 100, 10000), {kReplicates, kSeed, 0}, 40);
    return {std::fabs(check.fitted - 0.4) <= kAlphaBetaTol,
            "fitted beta = " + fmt(check.fitted) + ", 1/(1+alpha) = " + fmt(check.predicted)};
}

Outcome ac6() {
    const auto d = table2_synthetic(kSeed);
    const auto expected = checksum(pool(d));
    std::string first_samples, first_summary;
    bool conserved = true, identical = true;
    for (int threads : {1, 2, 8}) {
        for (int repeat = 0; repeat < 2; ++repeat) {
            const auto r = run_null_model(d, {kReplicates, kSeed, threads});
            for (const auto& c : r.replicate_checksums) conserved = conserved && c == expected;
            const auto samples = report::samples_csv(r);
            const auto summary = report::null_summary_json(r, d.name(), kSeed);
            if (first_samples.empty()) {
                first_samples = samples;
                first_summary = summary;
            }
            identical = identical && samples == first_samples && summary == first_summary;
        }
    }
    return {conserved && identical, std::string("pool conserved: ") + (conserved ? "yes" : "no") +
                                        ", reports identical across 1/2/8 workers: " + (identical ? "yes" : "no")};
}

Outcome ac7() {
    const auto d = table2_synthetic(kSeed);
    const auto r = run_null_model(d, {kReplicates, kSeed, 0});
    const double rho = mean_spearman_vs_real(r);
    return {rho > kMinMeanSpearman, "mean Spearman(real, reshuffled) = " + fmt(rho)};
}

// The benchmark comes from one null-model run; the "data" are further,
// independent draws from the same null, scored against it.
Outcome ac8() {
    const auto d = table2_synthetic(kSeed);
    const auto r = run_null_model(d, {kReplicates, kSeed, 0});
    const auto bench = build_benchmark(r);
    const auto p = pool(d);
    const auto sizes = d.productivities();

    std::vector<double> abs_z_sum(d.size(), 0.0), abs_z_n(d.size(), 0.0);
    double z_sum = 0, lr_sum = 0;
    std::size_t z_n = 0, lr_n = 0;
    for (std::uint64_t i = 0; i < kReplicates; ++i) {
        auto rng = make_stream(kSeed, StreamDomain::fresh_null, i);
        const auto h = reshuffle_once(p, sizes, rng);
        const auto scores = normalized_scores(bench, h);
        for (std::size_t u = 0; u < scores.size(); ++u) {
            if (scores[u].z) {
                z_sum += *scores[u].z;
                ++z_n;
                abs_z_sum[u] += std::fabs(*scores[u].z);
                abs_z_n[u] += 1;
            }
            if (scores[u].log_residual) {
                lr_sum += *scores[u].log_residual;
                ++lr_n;
            }
        }
    }
    const double mean_z = z_sum / static_cast<double>(z_n);
    const double mean_lr = lr_sum / static_cast<double>(lr_n);

    std::vector<double> n_vals, abs_z;
    for (std::size_t u = 0; u < d.size(); ++u) {
        if (abs_z_n[u] == 0) continue;
        n_vals.push_back(static_cast<double>(sizes[u]));
        abs_z.push_back(abs_z_sum[u] / abs_z_n[u]);
    }
    const double rho = spearman(n_vals, abs_z);
    const double dof = static_cast<double>(n_vals.size()) - 2;
    const double t = rho * std::sqrt(dof / std::max(1e-300, 1 - rho * rho));
    const double trend_p = student_t_two_sided_p(t, dof);

    const bool ok = std::fabs(mean_z) <= kMeanZTol && std::fabs(mean_lr) <= kMeanLogResidualTol && trend_p > kTrendMinP;
    return {ok, "mean z = " + fmt(mean_z) + ", mean log-residual = " + fmt(mean_lr) +
                    ", Spearman(N, |z|) = " + fmt(rho) + " (p = " + fmt(trend_p) + ")"};
}

Outcome ac9() {
    std::ostringstream out, err;
    const int code = cli::run({"sizebias", "toy-balls"}, out, err);
    if (code != 0) return {false, "toy-balls exited with " + std::to_string(code)};
    const auto rows = csv::parse(out.str(), "toy-balls");
    std::map<std::string, double> count_sums, share_sums;
    bool shares_ok = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& f = rows[i].fields;
        const double k = std::stod(f[0]);
        const double k1 = std::stod(f[1]);
        const double share = std::stod(f[2]);
        const double prob = std::stod(f[3]);
        shares_ok = shares_ok && std::fabs(share - k1 / k) <= 1e-15;
        count_sums[f[0]] += prob;
        share_sums[f[0]] += prob;
    }
    double worst = 0;
    for (const auto& [k, s] : count_sums) worst = std::max(worst, std::fabs(s - 1.0));
    for (const auto& [k, s] : share_sums) worst = std::max(worst, std::fabs(s - 1.0));
    const bool ok = count_sums.size() == 10 && share_sums.size() == 10 && shares_ok && worst <= kCurveSumTol;
    return {ok, std::to_string(share_sums.size()) + " share curves, " + std::to_string(count_sums.size()) +
                    " count curves, max |sum - 1| = " + fmt(worst)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "hypergeometric exactness", 1.0, ac1},
        {"AC2", "h-index oracle equivalence", 5.0, ac2},
        {"AC3", "power-law fit recovery", 1.0, ac3},
        {"AC4", "reference table fits", 1.0, ac4},
        {"AC5", "tail exponent vs pooled slope", 120.0, ac5},
        {"AC6", "null-model conservation and determinism", 60.0, ac6},
        {"AC7", "rankings survive reshuffling", 120.0, ac7},
        {"AC8", "normalization self-consistency", 120.0, ac8},
        {"AC9", "toy-balls table emission", 1.0, ac9},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s %s: %s | %s | %.3f s (limit %.0f s)%s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                    o.detail.c_str(), secs, c.limit_s, in_time ? "" : " TIMEOUT");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
