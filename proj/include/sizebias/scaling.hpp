#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sizebias/nullmodel.hpp"

// Scaling law h ~ N^beta, the null-model benchmark curve, and size-normalized
// scores built on it.

namespace sizebias {

/// One (size, h) observation.
struct SizePoint {
    double n = 0;
    double h = 0;
};

/// OLS fit of log10 h = log10_prefactor + beta * log10 N.
struct PowerLawFit {
    double beta = 0;
    double log10_prefactor = 0;
    double beta_stderr = 0;
    double p_value = 1;  // two-sided, H0: beta = 0, Student t with n-2 dof
    double r_squared = 0;
    std::size_t n_points = 0;

    /// 10^log10_prefactor * n^beta
    double predict(double n) const;
};

/// Throws FitError with fewer than 3 points, a single distinct N, or any
/// non-positive N or h.
PowerLawFit fit_power_law(std::span<const SizePoint> points);

struct FilteredFit {
    PowerLawFit fit;
    std::size_t excluded_zero_h = 0;
};

/// Drops h = 0 points (log undefined), counts them, fits the rest.
FilteredFit fit_power_law_positive(std::span<const SizePoint> points);

/// Every (N_i, h) replicate point of a null-model run, replicate-major.
std::vector<SizePoint> pooled_points(const ReshuffleResult& result);

/// (N_i, real h_i) for each unit.
std::vector<SizePoint> real_points(const ReshuffleResult& result);

/// Two-sided tail probability of |T| >= |t| for Student's t.
double student_t_two_sided_p(double t, double dof);

/// True iff fit.p_value < alpha. Throws DomainError unless 0 < alpha < 1.
bool slope_significance(const PowerLawFit& fit, double alpha = 0.01);

/// Size-dependent expectation of h under the null model.
struct Benchmark {
    std::vector<std::string> unit_ids;
    std::vector<std::uint64_t> productivities;
    std::vector<double> null_mean;  // per-unit sample mean of the null h
    std::vector<double> null_sd;    // per-unit sample sd (n-1)
    PowerLawFit curve;              // pooled fit over every replicate point
    std::size_t excluded_zero_h = 0;

    double expected_h(double n) const { return curve.predict(n); }
};

/// Requires at least 2 replicates.
Benchmark build_benchmark(const ReshuffleResult& result);

struct NormalizedScore {
    std::string unit_id;
    std::uint64_t n = 0;
    std::uint64_t real_h = 0;
    double null_mean = 0;
    double null_sd = 0;
    double h_hat = 0;                     // benchmark curve at n
    double ratio = 0;                     // real_h / h_hat
    std::optional<double> z;              // unset when null_sd == 0
    std::optional<double> log_residual;   // unset when real_h == 0
};

/// Scores arbitrary observed h values (one per benchmark unit).
std::vector<NormalizedScore> normalized_scores(const Benchmark& benchmark,
                                               std::span<const std::uint64_t> observed_h);

/// Scores the result's real h values.
std::vector<NormalizedScore> normalized_scores(const ReshuffleResult& result,
                                               const Benchmark& benchmark);

enum class RankKey { ratio, z, log_residual };

/// Throws UsageError for anything but "ratio", "z", "log_residual".
RankKey parse_rank_key(std::string_view key);
std::string_view to_string(RankKey key);

struct RankEntry {
    std::size_t index = 0;  // position in the input scores
    std::string unit_id;
    std::optional<double> value;
    std::size_t rank = 0;   // competition rank, ties share the smallest
};

/// Descending by key; equal values tie and are listed by unit id. Undefined
/// values come last and share one rank.
std::vector<RankEntry> normalized_ranking(std::span<const NormalizedScore> scores, RankKey key);

/// Competition ranks (1 = largest) of arbitrary values, ties share the smallest rank.
std::vector<std::size_t> descending_ranks(std::span<const double> values);

}  // namespace sizebias
