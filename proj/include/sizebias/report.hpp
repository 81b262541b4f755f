#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sizebias/combinatorics.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/scaling.hpp"

// Report serialization. Everything here is a pure function of its inputs, so
// identical computations produce byte-identical files.

namespace sizebias::report {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Linear interpolation between order statistics (type 7). `sorted` must be
/// ascending and non-empty.
double quantile(std::span<const double> sorted, double p);

/// `replicate,unit_id,h`, one row per replicate and unit.
std::string samples_csv(const ReshuffleResult& result);

/// Per-unit N, real h, null mean/sd and 2.5%/97.5% quantiles, plus the
/// Spearman diagnostics.
std::string null_summary_json(const ReshuffleResult& result, std::string_view dataset_name,
                              std::uint64_t master_seed);

/// Fit report: beta, beta_stderr, p_value, r_squared, n_points,
/// log10_prefactor, then the significance verdict.
std::string fit_json(const PowerLawFit& fit, double alpha_level, std::size_t excluded_zero_h,
                     std::string_view source);

/// `unit_id,N,real_h,null_mean_h,null_sd_h,h_hat,ratio,z,log_residual,raw_rank,normalized_rank`
/// in input order; undefined z or log_residual are left empty.
std::string benchmark_csv(std::span<const NormalizedScore> scores, RankKey key);

/// `k,k1,share,probability` for each basket size.
std::string toy_balls_csv(const combinatorics::PoolSpec& pool, std::span<const std::uint64_t> baskets);

struct RunManifest {
    std::string command;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replicates;
    std::string tool_version;
    std::string timestamp;
};

/// "fnv1a64:<16 hex digits>" over the bytes.
std::string digest(std::string_view bytes);

/// UTC ISO-8601; SOURCE_DATE_EPOCH overrides the clock when set.
std::string timestamp_now();

std::string tool_version();

std::string manifest_json(const RunManifest& manifest);

}  // namespace sizebias::report
