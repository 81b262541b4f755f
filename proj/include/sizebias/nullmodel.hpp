#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sizebias/model.hpp"
#include "sizebias/rng.hpp"

// Citation-reshuffling null model: pool every publication, shuffle, hand the
// pool back out in blocks of each unit's original size, recompute h.

namespace sizebias {

struct ReshuffleConfig {
    std::size_t replicates = 200;
    std::uint64_t master_seed = 0;
    // Worker count; 0 means SIZEBIAS_THREADS if set, otherwise the OpenMP default.
    int threads = 0;
};

/// Element count and wrapping citation sum of a multiset of counts.
struct PoolChecksum {
    std::uint64_t count = 0;
    std::uint64_t citation_sum = 0;

    friend bool operator==(const PoolChecksum&, const PoolChecksum&) = default;
};

PoolChecksum checksum(std::span<const Citations> citations) noexcept;

struct ReshuffleResult {
    std::vector<std::string> unit_ids;
    std::vector<std::uint64_t> productivities;
    std::vector<std::uint64_t> real_h;
    std::size_t replicates = 0;
    // Row-major replicates x units.
    std::vector<std::uint64_t> h_samples;
    // Checksum of the citations actually handed out in each replicate.
    std::vector<PoolChecksum> replicate_checksums;
    PoolChecksum pool_checksum;

    std::size_t unit_count() const noexcept { return unit_ids.size(); }
    std::uint64_t h(std::size_t replicate, std::size_t unit) const {
        return h_samples[replicate * unit_count() + unit];
    }
    std::span<const std::uint64_t> row(std::size_t replicate) const {
        return std::span(h_samples).subspan(replicate * unit_count(), unit_count());
    }
    std::vector<std::uint64_t> column(std::size_t unit) const;
};

/// Concatenation of every unit's citation counts, duplicates kept.
std::vector<Citations> pool(const Dataset& dataset);

/// Shuffles `shuffled` in place (it must hold the pool) and returns the
/// h-index of each consecutive block of the given sizes.
/// Throws ConfigError when the block sizes do not add up to the pool size.
std::vector<std::uint64_t> reshuffle_in_place(std::span<Citations> shuffled,
                                              std::span<const std::uint64_t> productivities,
                                              Rng& rng);

/// One replicate on a copy of the pool.
std::vector<std::uint64_t> reshuffle_once(std::span<const Citations> pool,
                                          std::span<const std::uint64_t> productivities,
                                          Rng& rng);

/// Runs `config.replicates` replicates in parallel. Replicate r always uses
/// stream (master_seed, replicate, r), so the result does not depend on the
/// worker count or scheduling.
ReshuffleResult run_null_model(const Dataset& dataset, const ReshuffleConfig& config);

/// Worker count that run_null_model would use for this config.
int resolve_threads(const ReshuffleConfig& config);

namespace reference {

/// Single-threaded run_null_model, kept as the equivalence baseline for the
/// parallel kernel.
ReshuffleResult run_null_model(const Dataset& dataset, const ReshuffleConfig& config);

}  // namespace reference

/// Average ranks, 1-based; tied values share the mean of their rank span.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation with average-rank ties. Throws DomainError on
/// length mismatch, fewer than 2 points, or a constant argument.
double spearman(std::span<const double> x, std::span<const double> y);

/// Mean over replicates of spearman(real_h, replicate row).
double mean_spearman_vs_real(const ReshuffleResult& result);

/// Diagnostic: spearman(real_h, per-unit mean of the null samples).
double spearman_vs_null_mean(const ReshuffleResult& result);

}  // namespace sizebias
