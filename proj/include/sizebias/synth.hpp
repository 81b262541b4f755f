#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sizebias/model.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/rng.hpp"

// Synthetic citation pools and unit-size distributions.

namespace sizebias::synth {

/// Pareto citations: P(X > x) = (x_min / x)^alpha for x >= x_min, shifted
/// and floored so that the smallest draw is 0 citations.
struct CitationModel {
    double alpha = 1.5;
    double x_min = 1.0;
};

/// floor(x_min * u^(-1/alpha) - x_min) for u in (0, 1].
Citations citation_from_uniform(const CitationModel& model, double u);

std::vector<Citations> sample_citations(const CitationModel& model, std::size_t n, Rng& rng);

enum class SizeKind {
    powerlaw,       // density ~ N^-exponent on [min, max], rounded
    uniform_floor,  // integer uniform on [min, max]
    explicit_list,  // the given sizes, unchanged
};

struct SizeModel {
    SizeKind kind = SizeKind::powerlaw;
    double exponent = 2.0;
    std::uint64_t min = 100;
    std::uint64_t max = 10000;
    std::vector<std::uint64_t> sizes;

    static SizeModel powerlaw(double exponent, std::uint64_t min, std::uint64_t max) {
        return {SizeKind::powerlaw, exponent, min, max, {}};
    }
    static SizeModel uniform_floor(std::uint64_t min, std::uint64_t max) {
        return {SizeKind::uniform_floor, 0.0, min, max, {}};
    }
    static SizeModel explicit_list(std::vector<std::uint64_t> sizes) {
        return {SizeKind::explicit_list, 0.0, 0, 0, std::move(sizes)};
    }
};

/// `units` sizes, each >= 1. The explicit kind returns its list as is.
/// Throws DomainError for min > max, min = 0, or an explicit size of 0.
std::vector<std::uint64_t> sample_sizes(const SizeModel& model, std::size_t units, Rng& rng);

/// One unit per size, ids "u001", "u002", ..., citations drawn independently.
Dataset build_synthetic_dataset(std::span<const std::uint64_t> sizes, const CitationModel& model,
                                Rng& rng);

struct BetaCheck {
    double fitted = 0;     // pooled reshuffled fit
    double predicted = 0;  // 1 / (1 + alpha)
};

/// Generates `units` sizes and a Pareto(alpha) dataset from
/// config.master_seed, runs the null model, and fits the pooled points.
BetaCheck verify_beta_relation(double alpha, const SizeModel& sizes, const ReshuffleConfig& config,
                               std::size_t units = 40);

}  // namespace sizebias::synth
