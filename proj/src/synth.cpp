#include "sizebias/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "sizebias/error.hpp"
#include "sizebias/scaling.hpp"

namespace sizebias::synth {

namespace {

constexpr double kCitationCap = 0x1.0p63;

void check_model(const CitationModel& model) {
    if (!(model.alpha > 0) || !std::isfinite(model.alpha)) {
        throw DomainError("Pareto exponent alpha must be positive");
    }
    if (!(model.x_min > 0) || !std::isfinite(model.x_min)) {
        throw DomainError("Pareto scale x_min must be positive");
    }
}

std::uint64_t powerlaw_size(double exponent, double lo, double hi, double u) {
    double x;
    if (std::fabs(exponent - 1.0) < 1e-12) {
        x = lo * std::pow(hi / lo, u);
    } else {
        const double g = 1.0 - exponent;
        const double a = std::pow(lo, g);
        const double b = std::pow(hi, g);
        x = std::pow(a + u * (b - a), 1.0 / g);
    }
    return static_cast<std::uint64_t>(std::clamp(std::round(x), lo, hi));
}

}  // namespace

Citations citation_from_uniform(const CitationModel& model, double u) {
    check_model(model);
    if (!(u > 0 && u <= 1)) throw DomainError("uniform variate must lie in (0, 1]");
    const double x = model.x_min * std::pow(u, -1.0 / model.alpha) - model.x_min;
    if (!(x < kCitationCap)) return static_cast<Citations>(kCitationCap);
    return static_cast<Citations>(std::floor(std::max(x, 0.0)));
}

std::vector<Citations> sample_citations(const CitationModel& model, std::size_t n, Rng& rng) {
    check_model(model);
    std::vector<Citations> out(n);
    for (auto& c : out) c = citation_from_uniform(model, uniform_open01(rng));
    return out;
}

std::vector<std::uint64_t> sample_sizes(const SizeModel& model, std::size_t units, Rng& rng) {
    if (model.kind == SizeKind::explicit_list) {
        if (std::find(model.sizes.begin(), model.sizes.end(), 0u) != model.sizes.end()) {
            throw DomainError("explicit unit sizes must be at least 1");
        }
        return model.sizes;
    }
    if (model.min > model.max) {
        throw DomainError("size bounds: min " + std::to_string(model.min) + " exceeds max " +
                          std::to_string(model.max));
    }
    if (model.min == 0) throw DomainError("size lower bound must be at least 1");

    std::vector<std::uint64_t> out(units);
    if (model.kind == SizeKind::uniform_floor) {
        const std::uint64_t span = model.max - model.min + 1;
        for (auto& n : out) n = model.min + uniform_below(rng, span);
        return out;
    }

    if (!std::isfinite(model.exponent)) throw DomainError("size exponent must be finite");
    const auto lo = static_cast<double>(model.min);
    const auto hi = static_cast<double>(model.max);
    for (auto& n : out) n = powerlaw_size(model.exponent, lo, hi, uniform_open01(rng));
    return out;
}

Dataset build_synthetic_dataset(std::span<const std::uint64_t> sizes, const CitationModel& model,
                                Rng& rng) {
    if (sizes.empty()) throw ConfigError("synthetic dataset needs at least one unit");
    std::vector<Unit> units;
    units.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "u%03zu", i + 1);
        units.emplace_back(id, "Synthetic unit " + std::to_string(i + 1),
                           sample_citations(model, sizes[i], rng));
    }
    return Dataset("synthetic", std::move(units));
}

BetaCheck verify_beta_relation(double alpha, const SizeModel& sizes, const ReshuffleConfig& config,
                               std::size_t units) {
    const CitationModel model{alpha, 1.0};
    check_model(model);

    Rng size_rng = make_stream(config.master_seed, StreamDomain::sizes, 0);
    Rng cite_rng = make_stream(config.master_seed, StreamDomain::citations, 0);
    const auto n = sample_sizes(sizes, units, size_rng);
    const auto dataset = build_synthetic_dataset(n, model, cite_rng);
    const auto result = run_null_model(dataset, config);

    BetaCheck out;
    out.fitted = fit_power_law_positive(pooled_points(result)).fit.beta;
    out.predicted = 1.0 / (1.0 + alpha);
    return out;
}

}  // namespace sizebias::synth
