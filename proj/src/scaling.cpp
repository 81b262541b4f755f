#include "sizebias/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "sizebias/error.hpp"

namespace sizebias {

double PowerLawFit::predict(double n) const { return std::pow(10.0, log10_prefactor) * std::pow(n, beta); }

PowerLawFit fit_power_law(std::span<const SizePoint> points) {
    if (points.size() < 3) {
        throw FitError("power-law fit needs at least 3 points, got " + std::to_string(points.size()));
    }
    std::vector<double> x, y;
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.n > 0) || !(p.h > 0) || !std::isfinite(p.n) || !std::isfinite(p.h)) {
            throw FitError("power-law fit needs positive finite N and h");
        }
        x.push_back(std::log10(p.n));
        y.push_back(std::log10(p.h));
    }

    const auto n = static_cast<double>(points.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) throw FitError("power-law fit needs at least two distinct N values");

    PowerLawFit fit;
    fit.n_points = points.size();
    fit.beta = sxy / sxx;
    fit.log10_prefactor = my - fit.beta * mx;

    double sse = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.log10_prefactor + fit.beta * x[i]);
        sse += r * r;
    }
    const double dof = n - 2;
    fit.beta_stderr = std::sqrt(sse / dof / sxx);
    fit.r_squared = syy > 0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 0.0;

    if (fit.beta_stderr > 0) {
        fit.p_value = student_t_two_sided_p(fit.beta / fit.beta_stderr, dof);
    } else {
        // Zero residual: the slope is exact.
        fit.p_value = fit.beta == 0 ? 1.0 : 0.0;
    }
    return fit;
}

FilteredFit fit_power_law_positive(std::span<const SizePoint> points) {
    FilteredFit out;
    std::vector<SizePoint> kept;
    kept.reserve(points.size());
    for (const auto& p : points) {
        if (p.h == 0) {
            ++out.excluded_zero_h;
        } else {
            kept.push_back(p);
        }
    }
    out.fit = fit_power_law(kept);
    return out;
}

std::vector<SizePoint> pooled_points(const ReshuffleResult& result) {
    std::vector<SizePoint> points;
    points.reserve(result.h_samples.size());
    for (std::size_t r = 0; r < result.replicates; ++r) {
        for (std::size_t u = 0; u < result.unit_count(); ++u) {
            points.push_back({static_cast<double>(result.productivities[u]),
                              static_cast<double>(result.h(r, u))});
        }
    }
    return points;
}

std::vector<SizePoint> real_points(const ReshuffleResult& result) {
    std::vector<SizePoint> points;
    for (std::size_t u = 0; u < result.unit_count(); ++u) {
        points.push_back({static_cast<double>(result.productivities[u]),
                          static_cast<double>(result.real_h[u])});
    }
    return points;
}

double student_t_two_sided_p(double t, double dof) {
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    const boost::math::students_t dist(dof);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

bool slope_significance(const PowerLawFit& fit, double alpha) {
    if (!(alpha > 0 && alpha < 1)) throw DomainError("significance level must lie in (0, 1)");
    return fit.p_value < alpha;
}

Benchmark build_benchmark(const ReshuffleResult& result) {
    if (result.replicates < 2) throw ConfigError("benchmark needs at least 2 replicates");

    Benchmark b;
    b.unit_ids = result.unit_ids;
    b.productivities = result.productivities;
    const std::size_t m = result.unit_count();
    const auto reps = static_cast<double>(result.replicates);
    b.null_mean.assign(m, 0.0);
    b.null_sd.assign(m, 0.0);
    for (std::size_t u = 0; u < m; ++u) {
        double s = 0;
        for (std::size_t r = 0; r < result.replicates; ++r) s += static_cast<double>(result.h(r, u));
        const double mu = s / reps;
        double ss = 0;
        for (std::size_t r = 0; r < result.replicates; ++r) {
            const double d = static_cast<double>(result.h(r, u)) - mu;
            ss += d * d;
        }
        b.null_mean[u] = mu;
        b.null_sd[u] = std::sqrt(ss / (reps - 1));
    }

    const auto points = pooled_points(result);
    const bool single_size = std::all_of(b.productivities.begin(), b.productivities.end(),
                                         [&](std::uint64_t n) { return n == b.productivities.front(); });
    if (!single_size) {
        const auto filtered = fit_power_law_positive(points);
        b.curve = filtered.fit;
        b.excluded_zero_h = filtered.excluded_zero_h;
        return b;
    }

    // Every unit has the same N: the curve collapses to a constant, the
    // geometric mean of the positive null h values.
    double log_sum = 0;
    std::size_t kept = 0;
    for (const auto& p : points) {
        if (p.h > 0) {
            log_sum += std::log10(p.h);
            ++kept;
        } else {
            ++b.excluded_zero_h;
        }
    }
    if (kept == 0) throw FitError("every null-model h is 0; no benchmark curve");
    b.curve = PowerLawFit{};
    b.curve.beta = 0;
    b.curve.log10_prefactor = log_sum / static_cast<double>(kept);
    b.curve.n_points = kept;
    return b;
}

std::vector<NormalizedScore> normalized_scores(const Benchmark& benchmark,
                                               std::span<const std::uint64_t> observed_h) {
    if (observed_h.size() != benchmark.unit_ids.size()) {
        throw ConfigError("observed h count does not match the benchmark's units");
    }
    std::vector<NormalizedScore> out;
    out.reserve(observed_h.size());
    for (std::size_t u = 0; u < observed_h.size(); ++u) {
        NormalizedScore s;
        s.unit_id = benchmark.unit_ids[u];
        s.n = benchmark.productivities[u];
        s.real_h = observed_h[u];
        s.null_mean = benchmark.null_mean[u];
        s.null_sd = benchmark.null_sd[u];
        s.h_hat = benchmark.expected_h(static_cast<double>(s.n));
        const auto h = static_cast<double>(s.real_h);
        s.ratio = h / s.h_hat;
        if (s.null_sd > 0) s.z = (h - s.null_mean) / s.null_sd;
        if (s.real_h > 0) s.log_residual = std::log10(h) - std::log10(s.h_hat);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<NormalizedScore> normalized_scores(const ReshuffleResult& result,
                                               const Benchmark& benchmark) {
    if (result.unit_ids != benchmark.unit_ids) {
        throw ConfigError("benchmark was built from a different dataset");
    }
    return normalized_scores(benchmark, result.real_h);
}

RankKey parse_rank_key(std::string_view key) {
    if (key == "ratio") return RankKey::ratio;
    if (key == "z") return RankKey::z;
    if (key == "log_residual") return RankKey::log_residual;
    throw UsageError("unknown ranking key '" + std::string(key) +
                     "' (expected ratio, z or log_residual)");
}

std::string_view to_string(RankKey key) {
    switch (key) {
        case RankKey::ratio: return "ratio";
        case RankKey::z: return "z";
        case RankKey::log_residual: return "log_residual";
    }
    return "?";
}

std::vector<RankEntry> normalized_ranking(std::span<const NormalizedScore> scores, RankKey key) {
    if (scores.empty()) throw ConfigError("nothing to rank");

    std::vector<RankEntry> out;
    out.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        RankEntry e;
        e.index = i;
        e.unit_id = scores[i].unit_id;
        switch (key) {
            case RankKey::ratio: e.value = scores[i].ratio; break;
            case RankKey::z: e.value = scores[i].z; break;
            case RankKey::log_residual: e.value = scores[i].log_residual; break;
        }
        if (e.value && std::isnan(*e.value)) e.value.reset();
        out.push_back(std::move(e));
    }

    std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.value.has_value() != b.value.has_value()) return a.value.has_value();
        if (a.value && *a.value != *b.value) return *a.value > *b.value;
        return a.unit_id < b.unit_id;
    });

    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i > 0 && out[i].value == out[i - 1].value) {
            out[i].rank = out[i - 1].rank;
        } else {
            out[i].rank = i + 1;
        }
    }
    return out;
}

std::vector<std::size_t> descending_ranks(std::span<const double> values) {
    std::vector<std::size_t> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ranks[i] = 1 + static_cast<std::size_t>(std::count_if(
                           values.begin(), values.end(), [&](double v) { return v > values[i]; }));
    }
    return ranks;
}

}  // namespace sizebias
