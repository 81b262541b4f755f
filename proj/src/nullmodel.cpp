#include "sizebias/nullmodel.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string_view>

#include "nullmodel_detail.hpp"
#include "sizebias/error.hpp"

namespace sizebias {

namespace {

void check_partition(std::size_t pool_size, std::span<const std::uint64_t> productivities) {
    const std::uint64_t total =
        std::accumulate(productivities.begin(), productivities.end(), std::uint64_t{0});
    if (total != pool_size) {
        throw ConfigError("unit sizes sum to " + std::to_string(total) + " but the pool holds " +
                          std::to_string(pool_size) + " publications");
    }
}

void reshuffle_blocks(std::span<Citations> shuffled, std::span<const std::uint64_t> productivities,
                      Rng& rng, HIndexWorkspace& h_index, std::span<std::uint64_t> out) {
    fisher_yates(shuffled, rng);
    std::size_t offset = 0;
    for (std::size_t u = 0; u < productivities.size(); ++u) {
        const auto n = static_cast<std::size_t>(productivities[u]);
        out[u] = h_index(shuffled.subspan(offset, n));
        offset += n;
    }
}

double mean(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> to_double(std::span<const std::uint64_t> v) {
    return {v.begin(), v.end()};
}

}  // namespace

PoolChecksum checksum(std::span<const Citations> citations) noexcept {
    PoolChecksum c;
    c.count = citations.size();
    for (Citations x : citations) c.citation_sum += x;
    return c;
}

std::vector<std::uint64_t> ReshuffleResult::column(std::size_t unit) const {
    std::vector<std::uint64_t> out(replicates);
    for (std::size_t r = 0; r < replicates; ++r) out[r] = h(r, unit);
    return out;
}

std::vector<Citations> pool(const Dataset& dataset) {
    std::vector<Citations> out;
    out.reserve(dataset.pool_size());
    for (const auto& u : dataset.units()) {
        out.insert(out.end(), u.citations().begin(), u.citations().end());
    }
    return out;
}

std::vector<std::uint64_t> reshuffle_in_place(std::span<Citations> shuffled,
                                              std::span<const std::uint64_t> productivities,
                                              Rng& rng) {
    check_partition(shuffled.size(), productivities);
    std::vector<std::uint64_t> h(productivities.size());
    HIndexWorkspace ws;
    reshuffle_blocks(shuffled, productivities, rng, ws, h);
    return h;
}

std::vector<std::uint64_t> reshuffle_once(std::span<const Citations> pool,
                                          std::span<const std::uint64_t> productivities,
                                          Rng& rng) {
    std::vector<Citations> copy(pool.begin(), pool.end());
    return reshuffle_in_place(copy, productivities, rng);
}

namespace detail {

ReshuffleResult prepare_result(const Dataset& dataset, const ReshuffleConfig& config) {
    if (config.replicates < 1) throw ConfigError("replicates must be at least 1");

    ReshuffleResult result;
    result.replicates = config.replicates;
    for (const auto& u : dataset.units()) {
        result.unit_ids.push_back(u.id());
        result.productivities.push_back(productivity(u));
        result.real_h.push_back(group_h_index(u));
    }
    result.h_samples.assign(config.replicates * dataset.size(), 0);
    result.replicate_checksums.assign(config.replicates, PoolChecksum{});
    for (const auto& u : dataset.units()) {
        const auto c = checksum(u.citations());
        result.pool_checksum.count += c.count;
        result.pool_checksum.citation_sum += c.citation_sum;
    }
    return result;
}

void run_replicate(std::span<const Citations> pool, ReshuffleResult& result,
                   std::uint64_t master_seed, std::size_t r, ReplicateWorkspace& ws) {
    ws.shuffled.assign(pool.begin(), pool.end());
    Rng rng = make_stream(master_seed, StreamDomain::replicate, r);
    const std::size_t m = result.unit_count();
    reshuffle_blocks(ws.shuffled, result.productivities, rng, ws.h_index,
                     std::span(result.h_samples).subspan(r * m, m));

    PoolChecksum handed_out;
    std::size_t offset = 0;
    for (std::uint64_t n : result.productivities) {
        const auto c = checksum(std::span(ws.shuffled).subspan(offset, n));
        handed_out.count += c.count;
        handed_out.citation_sum += c.citation_sum;
        offset += n;
    }
    result.replicate_checksums[r] = handed_out;
}

}  // namespace detail

int resolve_threads(const ReshuffleConfig& config) {
    if (config.threads > 0) return config.threads;
    if (const char* env = std::getenv("SIZEBIAS_THREADS")) {
        const std::string_view s(env);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
    }
    return omp_get_max_threads();
}

ReshuffleResult run_null_model(const Dataset& dataset, const ReshuffleConfig& config) {
    auto result = detail::prepare_result(dataset, config);
    const auto all = pool(dataset);
    const auto replicates = static_cast<std::int64_t>(config.replicates);

#pragma omp parallel num_threads(resolve_threads(config))
    {
        detail::ReplicateWorkspace ws;
#pragma omp for schedule(static)
        for (std::int64_t r = 0; r < replicates; ++r) {
            detail::run_replicate(all, result, config.master_seed, static_cast<std::size_t>(r), ws);
        }
    }
    return result;
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        // Positions i..j-1 hold one tie group; 1-based ranks i+1..j.
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
        i = j;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("spearman: length mismatch");
    if (x.size() < 2) throw DomainError("spearman: need at least two points");
    const auto constant = [](std::span<const double> v) {
        return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
    };
    if (constant(x) || constant(y)) throw DomainError("spearman: zero-variance input");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

double mean_spearman_vs_real(const ReshuffleResult& result) {
    if (result.replicates < 1) throw ConfigError("no replicates");
    const auto real = to_double(result.real_h);
    double total = 0;
    for (std::size_t r = 0; r < result.replicates; ++r) {
        total += spearman(real, to_double(result.row(r)));
    }
    return total / static_cast<double>(result.replicates);
}

double spearman_vs_null_mean(const ReshuffleResult& result) {
    if (result.replicates < 1) throw ConfigError("no replicates");
    std::vector<double> means(result.unit_count());
    for (std::size_t u = 0; u < result.unit_count(); ++u) {
        double s = 0;
        for (std::size_t r = 0; r < result.replicates; ++r) s += static_cast<double>(result.h(r, u));
        means[u] = s / static_cast<double>(result.replicates);
    }
    return spearman(to_double(result.real_h), means);
}

}  // namespace sizebias
