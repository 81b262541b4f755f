#include "sizebias/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include <json.hpp>

#include "sizebias/csv.hpp"
#include "sizebias/error.hpp"

#ifndef SIZEBIAS_VERSION
#define SIZEBIAS_VERSION "0.0.0"
#endif

namespace sizebias::report {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class F>
Json try_number(F&& f) {
    try {
        return f();
    } catch (const DomainError&) {
        return nullptr;
    }
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

double quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw DomainError("quantile of an empty sample");
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::string samples_csv(const ReshuffleResult& result) {
    std::string out = "replicate,unit_id,h\n";
    for (std::size_t r = 0; r < result.replicates; ++r) {
        const auto rep = std::to_string(r);
        for (std::size_t u = 0; u < result.unit_count(); ++u) {
            out += rep;
            out.push_back(',');
            out += csv::escape(result.unit_ids[u]);
            out.push_back(',');
            out += std::to_string(result.h(r, u));
            out.push_back('\n');
        }
    }
    return out;
}

std::string null_summary_json(const ReshuffleResult& result, std::string_view dataset_name,
                              std::uint64_t master_seed) {
    Json j;
    j["dataset"] = dataset_name;
    j["replicates"] = result.replicates;
    j["master_seed"] = master_seed;
    j["pool_size"] = result.pool_checksum.count;
    j["mean_spearman_vs_real"] = try_number([&] { return mean_spearman_vs_real(result); });
    j["spearman_vs_null_mean"] = try_number([&] { return spearman_vs_null_mean(result); });

    Json units = Json::array();
    for (std::size_t u = 0; u < result.unit_count(); ++u) {
        std::vector<double> h;
        h.reserve(result.replicates);
        for (std::size_t r = 0; r < result.replicates; ++r) h.push_back(static_cast<double>(result.h(r, u)));
        std::sort(h.begin(), h.end());
        double sum = 0;
        for (double v : h) sum += v;
        const double mean = sum / static_cast<double>(h.size());
        double ss = 0;
        for (double v : h) ss += (v - mean) * (v - mean);

        Json row;
        row["unit_id"] = result.unit_ids[u];
        row["N"] = result.productivities[u];
        row["real_h"] = result.real_h[u];
        row["mean_h"] = mean;
        row["sd_h"] = h.size() > 1 ? Json(std::sqrt(ss / static_cast<double>(h.size() - 1))) : Json(nullptr);
        row["q025"] = quantile(h, 0.025);
        row["q975"] = quantile(h, 0.975);
        units.push_back(std::move(row));
    }
    j["units"] = std::move(units);
    return dump(j);
}

std::string fit_json(const PowerLawFit& fit, double alpha_level, std::size_t excluded_zero_h,
                     std::string_view source) {
    Json j;
    j["beta"] = fit.beta;
    j["beta_stderr"] = fit.beta_stderr;
    j["p_value"] = fit.p_value;
    j["r_squared"] = fit.r_squared;
    j["n_points"] = fit.n_points;
    j["log10_prefactor"] = fit.log10_prefactor;
    j["alpha_level"] = alpha_level;
    j["significant"] = slope_significance(fit, alpha_level);
    j["excluded_zero_h"] = excluded_zero_h;
    j["source"] = source;
    return dump(j);
}

std::string benchmark_csv(std::span<const NormalizedScore> scores, RankKey key) {
    std::vector<double> raw(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) raw[i] = static_cast<double>(scores[i].real_h);
    const auto raw_rank = descending_ranks(raw);

    std::vector<std::size_t> norm_rank(scores.size());
    for (const auto& e : normalized_ranking(scores, key)) norm_rank[e.index] = e.rank;

    const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    std::string out =
        "unit_id,N,real_h,null_mean_h,null_sd_h,h_hat,ratio,z,log_residual,raw_rank,normalized_rank\n";
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const auto& s = scores[i];
        out += csv::row({s.unit_id, std::to_string(s.n), std::to_string(s.real_h),
                         format_double(s.null_mean), format_double(s.null_sd), format_double(s.h_hat),
                         format_double(s.ratio), opt(s.z), opt(s.log_residual),
                         std::to_string(raw_rank[i]), std::to_string(norm_rank[i])});
    }
    return out;
}

std::string toy_balls_csv(const combinatorics::PoolSpec& pool, std::span<const std::uint64_t> baskets) {
    std::string out = "k,k1,share,probability\n";
    for (std::uint64_t k : baskets) {
        const auto dist = combinatorics::count_distribution(pool, k);
        const auto ks = std::to_string(k);
        for (const auto& p : dist) {
            const double share = k == 0 ? 0.0 : static_cast<double>(p.k1) / static_cast<double>(k);
            out += csv::row({ks, std::to_string(p.k1), format_double(share), format_double(p.probability)});
        }
    }
    return out;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string timestamp_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0' && end != epoch) t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string tool_version() { return SIZEBIAS_VERSION; }

std::string manifest_json(const RunManifest& m) {
    Json j;
    j["command"] = m.command;
    j["input_digest"] = m.input_digest;
    j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
    j["replicates"] = m.replicates ? Json(*m.replicates) : Json(nullptr);
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    return dump(j);
}

}  // namespace sizebias::report
