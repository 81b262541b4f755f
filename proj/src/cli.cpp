#include "sizebias/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "sizebias/bundled.hpp"
#include "sizebias/csv.hpp"
#include "sizebias/error.hpp"
#include "sizebias/ingest.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/report.hpp"
#include "sizebias/scaling.hpp"
#include "sizebias/synth.hpp"

namespace sizebias::cli {

namespace fs = std::filesystem;

namespace {

struct Output {
    std::vector<std::pair<fs::path, std::string>> files;

    void add(fs::path path, std::string content) { files.emplace_back(std::move(path), std::move(content)); }

    // Called only after every computation has finished, so a failure never
    // leaves a partial report set behind.
    void flush() const {
        for (const auto& [path, content] : files) {
            if (path.has_parent_path()) fs::create_directories(path.parent_path());
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f) throw ConfigError("cannot write " + path.string());
            f << content;
            if (!f) throw ConfigError("failed writing " + path.string());
        }
    }
};

report::RunManifest manifest(std::string command, std::string_view input,
                             std::optional<std::uint64_t> seed = std::nullopt,
                             std::optional<std::size_t> replicates = std::nullopt) {
    return {std::move(command), report::digest(input), seed, replicates, report::tool_version(),
            report::timestamp_now()};
}

Dataset require_publications(const std::string& input, const std::string& format,
                             std::string_view command, std::string& raw) {
    if (parse_format(format) != InputFormat::publications) {
        throw UsageError(std::string(command) +
                         " needs per-publication input; a summary file has no citation counts to "
                         "reshuffle (its h is already given)");
    }
    raw = read_input(input);
    return parse_publications(raw, input);
}

// --- hindex ---------------------------------------------------------------

struct HindexArgs {
    std::string input;
    std::string format = "publications";
    std::string out_dir;
};

void cmd_hindex(const HindexArgs& a, std::ostream& out) {
    std::string raw;
    const auto dataset = require_publications(a.input, a.format, "hindex", raw);
    std::string csv_text = "unit_id,N,h\n";
    for (const auto& u : dataset.units()) {
        csv_text += csv::row({u.id(), std::to_string(productivity(u)), std::to_string(group_h_index(u))});
    }
    if (a.out_dir.empty()) {
        out << csv_text;
        return;
    }
    Output o;
    o.add(fs::path(a.out_dir) / "hindex.csv", csv_text);
    o.add(fs::path(a.out_dir) / "manifest.json", report::manifest_json(manifest("hindex", raw)));
    o.flush();
}

// --- null-model -----------------------------------------------------------

struct NullArgs {
    std::string input;
    std::string format = "publications";
    std::uint64_t seed = 0;
    std::size_t replicates = 200;
    int threads = 0;
    std::string out_dir = ".";
};

void cmd_null_model(const NullArgs& a, std::ostream& out) {
    if (a.replicates < 1) throw UsageError("--replicates must be at least 1");
    std::string raw;
    const auto dataset = require_publications(a.input, a.format, "null-model", raw);
    const auto result = run_null_model(dataset, {a.replicates, a.seed, a.threads});

    Output o;
    const fs::path dir(a.out_dir);
    o.add(dir / "null_samples.csv", report::samples_csv(result));
    o.add(dir / "null_summary.json", report::null_summary_json(result, dataset.name(), a.seed));
    o.add(dir / "manifest.json",
          report::manifest_json(manifest("null-model", raw, a.seed, a.replicates)));
    o.flush();

    out << "units: " << result.unit_count() << "\n"
        << "pool: " << result.pool_checksum.count << " publications\n"
        << "replicates: " << result.replicates << "\n";
    try {
        out << "mean_spearman_vs_real: " << report::format_double(mean_spearman_vs_real(result)) << "\n";
    } catch (const DomainError& e) {
        out << "mean_spearman_vs_real: undefined (" << e.what() << ")\n";
    }
}

// --- fit ------------------------------------------------------------------

struct FitArgs {
    std::string input;
    std::string format = "summary";
    std::string null_dir;
    std::string points = "reshuffled";
    double alpha_level = 0.01;
    std::string out_dir;
};

struct NullRun {
    std::vector<std::string> ids;
    std::vector<double> n;
    std::vector<double> real_h;
};

NullRun read_null_summary(const fs::path& dir) {
    const auto path = (dir / "null_summary.json").string();
    const auto text = read_input(path);
    NullRun run;
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto& u : j.at("units")) {
            run.ids.push_back(u.at("unit_id").get<std::string>());
            run.n.push_back(u.at("N").get<double>());
            run.real_h.push_back(u.at("real_h").get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw IngestError(path, {{0, e.what()}});
    }
    return run;
}

std::vector<SizePoint> read_null_samples(const fs::path& dir, const NullRun& run) {
    const auto path = (dir / "null_samples.csv").string();
    const auto records = csv::parse(read_input(path), path);
    if (records.empty() || records.front().fields != std::vector<std::string>{"replicate", "unit_id", "h"}) {
        throw IngestError(path, {{1, "expected header 'replicate,unit_id,h'"}});
    }
    std::unordered_map<std::string, double> size_of;
    for (std::size_t i = 0; i < run.ids.size(); ++i) size_of[run.ids[i]] = run.n[i];

    std::vector<SizePoint> points;
    std::vector<IngestIssue> issues;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        const auto it = r.fields.size() == 3 ? size_of.find(r.fields[1]) : size_of.end();
        if (it == size_of.end()) {
            issues.push_back({r.line, "malformed row or unknown unit_id"});
            continue;
        }
        std::uint64_t h = 0;
        const auto& f = r.fields[2];
        const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), h);
        if (ec != std::errc{} || ptr != f.data() + f.size()) {
            issues.push_back({r.line, "h is not a nonnegative integer"});
            continue;
        }
        points.push_back({it->second, static_cast<double>(h)});
    }
    if (!issues.empty()) throw IngestError(path, std::move(issues));
    return points;
}

void cmd_fit(const FitArgs& a, std::ostream& out) {
    if (!(a.alpha_level > 0 && a.alpha_level < 1)) throw UsageError("--alpha-level must lie in (0, 1)");
    if (a.input.empty() == a.null_dir.empty()) {
        throw UsageError("fit needs exactly one of INPUT or --null-dir");
    }

    std::vector<SizePoint> points;
    std::string source;
    std::string raw;
    if (!a.null_dir.empty()) {
        const fs::path dir(a.null_dir);
        const auto run = read_null_summary(dir);
        if (a.points == "reshuffled") {
            points = read_null_samples(dir, run);
        } else if (a.points == "real") {
            for (std::size_t i = 0; i < run.n.size(); ++i) points.push_back({run.n[i], run.real_h[i]});
        } else {
            throw UsageError("--points must be reshuffled or real");
        }
        source = a.null_dir + " (" + a.points + ")";
        raw = read_input((dir / "null_samples.csv").string());
    } else {
        raw = read_input(a.input);
        source = a.input;
        if (parse_format(a.format) == InputFormat::summary) {
            points = size_points(parse_summary(raw, a.input));
        } else {
            const auto dataset = parse_publications(raw, a.input);
            for (const auto& u : dataset.units()) {
                points.push_back({static_cast<double>(productivity(u)), static_cast<double>(group_h_index(u))});
            }
        }
    }

    const auto filtered = fit_power_law_positive(points);
    const auto text = report::fit_json(filtered.fit, a.alpha_level, filtered.excluded_zero_h, source);
    if (a.out_dir.empty()) {
        out << text;
        return;
    }
    Output o;
    o.add(fs::path(a.out_dir) / "fit.json", text);
    o.add(fs::path(a.out_dir) / "manifest.json", report::manifest_json(manifest("fit", raw)));
    o.flush();
}

// --- benchmark ------------------------------------------------------------

struct BenchmarkArgs {
    std::string input;
    std::string format = "publications";
    std::uint64_t seed = 0;
    std::size_t replicates = 200;
    int threads = 0;
    std::string rank_key = "ratio";
    double alpha_level = 0.01;
    std::string out_dir = ".";
};

void cmd_benchmark(const BenchmarkArgs& a, std::ostream& out) {
    const auto key = parse_rank_key(a.rank_key);
    if (a.replicates < 2) throw UsageError("benchmark needs --replicates >= 2");
    if (!(a.alpha_level > 0 && a.alpha_level < 1)) throw UsageError("--alpha-level must lie in (0, 1)");
    std::string raw;
    const auto dataset = require_publications(a.input, a.format, "benchmark", raw);
    const auto result = run_null_model(dataset, {a.replicates, a.seed, a.threads});
    const auto bench = build_benchmark(result);
    const auto scores = normalized_scores(result, bench);

    Output o;
    const fs::path dir(a.out_dir);
    o.add(dir / "benchmark.csv", report::benchmark_csv(scores, key));
    o.add(dir / "benchmark_fit.json",
          report::fit_json(bench.curve, a.alpha_level, bench.excluded_zero_h, "reshuffled pooled points"));
    o.add(dir / "manifest.json", report::manifest_json(manifest("benchmark", raw, a.seed, a.replicates)));
    o.flush();

    out << "benchmark curve: h_hat(N) = 10^" << report::format_double(bench.curve.log10_prefactor)
        << " * N^" << report::format_double(bench.curve.beta) << "\n";
    for (const auto& e : normalized_ranking(scores, key)) {
        out << e.rank << "\t" << e.unit_id << "\t"
            << (e.value ? report::format_double(*e.value) : std::string("undefined")) << "\n";
    }
}

// --- toy-balls ------------------------------------------------------------

struct ToyArgs {
    std::uint64_t pool_size = 4000;
    std::uint64_t black = 2120;
    std::vector<std::uint64_t> baskets{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::string out_dir;
};

void cmd_toy_balls(const ToyArgs& a, std::ostream& out) {
    if (a.pool_size == 0) throw UsageError("--pool-size must be at least 1");
    if (a.black > a.pool_size) throw UsageError("--black exceeds --pool-size");
    for (auto k : a.baskets) {
        if (k > a.pool_size) {
            throw UsageError("basket size " + std::to_string(k) + " exceeds pool size " +
                             std::to_string(a.pool_size));
        }
    }
    const combinatorics::PoolSpec pool(a.black, a.pool_size - a.black);
    const auto text = report::toy_balls_csv(pool, a.baskets);
    if (a.out_dir.empty()) {
        out << text;
        return;
    }
    const std::string params = std::to_string(a.pool_size) + "/" + std::to_string(a.black);
    Output o;
    o.add(fs::path(a.out_dir) / "toy_balls.csv", text);
    o.add(fs::path(a.out_dir) / "manifest.json", report::manifest_json(manifest("toy-balls", params)));
    o.flush();
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
    double alpha = 1.5;
    double x_min = 1.0;
    std::string size_model = "powerlaw";
    std::uint64_t size_min = 100;
    std::uint64_t size_max = 10000;
    double size_exponent = 2.0;
    std::vector<std::uint64_t> sizes;
    std::string sizes_from;
    std::size_t units = 40;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_synth(const SynthArgs& a, std::ostream& out) {
    if (!(a.alpha > 0) || !std::isfinite(a.alpha)) throw UsageError("--alpha must be positive");
    if (!(a.x_min > 0) || !std::isfinite(a.x_min)) throw UsageError("--x-min must be positive");

    synth::SizeModel model;
    std::string inputs = "alpha=" + report::format_double(a.alpha);
    if (!a.sizes_from.empty() || !a.sizes.empty() || a.size_model == "explicit") {
        std::vector<std::uint64_t> sizes = a.sizes;
        if (!a.sizes_from.empty()) {
            const auto raw = read_input(a.sizes_from);
            inputs += raw;
            for (const auto& r : parse_summary(raw, a.sizes_from).rows) sizes.push_back(r.n_publications);
        }
        if (sizes.empty()) throw UsageError("explicit size model needs --sizes or --sizes-from");
        for (auto n : sizes) {
            if (n == 0) throw UsageError("unit sizes must be at least 1");
        }
        model = synth::SizeModel::explicit_list(std::move(sizes));
    } else {
        if (a.size_min == 0 || a.size_min > a.size_max) {
            throw UsageError("size bounds need 1 <= --size-min <= --size-max");
        }
        if (a.units < 1) throw UsageError("--units must be at least 1");
        if (a.size_model == "powerlaw") {
            model = synth::SizeModel::powerlaw(a.size_exponent, a.size_min, a.size_max);
        } else if (a.size_model == "uniform_floor") {
            model = synth::SizeModel::uniform_floor(a.size_min, a.size_max);
        } else {
            throw UsageError("--size-model must be powerlaw, uniform_floor or explicit");
        }
    }

    Rng size_rng = make_stream(a.seed, StreamDomain::sizes, 0);
    Rng cite_rng = make_stream(a.seed, StreamDomain::citations, 0);
    const auto sizes = synth::sample_sizes(model, a.units, size_rng);
    const auto dataset = synth::build_synthetic_dataset(sizes, {a.alpha, a.x_min}, cite_rng);
    const auto text = format_publications_csv(dataset);

    if (a.out == "-") {
        out << text;
        return;
    }
    Output o;
    o.add(a.out, text);
    o.add(a.out + ".manifest.json", report::manifest_json(manifest("synth", inputs, a.seed)));
    o.flush();
}

// --- bundled --------------------------------------------------------------

void cmd_bundled(const std::string& name, const std::string& out_path, std::ostream& out) {
    const auto text = bundled::summary_csv(name);
    if (!text) {
        std::string known;
        for (auto n : bundled::names()) known += " " + std::string(n);
        throw UsageError("unknown bundled table '" + name + "'; available:" + known);
    }
    if (out_path.empty()) {
        out << *text;
        return;
    }
    Output o;
    o.add(out_path, std::string(*text));
    o.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group h-index size-bias toolkit: reshuffling null model, scaling fits, "
                 "size-normalized rankings", "sizebias"};
    app.require_subcommand(1);
    app.set_version_flag("--version", report::tool_version());

    HindexArgs hx;
    auto* hindex = app.add_subcommand("hindex", "Group h-index of every unit in a publications file");
    hindex->add_option("input", hx.input, "Publications CSV")->required();
    hindex->add_option("--format", hx.format, "Input format")->check(CLI::IsMember({"publications", "summary"}));
    hindex->add_option("--out-dir", hx.out_dir, "Write hindex.csv here instead of stdout");

    NullArgs na;
    auto* null_model = app.add_subcommand("null-model", "Reshuffle citations across units, keeping unit sizes");
    null_model->add_option("input", na.input, "Publications CSV")->required();
    null_model->add_option("--format", na.format, "Input format")->check(CLI::IsMember({"publications", "summary"}));
    null_model->add_option("--seed", na.seed, "Master seed")->required();
    null_model->add_option("--replicates", na.replicates, "Number of reshuffles")->capture_default_str();
    null_model->add_option("--threads", na.threads, "Worker threads (default: SIZEBIAS_THREADS or all)");
    null_model->add_option("--out-dir", na.out_dir, "Report directory")->capture_default_str();

    FitArgs fa;
    auto* fit = app.add_subcommand("fit", "Fit h ~ N^beta on log-log axes");
    fit->add_option("input", fa.input, "Summary or publications CSV (or bundled:NAME)");
    fit->add_option("--format", fa.format, "Input format")->check(CLI::IsMember({"publications", "summary"}))->capture_default_str();
    fit->add_option("--null-dir", fa.null_dir, "Fit the output of a null-model run instead");
    fit->add_option("--points", fa.points, "With --null-dir: reshuffled or real")->capture_default_str();
    fit->add_option("--alpha-level", fa.alpha_level, "Significance level")->capture_default_str();
    fit->add_option("--out-dir", fa.out_dir, "Write fit.json here instead of stdout");

    BenchmarkArgs ba;
    auto* benchmark = app.add_subcommand("benchmark", "Size-normalized scores against the null-model benchmark");
    benchmark->add_option("input", ba.input, "Publications CSV")->required();
    benchmark->add_option("--format", ba.format, "Input format")->check(CLI::IsMember({"publications", "summary"}));
    benchmark->add_option("--seed", ba.seed, "Master seed")->required();
    benchmark->add_option("--replicates", ba.replicates, "Number of reshuffles")->capture_default_str();
    benchmark->add_option("--threads", ba.threads, "Worker threads");
    benchmark->add_option("--rank-key", ba.rank_key, "ratio, z or log_residual")->capture_default_str();
    benchmark->add_option("--alpha-level", ba.alpha_level, "Significance level for the curve fit")->capture_default_str();
    benchmark->add_option("--out-dir", ba.out_dir, "Report directory")->capture_default_str();

    ToyArgs ta;
    auto* toy = app.add_subcommand("toy-balls", "Hypergeometric share and count distributions");
    toy->add_option("--pool-size", ta.pool_size, "Balls in the pool (K)")->capture_default_str();
    toy->add_option("--black", ta.black, "Black balls in the pool (K1)")->capture_default_str();
    toy->add_option("--baskets", ta.baskets, "Basket sizes")->delimiter(',')->capture_default_str();
    toy->add_option("--out-dir", ta.out_dir, "Write toy_balls.csv here instead of stdout");

    SynthArgs sa;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic publications file with Pareto citations");
    synth_cmd->add_option("--alpha", sa.alpha, "Pareto tail exponent")->required();
    synth_cmd->add_option("--x-min", sa.x_min, "Pareto scale")->capture_default_str();
    synth_cmd->add_option("--size-model", sa.size_model, "powerlaw, uniform_floor or explicit")->capture_default_str();
    synth_cmd->add_option("--size-min", sa.size_min, "Smallest unit size")->capture_default_str();
    synth_cmd->add_option("--size-max", sa.size_max, "Largest unit size")->capture_default_str();
    synth_cmd->add_option("--size-exponent", sa.size_exponent, "Density exponent of the powerlaw size model")->capture_default_str();
    synth_cmd->add_option("--sizes", sa.sizes, "Explicit unit sizes")->delimiter(',');
    synth_cmd->add_option("--sizes-from", sa.sizes_from, "Take unit sizes from a summary CSV (or bundled:NAME)");
    synth_cmd->add_option("--units", sa.units, "Number of units")->capture_default_str();
    synth_cmd->add_option("--seed", sa.seed, "Master seed")->required();
    synth_cmd->add_option("--out", sa.out, "Output publications CSV, '-' for stdout")->required();

    std::string bundled_name, bundled_out;
    auto* bundled_cmd = app.add_subcommand("bundled", "Print a bundled reference summary table");
    bundled_cmd->add_option("name", bundled_name, "ukraine_2019 or uk_rae2008_physics")->required();
    bundled_cmd->add_option("--out", bundled_out, "Write to a file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*hindex) cmd_hindex(hx, out);
        else if (*null_model) cmd_null_model(na, out);
        else if (*fit) cmd_fit(fa, out);
        else if (*benchmark) cmd_benchmark(ba, out);
        else if (*toy) cmd_toy_balls(ta, out);
        else if (*synth_cmd) cmd_synth(sa, out);
        else if (*bundled_cmd) cmd_bundled(bundled_name, bundled_out, out);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IngestError& e) {
        err << "ingestion error: " << e.what() << "\n";
        return kIngest;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCompute;
    }
}

}  // namespace sizebias::cli
