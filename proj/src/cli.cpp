#include <arbk/cli.hpp>

#include <arbk/errors.hpp>
#include <arbk/experiments.hpp>
#include <arbk/io.hpp>
#include <arbk/plot.hpp>
#include <arbk/solvers.hpp>
#include <arbk/version.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

namespace arbk::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GenerateFlags
{
    Index m = 0;
    Index n = 0;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

struct SolveFlags
{
    std::string problem;
    std::string method;
    int epochs = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::optional<double> theta0;
    std::string out;
};

struct CompareFlags
{
    std::string problem;
    std::optional<Index> m;
    std::optional<Index> n;
    std::optional<double> lambda;
    std::uint64_t seed = 0;
    std::string methods = "bk,arbk";
    int trials = 10;
    int epochs = 0;
    double tol = 0.0;
    std::optional<double> theta0;
    std::uint64_t stream_seed = 0;
    unsigned threads = 0;
    std::string out_dir;
};

struct PlotFlags
{
    std::string in;
    std::string out;
    std::string metric = "rel_residual";
    std::string label = "run";
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err)
{
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("arbk", sink);
    logger->set_pattern("[%l] %v");
    logger->set_level(spdlog::level::info);
    if (const char* env = std::getenv("LOG_LEVEL")) {
        const std::string level(env);
        if (level == "error") logger->set_level(spdlog::level::err);
        else if (level == "debug") logger->set_level(spdlog::level::debug);
        else if (level != "info") logger->warn("ignoring LOG_LEVEL='{}' (expected error, info or debug)", level);
    }
    return logger;
}

std::optional<double> kappa_for(const RowMatrix& a)
{
    if (a.rows() > kConditionNumberLimit || a.cols() > kConditionNumberLimit) return std::nullopt;
    return condition_number(a);
}

json problem_meta(const GeneratedProblem& p, std::optional<double> kappa)
{
    json meta;
    meta["m"] = p.spec.m;
    meta["n"] = p.spec.n;
    meta["lambda"] = p.spec.lambda;
    meta["seed"] = p.spec.seed;
    meta["sparsity"] = p.sparsity;
    meta["kappa"] = kappa ? json(*kappa) : json(nullptr);
    return meta;
}

std::vector<Method> parse_methods(const std::string& list)
{
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const Method m = parse_method(item);
        if (std::find(out.begin(), out.end(), m) != out.end()) {
            throw InvalidArgument("method '" + item + "' listed twice");
        }
        out.push_back(m);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int cmd_generate(const GenerateFlags& f, std::ostream& out, spdlog::logger& log)
{
    log.info("generating {}x{} problem, lambda={}, seed={}", f.m, f.n, f.lambda, f.seed);
    const GeneratedProblem p = generate(ProblemSpec{f.m, f.n, f.lambda, f.seed});
    const auto kappa = kappa_for(p.sys.matrix());
    io::save_problem(f.out, p);
    out << fmt::format("m={} n={} lambda={} seed={} sparsity={}", f.m, f.n, io::format_double(f.lambda), f.seed,
                       p.sparsity);
    if (kappa) out << " kappa=" << io::format_double(*kappa);
    out << "\n";
    return kOk;
}

int cmd_solve(const SolveFlags& f, std::ostream& out, spdlog::logger& log)
{
    const Method method = parse_method(f.method);
    const GeneratedProblem p = io::load_problem(f.problem);
    log.info("solving {}x{} problem from {} with {}", p.spec.m, p.spec.n, f.problem, method_name(method));

    RunOptions options;
    options.theta0 = f.theta0;
    options.reference = p.x_hat;
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run(method, p.sys, Potential(p.spec.lambda), f.seed, StoppingRule{f.epochs, f.tol}, options);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    io::write_file_atomic(f.out, io::trial_csv(r.log));
    json meta;
    meta["tool"] = "arbk";
    meta["version"] = kVersion;
    meta["command"] = "solve";
    meta["problem_file"] = f.problem;
    meta["problem"] = problem_meta(p, std::nullopt);
    meta["method"] = method_name(method);
    meta["seed"] = f.seed;
    meta["max_epochs"] = f.epochs;
    meta["tol"] = f.tol;
    meta["theta0"] = f.theta0 ? json(*f.theta0) : json(nullptr);
    io::write_file_atomic(f.out + ".meta.json", meta.dump(2) + "\n");

    const EpochRecord& last = r.log.records.back();
    out << fmt::format("method={} epochs={} iterations={} rel_residual={} rel_error={} bregman={} wall_seconds={:.3f}\n",
                       method_name(method), last.epoch, r.iterations, io::format_double(last.rel_residual),
                       io::format_double(last.rel_error), io::format_double(last.bregman), wall);
    return kOk;
}

int cmd_compare(const CompareFlags& f, std::ostream& out, spdlog::logger& log)
{
    const bool inline_spec = f.m || f.n || f.lambda;
    if (f.problem.empty() == !inline_spec) {
        throw InvalidArgument("pass either --problem or all of --m, --n, --lambda");
    }
    if (inline_spec && !(f.m && f.n && f.lambda)) throw InvalidArgument("--m, --n and --lambda go together");

    const std::vector<Method> methods = parse_methods(f.methods);
    const GeneratedProblem p =
        inline_spec ? generate(ProblemSpec{*f.m, *f.n, *f.lambda, f.seed}) : io::load_problem(f.problem);
    const auto kappa = kappa_for(p.sys.matrix());
    log.info("comparing {} on {}x{} (lambda={}, sparsity={}), {} trials x {} epochs", f.methods, p.spec.m, p.spec.n,
             p.spec.lambda, p.sparsity, f.trials, f.epochs);

    TrialsConfig config;
    config.methods = methods;
    config.trials = f.trials;
    config.stop = StoppingRule{f.epochs, f.tol};
    config.seed_base = f.stream_seed;
    config.theta0 = f.theta0;
    config.threads = f.threads;
    const TrialsResult result = run_trials(p, config);

    const fs::path dir(f.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

    const std::string csv = io::aggregate_csv(result.table);
    // Plots are rendered from the parsed CSV so `plot` reproduces them exactly.
    const AggregateTable table = io::parse_log_csv(csv);
    const std::string residuals = plot::render_svg(plot::series_for_metric(table, "rel_residual"), "rel_residual");
    const std::string errors = plot::render_svg(plot::series_for_metric(table, "rel_error"), "rel_error");

    json meta;
    meta["tool"] = "arbk";
    meta["version"] = kVersion;
    meta["command"] = "compare";
    meta["problem_file"] = f.problem.empty() ? json(nullptr) : json(f.problem);
    meta["problem"] = problem_meta(p, kappa);
    json names = json::array();
    for (Method m : methods) names.push_back(method_name(m));
    meta["methods"] = names;
    meta["trials"] = f.trials;
    meta["max_epochs"] = f.epochs;
    meta["tol"] = f.tol;
    meta["theta0"] = f.theta0 ? json(*f.theta0) : json(nullptr);
    json seeds = json::array();
    for (int t = 0; t < f.trials; ++t) seeds.push_back(f.stream_seed + static_cast<std::uint64_t>(t));
    meta["stream_seeds"] = seeds;

    io::write_file_atomic(dir / "aggregate.csv", csv);
    io::write_file_atomic(dir / "residuals.svg", residuals);
    io::write_file_atomic(dir / "errors.svg", errors);
    io::write_file_atomic(dir / "metadata.json", meta.dump(2) + "\n");

    for (Method m : methods) {
        const std::string name(method_name(m));
        double res = 0.0, err = 0.0;
        int epoch = 0;
        for (const auto& row : result.table) {
            if (row.method != name || row.epoch < epoch) continue;
            epoch = row.epoch;
            if (row.metric == "rel_residual") res = row.mean;
            if (row.metric == "rel_error") err = row.mean;
        }
        out << fmt::format("method={} epoch={} mean_rel_residual={} mean_rel_error={}\n", name, epoch,
                           io::format_double(res), io::format_double(err));
    }
    return kOk;
}

int cmd_plot(const PlotFlags& f, std::ostream& out, spdlog::logger& log)
{
    const auto& names = metric_names();
    if (std::find(names.begin(), names.end(), f.metric) == names.end()) {
        throw InvalidArgument("unknown metric '" + f.metric + "'");
    }
    const AggregateTable table = io::parse_log_csv(io::read_file(f.in), f.label);
    log.debug("read {} rows from {}", table.size(), f.in);
    io::write_file_atomic(f.out, plot::render_svg(plot::series_for_metric(table, f.metric), f.metric));
    out << "wrote " << f.out << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    auto log = make_logger(err);

    CLI::App app{"Randomized Bregman-Kaczmarz solvers and benchmarks", "arbk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    GenerateFlags gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic sparse-recovery problem as JSON");
    generate_cmd->add_option("--m", gen.m, "rows")->required()->check(CLI::PositiveNumber);
    generate_cmd->add_option("--n", gen.n, "columns")->required()->check(CLI::PositiveNumber);
    generate_cmd->add_option("--lambda", gen.lambda, "sparsity weight")->required()->check(CLI::NonNegativeNumber);
    generate_cmd->add_option("--seed", gen.seed, "generator seed")->required();
    generate_cmd->add_option("--out", gen.out, "output JSON path")->required();

    SolveFlags solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run one method on a problem file");
    solve_cmd->add_option("--problem", solve.problem, "problem JSON")->required();
    solve_cmd->add_option("--method", solve.method, "bk | arbk | acd-dual")
        ->required()
        ->check(CLI::IsMember({"bk", "arbk", "acd-dual"}));
    solve_cmd->add_option("--epochs", solve.epochs, "maximum epochs")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--seed", solve.seed, "row sampling seed")->required();
    solve_cmd->add_option("--tol", solve.tol, "relative residual tolerance")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--theta0", solve.theta0, "initial theta (default 1/m)")
        ->check(CLI::Range(0.0, 1.0) & CLI::PositiveNumber);
    solve_cmd->add_option("--out", solve.out, "output CSV path")->required();

    CompareFlags cmp;
    auto* compare_cmd = app.add_subcommand("compare", "Average several methods over independent trials");
    compare_cmd->add_option("--problem", cmp.problem, "problem JSON (or use --m/--n/--lambda)");
    compare_cmd->add_option("--m", cmp.m, "rows of a generated problem")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--n", cmp.n, "columns of a generated problem")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--lambda", cmp.lambda, "sparsity weight of a generated problem")
        ->check(CLI::NonNegativeNumber);
    compare_cmd->add_option("--seed", cmp.seed, "seed of a generated problem");
    compare_cmd->add_option("--methods", cmp.methods, "comma-separated subset of bk,arbk,acd-dual");
    compare_cmd->add_option("--trials", cmp.trials, "number of trials")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--epochs", cmp.epochs, "maximum epochs")->required()->check(CLI::PositiveNumber);
    compare_cmd->add_option("--tol", cmp.tol, "relative residual tolerance")->check(CLI::NonNegativeNumber);
    compare_cmd->add_option("--theta0", cmp.theta0, "initial theta (default 1/m)")
        ->check(CLI::Range(0.0, 1.0) & CLI::PositiveNumber);
    compare_cmd->add_option("--stream-seed", cmp.stream_seed, "row stream seed of the first trial");
    compare_cmd->add_option("--threads", cmp.threads, "worker threads (0 = all cores)");
    compare_cmd->add_option("--out-dir", cmp.out_dir, "output directory")->required();

    PlotFlags plt;
    auto* plot_cmd = app.add_subcommand("plot", "Render an SVG from a solve or compare CSV");
    plot_cmd->add_option("--in", plt.in, "input CSV")->required();
    plot_cmd->add_option("--out", plt.out, "output SVG")->required();
    plot_cmd->add_option("--metric", plt.metric, "rel_residual | rel_error | bregman");
    plot_cmd->add_option("--label", plt.label, "series name for a single-run CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (generate_cmd->parsed()) return cmd_generate(gen, out, *log);
        if (solve_cmd->parsed()) return cmd_solve(solve, out, *log);
        if (compare_cmd->parsed()) return cmd_compare(cmp, out, *log);
        return cmd_plot(plt, out, *log);
    } catch (const IoError& e) {
        log->error("{}", e.what());
        return kIoFailure;
    } catch (const DegenerateTarget& e) {
        log->error("{}", e.what());
        return kDegenerateTarget;
    } catch (const NonFinite& e) {
        log->error("{}", e.what());
        return kNonFinite;
    } catch (const Error& e) {
        log->error("{}", e.what());
        return kInvalidInput;
    } catch (const std::exception& e) {
        log->critical("{}", e.what());
        return kInternalError;
    }
}

} // namespace arbk::cli
