#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curves.hpp"
#include "inversepoint/classify.hpp"
#include "inversepoint/errors.hpp"
#include "inversepoint/fixed_point.hpp"
#include "inversepoint/io.hpp"
#include "inversepoint/oracle.hpp"
#include "inversepoint/solver.hpp"

namespace inversepoint::cli {

namespace {

struct InputOptions {
    std::string path;
    io::MatrixFormat format = io::MatrixFormat::csv;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("--input", in.path, "Matrix file")->required();
    cmd.add_option("--format", in.format, "Input format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, io::MatrixFormat>{{"csv", io::MatrixFormat::csv},
                                                    {"json", io::MatrixFormat::json}}))
        ->default_str("csv");
}

Matrix load(const InputOptions& in) {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw Error("cannot open input file '" + in.path + "'");
    const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    return io::parse_matrix(text, in.format);
}

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("INVERSEPOINT_SEED");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw Error("INVERSEPOINT_SEED must be a non-negative integer");
    return v;
}

struct SolveOptions {
    InputOptions input;
    double tol = 1e-12;
    std::size_t max_iter = 10000;
    std::string method = "auto";
    io::ResultFormat output = io::ResultFormat::json;
    bool trace = false;
    bool oracle = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    const Matrix m = load(opt.input);

    SolverConfig config;
    config.tol = opt.tol;
    config.max_iter = opt.max_iter;
    config.method = parse_method(opt.method).value();
    config.record_trace = opt.trace;
    config.seed = seed_from_env();

    if (opt.oracle) {
        const auto x = oracle::oracle_solve(m, opt.tol);
        std::string s = "{\"x\":[";
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) s += ',';
            s += io::format_double(x[i]);
        }
        s += "],\"residual\":" + io::format_double(residual(m, x)) + ",\"method\":\"oracle\"}\n";
        out << s;
        return kSuccess;
    }

    try {
        const auto result = solve(m, config);
        out << io::emit_result(m, result, opt.output, opt.trace);
        return kSuccess;
    } catch (const ConvergenceError& e) {
        err << "not converged: " << e.what() << '\n';
        SolveResult partial{.x = PositiveVector(e.best_iterate()),
                            .residual = e.residual(),
                            .iterations = e.iterations(),
                            .method_used = parse_method(e.method()).value_or(config.method),
                            .classification = classify(m),
                            .converged = false,
                            .trace = {},
                            .boxes = {}};
        out << io::emit_result(m, partial, opt.output, false);
        return kNotConverged;
    } catch (const SingularJacobianError& e) {
        err << "not converged: " << e.what() << '\n';
        return kNotConverged;
    }
}

int cmd_check(const InputOptions& in, std::ostream& out) {
    const Matrix m = load(in);
    out << io::classification_json(classify(m)) << '\n';
    return kSuccess;
}

struct CurveOptions {
    InputOptions input;
    std::size_t samples = 200;
    double t_max = 1.5;
};

int cmd_curves(const CurveOptions& opt, std::ostream& out) {
    const Matrix m = load(opt.input);
    const auto points = sample_curves(m, opt.samples, opt.t_max);
    out << curves_csv(points, m.size());
    return kSuccess;
}

struct UniqueOptions {
    InputOptions input;
    std::size_t starts = 20;
    double tol = 1e-12;
    std::size_t max_iter = 10000;
};

int cmd_unique(const UniqueOptions& opt, std::ostream& out, std::ostream& err) {
    const Matrix m = load(opt.input);
    SolverConfig config;
    config.tol = opt.tol;
    config.max_iter = opt.max_iter;
    config.seed = seed_from_env();
    try {
        const auto report = multistart_uniqueness(m, config, opt.starts);
        std::string s = "{\"starts\":" + std::to_string(opt.starts);
        s += ",\"seed\":" + std::to_string(config.seed.value_or(kDefaultSeed));
        s += ",\"max_distance\":" + io::format_double(report.max_distance);
        s += ",\"x\":[";
        for (std::size_t i = 0; i < report.first.x.size(); ++i) {
            if (i) s += ',';
            s += io::format_double(report.first.x[i]);
        }
        s += "]}\n";
        out << s;
        return kSuccess;
    } catch (const ConvergenceError& e) {
        err << "not converged: " << e.what() << '\n';
        return kNotConverged;
    } catch (const SingularJacobianError& e) {
        err << "not converged: " << e.what() << '\n';
        return kNotConverged;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positive vectors mapped by a nonnegative matrix onto their element-wise inverse",
                 "inversepoint"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "Find x > 0 with M x = (1/x_1, ..., 1/x_n)");
    add_input_options(*solve_cmd, solve_opt.input);
    solve_cmd->add_option("--tol", solve_opt.tol, "Residual tolerance")
        ->check(CLI::PositiveNumber)
        ->default_str("1e-12");
    solve_cmd->add_option("--max-iter", solve_opt.max_iter, "Iteration budget")
        ->check(CLI::PositiveNumber)
        ->default_str("10000");
    solve_cmd->add_option("--method", solve_opt.method, "Solution strategy")
        ->check(CLI::IsMember({"auto", "bracket", "contraction", "newton", "fixed-point",
                               "fixed_point"}))
        ->default_str("auto");
    solve_cmd->add_option("--output", solve_opt.output, "Result format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, io::ResultFormat>{{"json", io::ResultFormat::json},
                                                    {"tsv", io::ResultFormat::tsv}}))
        ->default_str("json");
    solve_cmd->add_flag("--trace", solve_opt.trace, "Include the per-iteration residuals");
    solve_cmd->add_flag("--oracle", solve_opt.oracle)->group("");

    InputOptions check_opt;
    auto* check_cmd = app.add_subcommand("check", "Classify the matrix");
    add_input_options(*check_cmd, check_opt);

    CurveOptions curve_opt;
    auto* curves_cmd = app.add_subcommand("curves", "Sample the per-row solution curves (n = 2, 3)");
    add_input_options(*curves_cmd, curve_opt.input);
    curves_cmd->add_option("--samples", curve_opt.samples, "Samples per axis")
        ->check(CLI::PositiveNumber)
        ->default_str("200");
    curves_cmd->add_option("--t-max", curve_opt.t_max, "Upper end of the sampled range")
        ->check(CLI::PositiveNumber)
        ->default_str("1.5");

    UniqueOptions unique_opt;
    auto* unique_cmd =
        app.add_subcommand("unique", "Solve from many random starts and report their spread");
    add_input_options(*unique_cmd, unique_opt.input);
    unique_cmd->add_option("--starts", unique_opt.starts, "Number of random starts")
        ->check(CLI::PositiveNumber)
        ->default_str("20");
    unique_cmd->add_option("--tol", unique_opt.tol, "Residual tolerance")
        ->check(CLI::PositiveNumber)
        ->default_str("1e-12");
    unique_cmd->add_option("--max-iter", unique_opt.max_iter, "Iteration budget per start")
        ->check(CLI::PositiveNumber)
        ->default_str("10000");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_opt, out, err);
        if (*check_cmd) return cmd_check(check_opt, out);
        if (*curves_cmd) return cmd_curves(curve_opt, out);
        if (*unique_cmd) return cmd_unique(unique_opt, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace inversepoint::cli
