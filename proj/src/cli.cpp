#include "supercat/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "supercat/dsums.hpp"
#include "supercat/errors.hpp"
#include "supercat/sums.hpp"
#include "supercat/super_catalan.hpp"
#include "supercat/verifier.hpp"

namespace supercat::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, human };

/// Parsed command line. Bounds stay empty unless given.
struct CliConfig {
    std::string subcommand;
    std::string kind;
    std::optional<Index> n, l, t, m, j;
    std::optional<Index> n_max, l_max, t_max, m_max;
    std::vector<std::string> ids;
    bool all = false;
    bool default_grid = false;
    std::string format;
    std::string verify_format = "human";
    std::string sweep_format = "json";
    std::string output;
    unsigned jobs = 1;
    bool no_timestamp = false;
};

Index need(const std::optional<Index>& v, const char* flag, const std::string& kind) {
    if (!v)
        throw UsageError("compute " + kind + " requires " + flag);
    return *v;
}

std::string compute(const CliConfig& c) {
    const std::string& k = c.kind;
    auto n = [&] { return need(c.n, "--n", k); };
    auto l = [&] { return need(c.l, "--l", k); };
    auto t = [&] { return need(c.t, "--t", k); };
    auto m = [&] { return need(c.m, "--m", k); };
    auto j = [&] { return need(c.j, "--j", k); };

    if (k == "super-catalan")
        return super_catalan_ratio(NLIndex(n(), l())).to_string();
    if (k == "catalan")
        return catalan(n()).to_string();
    if (k == "psi")
        return psi(n(), m(), l()).to_string();
    if (k == "psi-t")
        return psi_t(n(), t(), l()).to_string();
    if (k == "phi")
        return phi(PhiParams(n(), l(), t())).to_string();
    if (k == "p")
        return p_sum(n(), t(), l()).to_string();
    if (k == "r")
        return r_sum(n(), t(), l()).to_string();
    if (k == "r-prime")
        return r_prime_sum(n(), t(), l()).to_string();
    if (k == "r-dprime")
        return r_dprime_sum(n(), t(), l()).to_string();
    if (k == "t-sum")
        return t_sum(n(), t(), l()).to_string();
    if (k == "d-sum")
        return d_sum_direct(psi_summand(), DSumParams(n(), j(), t(), l())).to_string();
    if (k == "q")
        return q_sum(n(), j(), l()).to_string();
    throw UsageError("unknown compute kind '" + k + "'");
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

verify::Grid grid_from(const CliConfig& c) {
    const bool explicit_bounds = c.n_max || c.l_max || c.t_max || c.m_max;
    if (c.default_grid && explicit_bounds)
        throw UsageError("--default-grid cannot be combined with explicit bounds");
    verify::Grid g = verify::Grid::defaults();
    if (c.n_max) {
        g.n_max = *c.n_max;
        g.t_max = *c.n_max;
    }
    if (c.l_max)
        g.l_max = *c.l_max;
    if (c.t_max)
        g.t_max = *c.t_max;
    if (c.m_max)
        g.m_max = *c.m_max;
    return g;
}

std::vector<std::string> ids_from(const CliConfig& c) {
    if (c.all && !c.ids.empty())
        throw UsageError("--all cannot be combined with --id");
    if (c.all)
        return verify::all_identity_ids();
    if (c.ids.empty())
        throw UsageError(c.subcommand + " requires --id or --all");
    for (const auto& id : c.ids)
        if (verify::find_identity(id) == nullptr)
            throw UsageError("unknown identity id '" + id + "'");
    return c.ids;
}

Format format_from(const CliConfig& c) {
    if (c.format == "json")
        return Format::json;
    if (c.format == "csv")
        return Format::csv;
    if (c.format == "human") {
        if (c.subcommand == "sweep")
            throw UsageError("sweep writes machine-readable output only (json or csv)");
        return Format::human;
    }
    throw UsageError("unknown format '" + c.format + "'");
}

int run_report(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto ids = ids_from(c);
    const auto grid = grid_from(c);
    const auto format = format_from(c);

    const verify::Report report = verify::sweep(ids, grid, c.jobs);
    verify::SerializeOptions options;
    options.include_timing = !c.no_timestamp;
    if (options.include_timing)
        options.timestamp = utc_timestamp();

    std::string text;
    switch (format) {
    case Format::json:
        text = verify::to_json_lines(report, options);
        break;
    case Format::csv:
        text = verify::to_csv(report);
        break;
    case Format::human:
        text = verify::to_human(report, options);
        break;
    }

    if (c.output.empty() || c.output == "-") {
        out << text;
    } else {
        std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
        if (!file)
            throw UsageError("cannot open output file '" + c.output + "'");
        file << text;
        err << c.subcommand << ": " << report.summary.passed << " pass, " << report.summary.failed << " fail, "
            << report.summary.skipped << " skipped -> " << c.output << '\n';
    }
    return report.summary.failed == 0 ? kExitOk : kExitFailure;
}

void add_bounds(CLI::App* cmd, CliConfig& c) {
    cmd->add_option("--n-max", c.n_max, "Upper bound for n")->check(CLI::NonNegativeNumber);
    cmd->add_option("--l-max", c.l_max, "Upper bound for l")->check(CLI::NonNegativeNumber);
    cmd->add_option("--t-max", c.t_max, "Upper bound for t (defaults to --n-max)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m-max", c.m_max, "Upper bound for m")->check(CLI::NonNegativeNumber);
    cmd->add_option("--id", c.ids, "Identity id (repeatable)")->take_all();
    cmd->add_flag("--all", c.all, "Every registered identity");
    cmd->add_option("--output", c.output, "Write the report to PATH instead of standard output");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    cmd->add_flag("--no-timestamp", c.no_timestamp, "Omit wall-clock fields for byte-reproducible output");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Exact super Catalan numbers, alternating convolution sums and identity verification", "supercat"};
    app.require_subcommand(1);

    auto* compute_cmd = app.add_subcommand("compute", "Print one exact value");
    compute_cmd
        ->add_option("kind", c.kind,
                     "super-catalan | catalan | psi | psi-t | phi | p | r | r-prime | r-dprime | t-sum | d-sum | q")
        ->required();
    compute_cmd->add_option("--n", c.n)->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--l", c.l)->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--t", c.t)->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--m", c.m)->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--j", c.j, "Window index j for d-sum, s for q")->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Check identities over the default or given grid");
    add_bounds(verify_cmd, c);
    verify_cmd->add_flag("--default-grid", c.default_grid, "n<=10, l<=6, t<=n, m<=5");
    verify_cmd->add_option("--format", c.verify_format, "json | csv | human")->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "Machine-readable report over an explicit grid");
    add_bounds(sweep_cmd, c);
    sweep_cmd->add_option("--format", c.sweep_format, "json | csv")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (compute_cmd->parsed()) {
            c.subcommand = "compute";
            out << compute(c) << '\n';
            return kExitOk;
        }
        c.subcommand = verify_cmd->parsed() ? "verify" : "sweep";
        c.format = verify_cmd->parsed() ? c.verify_format : c.sweep_format;
        return run_report(c, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace supercat::cli
