#include "qprime/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qprime/decompose.hpp"
#include "qprime/formspec.hpp"
#include "qprime/macmahon.hpp"
#include "qprime/primedetect.hpp"
#include "qprime/serialize.hpp"
#include "qprime/signstats.hpp"

namespace qprime::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t positive(const std::optional<long long>& value, long long fallback, const char* flag)
{
    const long long v = value.value_or(fallback);
    if (v <= 0) {
        throw UsageError(std::string(flag) + " must be positive");
    }
    return static_cast<std::size_t>(v);
}

void require_json(const CommandConfig& config)
{
    if (config.format != OutputFormat::json) {
        throw UsageError("'" + config.subcommand + "' only supports --format json");
    }
}

int cmd_expand(const CommandConfig& config, std::ostream& out)
{
    const std::size_t n = positive(config.precision, 20, "--precision");
    const QExpansion e = quasiform_expand(load_form(config.form, config.convention), n, config.convention);
    if (config.format == OutputFormat::csv) {
        out << "n,coefficient\n";
        for (std::size_t i = 0; i <= e.precision(); ++i) {
            out << i << ',' << to_string(e[i]) << '\n';
        }
    } else {
        out << to_json(e).dump() << '\n';
    }
    return exit_ok;
}

int cmd_decompose(const CommandConfig& config, std::ostream& out)
{
    require_json(config);
    const std::size_t n = positive(config.precision, default_certificate_precision, "--precision");
    const auto result = split_eis_cusp(load_form(config.form, config.convention), n, config.convention);
    out << to_json(result).dump() << '\n';
    return exit_ok;
}

int cmd_decide(const CommandConfig& config, std::ostream& out)
{
    require_json(config);
    const std::size_t scan = positive(config.bound, 100, "--bound");
    if (scan < 2) {
        throw UsageError("--bound must be at least 2");
    }
    const QuasiForm f = load_form(config.form, config.convention);
    const auto parts = split_eis_cusp(f, default_certificate_precision, config.convention);
    OmegaTildeOptions options;
    options.conv = config.convention;
    options.search_factor = static_cast<std::size_t>(config.search_factor);
    const auto verdict = omega_tilde_decide(f, options);
    const auto report
        = omega_scan(f, scan, config.include_small, config.convention, static_cast<std::size_t>(config.violation_cap));
    Json j {{"form", to_json(f)}, {"split", to_json(parts)}, {"omega_tilde", to_json(verdict)},
        {"omega_scan", to_json(report)}};
    out << j.dump() << '\n';
    return verdict.in_omega_tilde && report.passed() ? exit_ok : exit_verdict_not;
}

int cmd_finite_check(const CommandConfig& config, std::ostream& out)
{
    require_json(config);
    const QuasiForm f = load_form(config.form, config.convention);
    if (f.has_cusp()) {
        throw UsageError("finite-check needs an Eisenstein combination (form has cusp terms)");
    }
    std::vector<std::uint64_t> primes = config.primes;
    if (primes.empty()) {
        primes = first_primes(static_cast<std::size_t>(prime_polynomial(f).degree_bound) + 1);
    }
    const auto verdict = finite_check(f, primes);
    Json j {{"finite_check", to_json(verdict)}, {"prime_polynomial", to_json(prime_polynomial(f))},
        {"primes", primes}};
    out << j.dump() << '\n';
    return verdict.kind == FiniteCheckVerdict::Kind::vanishes_at_all_primes ? exit_ok : exit_verdict_not;
}

int cmd_macmahon(const CommandConfig& config, std::ostream& out)
{
    const std::size_t n = positive(config.bound, 100, "--bound");
    if (config.a_max < 1) {
        throw UsageError("--amax must be positive");
    }
    const auto table = macmahon_table(config.a_max, n);
    if (config.format == OutputFormat::csv) {
        write_csv(out, table);
    } else {
        out << to_json(table).dump() << '\n';
    }
    return exit_ok;
}

int cmd_signstats(const CommandConfig& config, std::ostream& out)
{
    const std::size_t x = positive(config.bound, 1000, "--bound");
    if (x < 2) {
        throw UsageError("--bound must be at least 2");
    }
    std::vector<std::uint64_t> grid = config.grid;
    if (grid.empty()) {
        for (std::uint64_t g = 10; g < x; g *= 10) {
            grid.push_back(g);
        }
        grid.push_back(x);
    }
    for (const auto g : grid) {
        if (g > x) {
            throw UsageError("grid point " + std::to_string(g) + " exceeds --bound");
        }
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw UsageError("--grid must be ascending");
    }
    const QuasiForm f = load_form(config.form, config.convention);
    const auto report = partial_sum_report(f, x, grid, config.convention);
    if (config.plot_data) {
        out << "x,normalized_sq\n";
        for (const auto& [at, v] : report.normalized_sq) {
            out << at << ',' << v << '\n';
        }
        return exit_ok;
    }
    if (config.format == OutputFormat::csv) {
        out << "x,partial_sum,partial_sum_abs,partial_sum_sq\n";
        for (std::size_t i = 0; i < report.partial_sum.size(); ++i) {
            out << report.partial_sum[i].first << ',' << to_string(report.partial_sum[i].second) << ','
                << to_string(report.partial_sum_abs[i].second) << ',' << to_string(report.partial_sum_sq[i].second)
                << '\n';
        }
        return exit_ok;
    }
    Json j = to_json(report);
    j["prime_coefficients"] = Json::array();
    if (x <= 100) {
        for (const auto& pc : prime_coefficients(f, x, config.convention)) {
            j["prime_coefficients"].push_back(Json::array({pc.p, to_string(pc.value)}));
        }
    }
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_deligne(const CommandConfig& config, std::ostream& out)
{
    require_json(config);
    const std::size_t x = positive(config.bound, 1000, "--bound");
    if (!has_unique_eigenform(config.weight)) {
        throw UsageError("--weight must be one of 12, 16, 18, 20, 22, 26");
    }
    const auto result = deligne_check(config.weight, x);
    Json j = to_json(result);
    j["weight"] = config.weight;
    j["bound"] = x;
    out << j.dump() << '\n';
    return result.passed ? exit_ok : exit_verdict_not;
}

int dispatch(const CommandConfig& config, std::ostream& out)
{
    static const std::map<std::string, int (*)(const CommandConfig&, std::ostream&)> commands {
        {"expand", cmd_expand},
        {"decompose", cmd_decompose},
        {"decide", cmd_decide},
        {"finite-check", cmd_finite_check},
        {"macmahon", cmd_macmahon},
        {"signstats", cmd_signstats},
        {"deligne", cmd_deligne},
    };
    return commands.at(config.subcommand)(config, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app {"Exact quasimodular forms of level one: expansions, splitting, prime detection", "qprime"};
    app.require_subcommand(1);

    CommandConfig config;
    std::string format = "json";
    std::string sign = "paper";
    app.add_option("--precision", config.precision, "Expansion precision N");
    app.add_option("--bound", config.bound, "Scan bound or prime bound X");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--eisenstein-constant-sign", sign, "Constant term of G_k: +B_k/2k (paper) or -B_k/2k")
        ->check(CLI::IsMember({"paper", "classical"}));
    app.add_flag("--include-small", config.include_small, "Include n = 0, 1 in Omega scans");
    app.add_option("--output", config.output_path, "Write output to a file");

    auto add_form = [&config](CLI::App* sub) {
        sub->add_option("form", config.form, "Form spec or QuasiForm JSON path")->required();
        sub->fallthrough();
    };
    add_form(app.add_subcommand("expand", "Exact q-expansion of a form"));
    add_form(app.add_subcommand("decompose", "Split into Eisenstein and cusp parts"));
    auto* decide = app.add_subcommand("decide", "Decide prime vanishing and scan the Omega conditions");
    add_form(decide);
    decide->add_option("--search-factor", config.search_factor, "Witness search covers factor*(d+1) primes")
        ->check(CLI::PositiveNumber);
    decide->add_option("--max-violations", config.violation_cap, "Violations listed in the scan report")
        ->check(CLI::NonNegativeNumber);
    auto* finite = app.add_subcommand("finite-check", "Vandermonde finite check for Eisenstein combinations");
    add_form(finite);
    finite->add_option("--primes", config.primes, "Primes to test (default: the first d+1)")->delimiter(',');
    auto* macmahon = app.add_subcommand("macmahon", "MacMahon M_a(n) table with the prime identity");
    macmahon->add_option("--amax", config.a_max, "Largest number of distinct parts");
    macmahon->fallthrough();
    auto* signstats = app.add_subcommand("signstats", "Sign changes and partial sums over primes");
    add_form(signstats);
    signstats->add_option("--grid", config.grid, "Ascending x values for partial sums")->delimiter(',');
    signstats->add_flag("--plot-data", config.plot_data, "Emit (x, normalized) pairs only");
    auto* deligne = app.add_subcommand("deligne", "Deligne bound for a one-dimensional cusp space");
    deligne->add_option("--weight", config.weight, "Weight m")->required();
    deligne->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    config.convention = sign == "classical" ? EisensteinConvention::classical : EisensteinConvention::paper;

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        code = dispatch(config, buffer);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (config.output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(config.output_path);
        if (!file) {
            err << "error: cannot write " << config.output_path << '\n';
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace qprime::cli
