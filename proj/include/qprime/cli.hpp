#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qprime/forms.hpp"

namespace qprime::cli {

enum class OutputFormat { json, csv };

/// Exit codes: success, a negative domain verdict, usage or parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_not = 1;
inline constexpr int exit_usage = 2;

struct CommandConfig {
    std::string subcommand;
    std::string form;
    std::optional<long long> precision;
    std::optional<long long> bound;
    OutputFormat format = OutputFormat::json;
    EisensteinConvention convention = EisensteinConvention::paper;
    bool include_small = false;
    bool plot_data = false;
    std::string output_path;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> grid;
    int weight = 12;
    int a_max = 2;
    long long search_factor = 10;
    long long violation_cap = 20;
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qprime::cli
