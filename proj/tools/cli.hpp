#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qswap/states.hpp"

namespace qswap::cli {

enum class ExitCode : int { success = 0, usage = 2, numeric_domain = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };
enum class Measure { concurrence, negativity };

struct RunConfig {
    double eps = 1e-9;
    std::uint64_t seed = 42;
    std::size_t dmax_dense = 8;
    OutputFormat format = OutputFormat::csv;
    std::size_t samples = 10000;
    double fstep = 0.01;

    void validate() const;
};

/// Reads `key = value` lines; `#` starts a comment. Keys: eps, seed, dmax_dense, format, samples, fstep.
[[nodiscard]] std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_config(const std::map<std::string, std::string>& entries, RunConfig& config);

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// CSV: header row, decimals with 6 fractional digits. JSON: array of row objects.
void render(const Table& table, OutputFormat format, std::ostream& out);

[[nodiscard]] std::vector<double> parse_decimal_list(const std::string& text);
[[nodiscard]] std::vector<std::size_t> parse_count_list(const std::string& text);

[[nodiscard]] Table sweep_dimension(std::size_t d_min, std::size_t d_max);
[[nodiscard]] Table isotropic_curves(Measure measure, const std::vector<std::size_t>& dims, double f_step);
[[nodiscard]] Table swap_report(const SchmidtVector& p, const SchmidtVector& p2, std::optional<WeylLabel> branch,
                                bool average);
[[nodiscard]] Table chain_report(std::size_t d, const std::vector<double>& links, const RunConfig& config);
[[nodiscard]] Table teleport_report(std::size_t d, double visibility, const std::optional<std::vector<double>>& input,
                                    const RunConfig& config);
[[nodiscard]] Table witness_report(std::size_t d, double visibility, const RunConfig& config);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qswap::cli
