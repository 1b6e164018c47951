#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qswap/error.hpp"
#include "qswap/measures.hpp"
#include "qswap/separability.hpp"
#include "qswap/swap.hpp"
#include "qswap/teleport.hpp"

namespace qswap::cli {

namespace {

constexpr std::size_t kMaxSweepDimension = 50;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string one_line(std::string s) {
    for (auto& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return trim(s);
}

double parse_double(const std::string& token, const std::string& context) {
    const std::string t = trim(token);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed number '" + t + "' in " + context);
    }
    if (used != t.size() || !std::isfinite(value)) {
        throw UsageError("malformed number '" + t + "' in " + context);
    }
    return value;
}

std::string format_decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw UsageError("unknown output format '" + name + "' (expected csv or json)");
}

// F values 0, step, 2 step, ... ending exactly at 1.
std::vector<double> fidelity_grid(double step) {
    std::vector<double> grid;
    const double count = std::round(1.0 / step);
    if (std::abs(count * step - 1.0) < 1e-9) {
        const auto n = static_cast<std::size_t>(count);
        for (std::size_t i = 0; i <= n; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(n));
        return grid;
    }
    for (std::size_t i = 0; static_cast<double>(i) * step < 1.0 - 1e-12; ++i) grid.push_back(static_cast<double>(i) * step);
    grid.push_back(1.0);
    return grid;
}

void require_dense(std::size_t d, const RunConfig& config) {
    require_dimension(d);
    if (d > config.dmax_dense) {
        throw CapacityError("d = " + std::to_string(d) + " exceeds dmax_dense = " + std::to_string(config.dmax_dense));
    }
}

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

void RunConfig::validate() const {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
    if (dmax_dense < 2 || dmax_dense > 8) throw DomainError("dmax_dense must lie in [2, 8]");
    if (samples == 0) throw DomainError("samples must be >= 1");
    if (!(fstep > 0.0 && fstep <= 0.1)) throw DomainError("fstep must lie in (0, 0.1]");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

void apply_config(const std::map<std::string, std::string>& entries, RunConfig& config) {
    for (const auto& [key, value] : entries) {
        const std::string context = "config key '" + key + "'";
        if (key == "eps") {
            config.eps = parse_double(value, context);
        } else if (key == "seed") {
            try {
                std::size_t used = 0;
                config.seed = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw UsageError("malformed seed '" + value + "' in " + context);
            }
        } else if (key == "dmax_dense") {
            config.dmax_dense = parse_count_list(value).at(0);
        } else if (key == "samples") {
            config.samples = parse_count_list(value).at(0);
        } else if (key == "fstep") {
            config.fstep = parse_double(value, context);
        } else if (key == "format") {
            config.format = parse_format(value);
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
}

void render(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                std::visit(
                    [&](const auto& v) {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, double>) {
                            out << format_decimal(v);
                        } else if constexpr (std::is_same_v<T, bool>) {
                            out << (v ? "true" : "false");
                        } else {
                            out << v;
                        }
                    },
                    row[c]);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::visit([&](const auto& v) { obj[table.columns[c]] = v; }, row[c]);
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

std::vector<double> parse_decimal_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(parse_double(token, "list '" + text + "'"));
    if (out.empty() || (!text.empty() && text.back() == ',')) throw UsageError("malformed list '" + text + "'");
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double x : parse_decimal_list(text)) {
        if (x < 0.0 || x != std::floor(x)) throw UsageError("expected non-negative integers in '" + text + "'");
        out.push_back(static_cast<std::size_t>(x));
    }
    return out;
}

Table sweep_dimension(std::size_t d_min, std::size_t d_max) {
    if (d_min < 2 || d_min > d_max || d_max > kMaxSweepDimension) {
        throw DomainError("dimension range must satisfy 2 <= dmin <= dmax <= " + std::to_string(kMaxSweepDimension));
    }
    Table table{{"d", "avg_iconcurrence", "avg_negativity"}, {}};
    for (std::size_t d = d_min; d <= d_max; ++d) {
        const auto p = SchmidtVector::uniform(d);
        table.rows.push_back({as_int(d), avg_iconcurrence(p, p), avg_negativity(p, p)});
    }
    return table;
}

Table isotropic_curves(Measure measure, const std::vector<std::size_t>& dims, double f_step) {
    if (!(f_step > 0.0 && f_step <= 0.1)) throw DomainError("fstep must lie in (0, 0.1]");
    if (dims.empty()) throw UsageError("at least one dimension is required");
    std::vector<std::size_t> sorted = dims;
    std::sort(sorted.begin(), sorted.end());
    const auto grid = fidelity_grid(f_step);
    Table table{{"d", "F", measure == Measure::concurrence ? "iconcurrence" : "negativity"}, {}};
    for (std::size_t d : sorted) {
        require_dimension(d);
        for (double f : grid) {
            const FidelityValue fv(f);
            const double value =
                measure == Measure::concurrence ? iconcurrence_isotropic(d, fv) : negativity_isotropic(d, fv);
            table.rows.push_back({as_int(d), f, value});
        }
    }
    return table;
}

Table swap_report(const SchmidtVector& p, const SchmidtVector& p2, std::optional<WeylLabel> branch, bool average) {
    if (p.dimension() != p2.dimension()) {
        throw UsageError("Schmidt vectors have different lengths (" + std::to_string(p.dimension()) + " vs " +
                         std::to_string(p2.dimension()) + ")");
    }
    if (average) {
        return Table{{"avg_iconcurrence", "avg_negativity"}, {{avg_iconcurrence(p, p2), avg_negativity(p, p2)}}};
    }
    Table table{{"u", "v", "probability", "iconcurrence", "negativity"}, {}};
    for (const auto& m : branch_measures(p, p2)) {
        if (branch && !(m.label == *branch)) continue;
        table.rows.push_back({as_int(m.label.u), as_int(m.label.v), m.probability, m.iconcurrence, m.negativity});
    }
    if (branch && table.rows.empty()) require_label(p.dimension(), *branch);
    return table;
}

Table chain_report(std::size_t d, const std::vector<double>& links, const RunConfig& config) {
    require_dense(d, config);
    const auto report = repeater_chain(d, links, config.samples, config.seed);
    return Table{{"d", "link_count", "end_visibility", "end_fidelity", "avg_teleport_fidelity", "standard_error"},
                 {{as_int(d), as_int(report.link_count), report.end_visibility, report.end_fidelity,
                   report.teleport.mean, report.teleport.standard_error}}};
}

Table teleport_report(std::size_t d, double visibility, const std::optional<std::vector<double>>& input,
                      const RunConfig& config) {
    require_dense(d, config);
    const IsotropicState link(d, visibility);
    const auto channel = isotropic_density(link);
    if (input) {
        if (input->size() != d) {
            throw UsageError("input has " + std::to_string(input->size()) + " amplitudes, expected " + std::to_string(d));
        }
        double norm = 0.0;
        for (double a : *input) norm += a * a;
        if (norm <= 0.0) throw DomainError("input state has zero norm");
        std::vector<linalg::Complex> phi;
        for (double a : *input) phi.emplace_back(a / std::sqrt(norm), 0.0);
        Table table{{"u", "v", "probability", "fidelity"}, {}};
        for (const auto& r : teleport_all(channel, phi)) {
            table.rows.push_back({as_int(r.outcome.u), as_int(r.outcome.v), r.probability, r.fidelity_to_input});
        }
        return table;
    }
    const double f_ch = isotropic_fidelity(link).value();
    const auto est = teleport_average_fidelity(channel, config.samples, config.seed);
    const auto dd = static_cast<double>(d);
    return Table{{"d", "visibility", "channel_fidelity", "avg_fidelity", "standard_error", "predicted", "samples"},
                 {{as_int(d), link.visibility(), f_ch, est.mean, est.standard_error, (f_ch * dd + 1.0) / (dd + 1.0),
                   as_int(est.samples)}}};
}

Table witness_report(std::size_t d, double visibility, const RunConfig& config) {
    require_dense(d, config);
    const IsotropicState state(d, visibility);
    const auto verdict = realignment_witness(isotropic_density(state), config.eps);
    const double negativity = negativity_isotropic(d, isotropic_fidelity(state));
    return Table{{"d", "visibility", "excess", "negativity", "verdict"},
                 {{as_int(d), state.visibility(), verdict.excess, negativity,
                   std::string(verdict.entangled ? "entangled" : "separable")}}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qudit entanglement swapping, teleportation and entanglement measures", "qswap"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "csv";
    std::string config_path;
    std::uint64_t seed = 0;
    double eps = 0.0;
    auto* format_opt = app.add_option("--format", format_name, "Output format: csv or json");
    app.add_option("--config", config_path, "key=value configuration file; flags take precedence");
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed");
    auto* eps_opt = app.add_option("--eps", eps, "Witness tolerance");

    std::size_t d = 0;
    std::size_t d_min = 3;
    std::size_t d_max = 20;
    std::string measure_name = "concurrence";
    std::string d_list = "2,3,4,5";
    double fstep = 0.0;
    std::string links;
    std::size_t samples = 0;
    double visibility = 0.0;
    std::string input_text;
    std::string p_text;
    std::string p2_text;
    std::vector<std::size_t> branch;
    bool average = false;

    auto* sweep = app.add_subcommand("sweep-dimension", "Average swapped measures for maximally entangled inputs");
    sweep->add_option("--dmin", d_min, "Smallest dimension");
    sweep->add_option("--dmax", d_max, "Largest dimension");

    auto* curves = app.add_subcommand("isotropic-curves", "Isotropic I-concurrence or negativity against fidelity");
    curves->add_option("--measure", measure_name, "concurrence or negativity")
        ->check(CLI::IsMember({"concurrence", "negativity"}));
    curves->add_option("--d", d_list, "Comma-separated dimensions");
    auto* fstep_opt = curves->add_option("--fstep", fstep, "Fidelity grid step");

    auto* swap_cmd = app.add_subcommand("swap", "Swap two Schmidt-form pairs");
    swap_cmd->add_option("p", p_text, "Schmidt probabilities of the AB pair")->required();
    swap_cmd->add_option("p2", p2_text, "Schmidt probabilities of the CD pair")->required();
    auto* branch_opt = swap_cmd->add_option("--branch", branch, "Single branch: u v")->expected(2);
    auto* average_opt = swap_cmd->add_flag("--average", average, "Report probability-weighted averages");
    branch_opt->excludes(average_opt);

    auto* chain = app.add_subcommand("chain", "Repeater chain of isotropic links");
    chain->add_option("--d", d, "Qudit dimension")->required();
    chain->add_option("--links", links, "Comma-separated link visibilities")->required();
    auto* chain_samples = chain->add_option("--samples", samples, "Monte Carlo samples");

    auto* teleport = app.add_subcommand("teleport", "Teleport through an isotropic channel");
    teleport->add_option("--d", d, "Qudit dimension")->required();
    teleport->add_option("--visibility", visibility, "Channel visibility")->required();
    auto* teleport_samples = teleport->add_option("--samples", samples, "Monte Carlo samples");
    auto* input_opt = teleport->add_option("--input", input_text, "Real input amplitudes (normalized on read)");

    auto* witness = app.add_subcommand("witness", "Realignment witness on an isotropic state");
    witness->add_option("--d", d, "Qudit dimension")->required();
    witness->add_option("--visibility", visibility, "Visibility")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "qswap: error: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::usage);
    }

    try {
        RunConfig config;
        if (!config_path.empty()) apply_config(read_config_file(config_path), config);
        if (format_opt->count()) config.format = parse_format(format_name);
        if (seed_opt->count()) config.seed = seed;
        if (eps_opt->count()) config.eps = eps;
        if (fstep_opt->count()) config.fstep = fstep;
        if (chain_samples->count() || teleport_samples->count()) config.samples = samples;
        config.validate();

        Table table;
        if (sweep->parsed()) {
            table = sweep_dimension(d_min, d_max);
        } else if (curves->parsed()) {
            const auto measure = measure_name == "negativity" ? Measure::negativity : Measure::concurrence;
            table = isotropic_curves(measure, parse_count_list(d_list), config.fstep);
        } else if (swap_cmd->parsed()) {
            const SchmidtVector p(parse_decimal_list(p_text));
            const SchmidtVector p2(parse_decimal_list(p2_text));
            std::optional<WeylLabel> label;
            if (branch_opt->count()) label = WeylLabel{branch.at(0), branch.at(1)};
            table = swap_report(p, p2, label, average);
        } else if (chain->parsed()) {
            table = chain_report(d, parse_decimal_list(links), config);
        } else if (teleport->parsed()) {
            std::optional<std::vector<double>> input;
            if (input_opt->count()) input = parse_decimal_list(input_text);
            table = teleport_report(d, visibility, input, config);
        } else if (witness->parsed()) {
            table = witness_report(d, visibility, config);
        }
        render(table, config.format, out);
        return static_cast<int>(ExitCode::success);
    } catch (const UsageError& e) {
        err << "qswap: error: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const DimensionError& e) {
        err << "qswap: error: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const DomainError& e) {
        err << "qswap: error: " << one_line(e.what()) << '\n';
        return static_cast<int>(ExitCode::numeric_domain);
    }
}

}  // namespace qswap::cli
