#include "qcf/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcf/classical_oracle.hpp"
#include "qcf/errors.hpp"
#include "qcf/identify.hpp"
#include "qcf/model_io.hpp"
#include "qcf/quantum_oracle.hpp"
#include "qcf/reproduce.hpp"
#include "qcf/toy_theory.hpp"

namespace qcf {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string model_path;
    std::uint64_t seed = 0;
    std::string output;
    std::string level = "one-way";
    std::string target;
    std::size_t queries = 1000;
    std::string example;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

FunctionDistribution require_model(const Options& opt) {
    if (opt.model_path.empty()) throw UsageError("--model is required");
    return response_distribution(load_model(opt.model_path));
}

std::string output_format(const Options& opt, const std::string& fallback, bool csv_allowed) {
    const std::string format = opt.output.empty() ? fallback : opt.output;
    if (format != "json" && format != "csv") throw UsageError("--output must be json or csv");
    if (format == "csv" && !csv_allowed) throw UsageError("this subcommand only emits json");
    return format;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    output_format(opt, "json", false);
    if (opt.target.empty()) throw UsageError("--target is required");
    const auto pF = require_model(opt);
    const auto level = parse_constraint_level(opt.level);
    const auto query = CounterfactualQuery::parse(opt.target);
    const auto target = LinearTarget::from_query(pF.n_x(), pF.n_y(), query);
    const auto id = is_identifiable(target, build_constraints(pF, level));
    const nlohmann::json result = {{"lo", to_string(id.bounds.lo)},
                                   {"hi", to_string(id.bounds.hi)},
                                   {"identifiable", id.identifiable},
                                   {"witness_lo", weights_to_json(id.witness_lo)},
                                   {"witness_hi", weights_to_json(id.witness_hi)}};
    out << result.dump(2) << '\n';
    return kExitOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    const auto format = output_format(opt, "csv", true);
    const auto pF = require_model(opt);
    const auto log = run_round_robin(pF, opt.queries, opt.seed);
    if (format == "csv") {
        out << to_csv(log);
        return kExitOk;
    }
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        const auto& r = log.records[i];
        records.push_back({{"x_in", r.x_in}, {"x_out", r.x_out}, {"y_out", r.y_out}, {"query_index", i}});
    }
    out << nlohmann::json{{"seed", log.seed}, {"records", std::move(records)}}.dump(2) << '\n';
    return kExitOk;
}

int cmd_tomography(const Options& opt, std::ostream& out) {
    const auto format = output_format(opt, "csv", true);
    const auto pF = require_model(opt);
    const auto alpha = Amplitudes::uniform(pF.n_x());
    const auto rho = build_rho_xy(pF, alpha);
    if (format == "json") {
        out << to_json(rho).dump(2) << '\n';
        return kExitOk;
    }
    out << "x,x_prime,y,y_prime,value\n";
    for (const auto& row : tomography_sweep(rho, alpha)) {
        out << row.x << ',' << row.x_prime << ',' << row.y << ',' << row.y_prime << ',' << format_double(row.value)
            << '\n';
    }
    return kExitOk;
}

int cmd_toy_check(const Options& opt, std::ostream& out) {
    output_format(opt, "json", false);
    const auto report = toy::verify_binary_equivalence();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : report.comparisons) {
        rows.push_back({{"scenario", toy::to_string(c.scenario)},
                        {"pF", weights_to_json(c.pF)},
                        {"quantum", qcf::to_string(c.quantum)},
                        {"toy", qcf::to_string(c.toy)},
                        {"equal", c.equal}});
    }
    out << rows.dump(2) << '\n';
    return report.all_equal ? kExitOk : kExitClaimFailed;
}

int cmd_reproduce(const Options& opt, std::ostream& out) {
    output_format(opt, "json", false);
    const auto& names = reproduction_names();
    if (std::find(names.begin(), names.end(), opt.example) == names.end()) {
        throw UsageError("unknown example '" + opt.example + "'");
    }
    const auto report = reproduce(opt.example);
    out << to_json(report).dump(2) << '\n';
    return report.passed() ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Counterfactual identification with classical and quantum oracles", "qcf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--model", opt.model_path, "Model JSON file");
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--output", opt.output, "Output format: json or csv");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "Reproduce a reference result");
    reproduce_cmd->add_option("example", opt.example,
                              "binary | appendix_b | model_ab | appendix_e | appendix_e_general | toy")
        ->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Exact bounds on a joint counterfactual");
    auto* identify_cmd = app.add_subcommand("identify", "Decide identifiability of a joint counterfactual");
    for (auto* cmd : {bounds_cmd, identify_cmd}) {
        cmd->add_option("--level", opt.level, "one-way or two-way")->default_str("one-way");
        cmd->add_option("--target", opt.target, "Target event as x:y,x':y'")->required();
    }

    auto* simulate_cmd = app.add_subcommand("simulate", "Sample the classical oracle");
    simulate_cmd->add_option("--queries", opt.queries, "Number of queries (inputs cycle 0..n_x-1)");

    auto* tomography_cmd = app.add_subcommand("tomography", "Two-way counterfactuals from the coherent-query state");
    auto* toy_cmd = app.add_subcommand("toy-check", "Compare toy-theory and quantum statistics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (reproduce_cmd->parsed()) return cmd_reproduce(opt, out);
        if (bounds_cmd->parsed() || identify_cmd->parsed()) return cmd_bounds(opt, out);
        if (simulate_cmd->parsed()) return cmd_simulate(opt, out);
        if (tomography_cmd->parsed()) return cmd_tomography(opt, out);
        if (toy_cmd->parsed()) return cmd_toy_check(opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qcf
