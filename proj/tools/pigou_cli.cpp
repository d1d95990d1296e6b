// Command-line front end: solve, compare, sweep, plot, and validate
// subcommands over scenario files.
//
// Exit codes: 0 success, 1 usage/flag errors, 2 file-system and parse
// errors, 3 constraint violations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pigou/pigou.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitConstraint = 3;

struct IoFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure{"cannot open scenario file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoFailure{"cannot write output file: " + out_path};
    out << text;
}

pigou::WelfareMode parse_mode(const std::string& mode) {
    if (mode == "paper") return pigou::WelfareMode::paper;
    if (mode == "standard") return pigou::WelfareMode::standard;
    throw CLI::ValidationError("--mode must be paper or standard");
}

std::string solve_document(const pigou::ExternalityScenario& s,
                           pigou::Regime regime, pigou::WelfareMode mode) {
    const pigou::EquilibriumSet eq = pigou::equilibria(s, regime);
    const pigou::WelfareResult w = mode == pigou::WelfareMode::paper
                                       ? pigou::welfare_paper(s, regime)
                                       : pigou::welfare_standard(s, regime);
    std::string out = "{\n  \"scenario\": ";
    out += pigou::write_scenario(s, "  ");
    out += ",\n  \"regime\": \"";
    out += pigou::to_string(regime);
    out += "\",\n  \"mode\": \"";
    out += pigou::to_string(mode);
    out += "\",\n  \"x_private\": " + pigou::format_number(eq.x_private);
    out += ",\n  \"x_social\": " + pigou::format_number(eq.x_social);
    out += ",\n  \"y_private\": " + pigou::format_number(eq.y_private);
    out += ",\n  \"y_social\": " + pigou::format_number(eq.y_social);
    out += ",\n  \"tau\": " + pigou::format_number(w.tau);
    out += ",\n  \"alpha\": " + pigou::format_number(w.alpha);
    out += ",\n  \"evaluation_x\": " + pigou::format_number(w.evaluation_x);
    out += "\n}\n";
    return out;
}

std::string validate_document(const pigou::ExternalityScenario& s) {
    std::string out = "{\n  \"valid\": true,\n  \"scenario\": ";
    out += pigou::write_scenario(s, "  ");
    out += "\n}\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Externality market model: equilibria, Pigouvian taxes, "
                 "deadweight loss, and cooperative comparisons"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string mode = "paper";
    std::string out_path;
    std::string regime = "noncooperative";
    std::string param;
    double sweep_from = 0.0, sweep_to = 0.0;
    long sweep_steps = 0;
    std::uint64_t seed = 0;
    std::string svg_out, csv_out;
    long samples = 100;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", scenario_path, "scenario file path")
            ->required();
        cmd->add_option("--mode", mode, "welfare mode: paper or standard")
            ->capture_default_str();
        cmd->add_option("-o,--output", out_path,
                        "output file (default: standard output)");
    };

    CLI::App* solve = app.add_subcommand(
        "solve", "equilibria and welfare for one regime");
    add_common(solve);
    solve->add_option("--regime", regime,
                      "noncooperative or cooperative")
        ->capture_default_str();

    CLI::App* compare = app.add_subcommand(
        "compare", "paired non-cooperative/cooperative analysis");
    add_common(compare);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "sweep one parameter over a uniform grid");
    add_common(sweep);
    sweep->add_option("--param", param, "parameter to sweep: a, b, c, y1")
        ->required();
    sweep->add_option("--from", sweep_from, "grid start")->required();
    sweep->add_option("--to", sweep_to, "grid end")->required();
    sweep->add_option("--steps", sweep_steps, "grid size (>= 2)")->required();
    sweep->add_option("--seed", seed,
                      "random seed recorded for reproducibility bookkeeping")
        ->capture_default_str();

    CLI::App* plot = app.add_subcommand(
        "plot", "emit curve chart (SVG) and/or sampled points (CSV)");
    add_common(plot);
    plot->add_option("--svg-out", svg_out, "write the SVG chart here");
    plot->add_option("--csv-out", csv_out, "write the sampled points here");
    plot->add_option("--samples", samples, "CSV sample count (>= 2)")
        ->capture_default_str();

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "lint a scenario file without computing anything");
    validate_cmd->add_option("scenario", scenario_path, "scenario file path")
        ->required();
    validate_cmd->add_option("-o,--output", out_path,
                             "output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        const pigou::ExternalityScenario scenario =
            pigou::load_scenario(read_file(scenario_path));

        if (validate_cmd->parsed()) {
            write_output(validate_document(scenario), out_path);
            return kExitOk;
        }

        const pigou::WelfareMode welfare_mode = parse_mode(mode);

        if (solve->parsed()) {
            pigou::Regime r;
            if (regime == "noncooperative") {
                r = pigou::Regime::noncooperative;
            } else if (regime == "cooperative") {
                r = pigou::Regime::cooperative;
            } else {
                std::cerr << "error: --regime must be noncooperative or cooperative\n";
                return kExitUsage;
            }
            write_output(solve_document(scenario, r, welfare_mode), out_path);
            return kExitOk;
        }

        if (compare->parsed()) {
            write_output(pigou::write_results(pigou::compare(scenario, welfare_mode)),
                         out_path);
            return kExitOk;
        }

        if (sweep->parsed()) {
            if (!(sweep_from < sweep_to) || sweep_steps < 2) {
                std::cerr << "error: sweep requires --from < --to and --steps >= 2\n";
                return kExitUsage;
            }
            const pigou::SweepSeries series =
                pigou::sweep_grid(scenario, pigou::parse_parameter(param),
                                  sweep_from, sweep_to, sweep_steps, welfare_mode);
            write_output(pigou::write_sweep(series), out_path);
            return kExitOk;
        }

        if (plot->parsed()) {
            if (samples < 2) {
                std::cerr << "error: --samples must be >= 2\n";
                return kExitUsage;
            }
            const pigou::ComparisonReport report =
                pigou::compare(scenario, welfare_mode);
            if (!csv_out.empty()) {
                write_output(pigou::emit_points(report, samples), csv_out);
            }
            if (!svg_out.empty()) {
                write_output(pigou::emit_plot(report), svg_out);
            }
            if (csv_out.empty() && svg_out.empty()) {
                write_output(pigou::emit_plot(report), out_path);
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pigou::UnknownParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pigou::ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const pigou::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const pigou::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const pigou::CalibrationConflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
