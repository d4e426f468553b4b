#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "novpot/fixtures.hpp"
#include "novpot/pipeline.hpp"

namespace {

using novpot::DocumentConfig;
using novpot::PipelineOptions;
using novpot::Report;

struct CommonArgs {
    std::string config_path;
    std::string at;
    std::string precision = "8";
    bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
    auto* opt = cmd->add_option("config", args.config_path, "configuration file (JSON)");
    if (config_required)
        opt->required();
    cmd->add_option("--at", args.at, "fiber point, comma-separated rationals (e.g. 2/3,2/3)");
    cmd->add_option("--precision", args.precision,
                    "truncation precision for divisions in the Novikov field");
    cmd->add_flag("--json", args.json, "emit the machine-readable report only");
}

PipelineOptions make_options(const CommonArgs& args) {
    PipelineOptions opt;
    if (!args.at.empty())
        opt.at = novpot::parse_fiber_point(args.at);
    opt.precision = novpot::Rational::parse(args.precision);
    return opt;
}

void emit(const Report& rep, bool json) {
    if (json)
        std::cout << rep.data.dump(2) << "\n";
    else
        std::cout << rep.text();
}

int run(int argc, char** argv) {
    CLI::App app{"exact Novikov-field computations for semi-toric potential functions"};
    app.require_subcommand(1);

    CommonArgs check_args, pot_args, solve_args, classes_args, qh_args, report_args, verify_args;

    auto* cmd_check = app.add_subcommand("check-polytope",
                                         "facets, functionals, and the balanced fiber");
    add_common(cmd_check, check_args, true);
    auto* cmd_pot = app.add_subcommand("potential", "assemble the potential function");
    add_common(cmd_pot, pot_args, true);
    auto* cmd_solve = app.add_subcommand("solve", "critical system and its exact solutions");
    add_common(cmd_solve, solve_args, true);
    auto* cmd_classes = app.add_subcommand("classes",
                                           "lattice tables, gluing, and index arithmetic");
    add_common(cmd_classes, classes_args, true);
    auto* cmd_qh = app.add_subcommand("qh", "quantum cohomology: semisimplicity, idempotents");
    add_common(cmd_qh, qh_args, true);
    auto* cmd_report = app.add_subcommand("report", "full pipeline with the final verdict");
    add_common(cmd_report, report_args, true);
    auto* cmd_verify = app.add_subcommand(
        "verify-paper", "run the bundled semi-toric document against its expected results");
    add_common(cmd_verify, verify_args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_check->parsed()) {
            emit(novpot::polytope_report(novpot::load_config(check_args.config_path)),
                 check_args.json);
        } else if (cmd_pot->parsed()) {
            emit(novpot::potential_report(novpot::load_config(pot_args.config_path),
                                          make_options(pot_args)),
                 pot_args.json);
        } else if (cmd_solve->parsed()) {
            emit(novpot::solve_command(novpot::load_config(solve_args.config_path),
                                       make_options(solve_args)),
                 solve_args.json);
        } else if (cmd_classes->parsed()) {
            emit(novpot::classes_report(novpot::load_config(classes_args.config_path)),
                 classes_args.json);
        } else if (cmd_qh->parsed()) {
            emit(novpot::qh_command(novpot::load_config(qh_args.config_path),
                                    make_options(qh_args)),
                 qh_args.json);
        } else if (cmd_report->parsed()) {
            emit(novpot::full_report(novpot::load_config(report_args.config_path),
                                     make_options(report_args)),
                 report_args.json);
        } else if (cmd_verify->parsed()) {
            DocumentConfig cfg =
                verify_args.config_path.empty()
                    ? novpot::parse_config(novpot::fixture_cp2_semitoric(), "<bundled>")
                    : novpot::load_config(verify_args.config_path);
            auto items = novpot::builtin_verification(cfg, make_options(verify_args).precision);
            Report rep = novpot::checklist_report(items);
            emit(rep, verify_args.json);
            for (const auto& item : items)
                if (!item.pass)
                    return 1;
            return 0;
        }
    } catch (const novpot::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const novpot::precision_error& e) {
        std::cerr << "precision error: " << e.what()
                  << " (suggested precision: " << e.suggested_precision << ")\n";
        return 4;
    } catch (const novpot::needs_field_extension_error& e) {
        std::cerr << "field extension needed: " << e.what();
        if (e.suggested_order)
            std::cerr << " (suggested cyclotomic order: " << e.suggested_order << ")";
        std::cerr << "\n";
        return 3;
    } catch (const novpot::math_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
