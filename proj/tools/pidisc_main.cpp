// pidisc: exact computations with PI algebras presented over polynomial centers --
// discriminant ideals, per-point fiber analysis, Azumaya loci, and a verification
// harness for the structural theorems relating them.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pidisc/commands.hpp"

using namespace pidisc;

namespace {

void emit(const CommandResult& r, const std::string& out_path) {
    if (!r.text.empty()) std::cout << r.text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw parse_error("cannot open output file '" + out_path + "'");
        out << r.json.dump(2) << "\n";
    } else if (!r.json.is_null()) {
        std::cout << r.json.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discriminant ideals and Azumaya loci of PI algebras"};
    app.require_subcommand(1);

    std::string config_path, point, out_path, variant = "md", trace, compare = "monomial";
    std::vector<std::string> target;
    unsigned level = 0;
    std::uint64_t seed_cli = 0, max_dets = 0;
    bool force_rational = false;
    std::string suite = "all";

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file")->required();
        cmd->add_option("--seed", seed_cli, "override the configuration seed");
        cmd->add_option("--out", out_path, "write the JSON report to this path");
        cmd->add_option("--max-dets", max_dets, "determinant budget override");
        cmd->add_flag("--force-rational-dets", force_rational,
                      "lift the size guard on symbolic determinants in rational mode");
    };

    CLI::App* describe = app.add_subcommand("describe", "print the algebra family summary");
    add_config(describe);

    CLI::App* disc = app.add_subcommand("disc", "discriminant ideal generators");
    add_config(disc);
    disc->add_option("--level", level, "determinant size (the level of the ideal)")->required();
    disc->add_option("--variant", variant, "d (restricted symmetric) or md (default)");
    disc->add_option("--trace", trace, "reg | std | red (default per family)");
    disc->add_option("--target", target, "comparison ideal generators (polynomial syntax)");
    disc->add_option("--compare", compare, "target comparison: monomial or linear:<bound>");

    CLI::App* fiber = app.add_subcommand("fiber", "analyze the fiber at one central point");
    add_config(fiber);
    fiber->add_option("--point", point, "central point, e.g. \"X1=3,Y1=0\"")->required();

    std::string grid_override;
    CLI::App* scan = app.add_subcommand("scan", "analyze every point of the configured grid");
    add_config(scan);
    scan->add_option("--grid", grid_override, "override the configured grid: 'full'");

    CLI::App* singular = app.add_subcommand("singular", "Jacobian singularity test at a point");
    add_config(singular);
    singular->add_option("--point", point, "central point")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the named verification suite");
    verify->add_option("--suite", suite, "all | example1 | example2 | weyl | properties");
    verify->add_option("--seed", seed_cli, "randomization seed (default 0)");
    verify->add_option("--out", out_path, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CommandResult result;
        if (verify->parsed()) {
            result = cmd_verify(suite, seed_cli);
        } else {
            RunConfig cfg = load_config(config_path);
            CLI::App* active = app.get_subcommands().front();
            if (active->count("--seed") > 0) cfg.seed = seed_cli;
            if (max_dets != 0) cfg.max_dets = max_dets;
            if (!grid_override.empty()) {
                if (grid_override != "full") throw parse_error("--grid supports only 'full'");
                cfg.grid_full = true;
            }
            if (force_rational) cfg.force_rational = true;
            if (!out_path.empty()) cfg.out_path = out_path;

            if (describe->parsed())
                result = cmd_describe(cfg);
            else if (disc->parsed())
                result = cmd_disc(cfg, DiscOptions{level, variant, trace, target, compare});
            else if (fiber->parsed())
                result = cmd_fiber(cfg, point);
            else if (scan->parsed())
                result = cmd_scan(cfg);
            else if (singular->parsed())
                result = cmd_singular(cfg, point);
            out_path = cfg.out_path;
        }
        emit(result, out_path);
        return result.exit_code;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_point_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_field_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const char_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
