#pragma once

// Argument parsing and dispatch. run_cli returns the process exit status:
// 0 success, 2 user or domain error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace holocode::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_user = 2;
inline constexpr int exit_internal = 3;

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Code rates and code-rate bounds of holographic codes on {p,q} tilings", "holocode"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "pretty";
    std::string destination = "-";
    int precision = 6;
    app.add_option("--format", format_name, "csv, json or pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    app.add_option("-o,--output", destination, "Output file, - for standard output")->capture_default_str();
    app.add_option("--precision", precision, "Decimal places for real columns")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();

    std::int64_t p = 0;
    std::int64_t q = 0;
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("p", p, "Polygon sides")->required();
        sub->add_option("q", q, "Polygons per vertex")->required();
    };

    CLI::App* bound = app.add_subcommand("bound", "Side length, area and code-rate bound of a tile");
    add_pair(bound);
    CLI::App* rate = app.add_subcommand("rate", "Growth algebra and code rate under tile completion");
    add_pair(rate);

    std::int64_t p_from = 0;
    std::int64_t p_to = 0;
    CLI::App* scan = app.add_subcommand("scan", "q range, optimum and threshold search per p");
    scan->add_option("p_from", p_from)->required();
    scan->add_option("p_to", p_to)->required();

    SimulateOptions sim;
    std::string seed_name = "tile";
    CLI::App* simulate = app.add_subcommand("simulate", "Grow a tiling patch and census each layer");
    add_pair(simulate);
    simulate->add_option("--seed", seed_name, "tile, edge or vertex")
        ->check(CLI::IsMember({"tile", "edge", "vertex", "single-tile", "single-edge-pair", "vertex-star"}))
        ->capture_default_str();
    simulate->add_option("--layers", sim.layers, "Maximum layers to grow")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    simulate->add_option("--max-boundary", sim.max_boundary, "Stop before the perimeter exceeds this")
        ->capture_default_str();

    CLI::App* tables = app.add_subcommand("tables", "Reproduce the code-rate, optimum and range tables");

    int fig_id = 0;
    std::int64_t limit = 30;
    CLI::App* figures = app.add_subcommand("figures", "Series behind figures 1 to 4");
    figures->add_option("fig_id", fig_id)->required();
    figures->add_option("--limit", limit, "Largest value of the free parameter")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "holocode: " << e.what() << '\n';
        return exit_user;
    }

    try {
        std::vector<Table> result;
        if (*bound) {
            result = cmd_bound(p, q, precision);
        } else if (*rate) {
            result = cmd_rate(p, q, precision);
        } else if (*scan) {
            result = cmd_scan(p_from, p_to, precision);
        } else if (*simulate) {
            sim.p = p;
            sim.q = q;
            sim.seed = *parse_seed_kind(seed_name);
            sim.precision = precision;
            result = cmd_simulate(sim);
        } else if (*tables) {
            result = cmd_tables();
        } else if (*figures) {
            result = cmd_figures(fig_id, limit, precision);
        }

        const Format format = *parse_format(format_name);
        if (destination == "-") {
            write_tables(out, result, format);
        } else {
            std::ofstream file(destination, std::ios::binary);
            if (!file) throw UsageError("cannot open " + destination + " for writing");
            write_tables(file, result, format);
            if (!file.flush()) throw UsageError("failed writing " + destination);
        }
        return exit_ok;
    } catch (const InternalError& e) {
        err << "holocode: internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const UsageError& e) {
        err << "holocode: " << e.what() << '\n';
        return exit_user;
    } catch (const std::invalid_argument& e) {
        err << "holocode: " << e.what() << '\n';
        return exit_user;
    } catch (const std::domain_error& e) {
        err << "holocode: " << e.what() << '\n';
        return exit_user;
    } catch (const std::exception& e) {
        err << "holocode: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace holocode::cli
