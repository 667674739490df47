// sqhe: steady states, figure data, EMP sweeps and parameter sweeps as CSV.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure.

#include "sqhe/cli/commands.hpp"
#include "sqhe/cli/config.hpp"
#include "sqhe/cli/figures.hpp"
#include "sqhe/cli/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;

std::string figure_list() {
    std::string s;
    for (const auto& [id, fn] : sqhe::cli::figure_table()) s += (s.empty() ? "" : ", ") + id;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sqhe::cli;

    CLI::App app{"Four-level squeezed-reservoir heat engine: steady states, flux, EMP.\n"
                 "x = 10 is used wherever the strong-squeezing limit x -> infinity is meant."};
    app.set_version_flag("--version", std::string("sqhe ") + kToolVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    unsigned jobs = 1;
    std::vector<std::string> assignments;
    std::map<std::string, std::string> flags;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value configuration file");
        cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
        cmd->add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1u, 1024u));
        cmd->add_option("--set", assignments, "override key=value (repeatable)");
        for (const auto& k : config_keys()) {
            cmd->add_option(std::string("--") + k.name, flags[k.name], k.help);
        }
    };

    auto* steady = app.add_subcommand("steady", "relaxation trajectory and steady state");
    auto* figure = app.add_subcommand("figure", "data for one figure panel");
    auto* emp = app.add_subcommand("emp", "EMP against Carnot efficiency");
    auto* sweep = app.add_subcommand("sweep", "steady-state observables along one parameter");
    std::string figure_id;
    figure->add_option("id", figure_id, "panel id: " + figure_list())->required();
    for (auto* c : {steady, figure, emp, sweep}) add_common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Config cfg;
        if (!config_path.empty()) cfg.load_file(config_path);
        for (const auto& a : assignments) cfg.set_assignment(a);
        for (const auto& k : config_keys()) {
            const auto* sub = app.get_subcommands().front();
            if (sub->count(std::string("--") + k.name) > 0) cfg.set(k.name, flags[k.name]);
        }

        Table table;
        if (steady->parsed()) {
            table = cmd_steady(cfg);
        } else if (figure->parsed()) {
            table = cmd_figure(figure_id, cfg, jobs);
        } else if (emp->parsed()) {
            table = cmd_emp(cfg, jobs);
        } else {
            table = cmd_sweep(cfg, jobs);
        }

        if (out_path.empty()) {
            write_csv(std::cout, table);
        } else {
            std::ofstream out(out_path);
            if (!out) throw ConfigError("cannot write '" + out_path + "'");
            write_csv(out, table);
            if (!out) throw ConfigError("write to '" + out_path + "' failed");
        }
    } catch (const ConfigError& e) {
        std::cerr << "sqhe: " << e.what() << '\n';
        return kUsage;
    } catch (const sqhe::DomainError& e) {
        std::cerr << "sqhe: invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const sqhe::NumericalError& e) {
        std::cerr << "sqhe: numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
