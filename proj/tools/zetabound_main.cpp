#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "zetabound/cli.hpp"

using namespace zetabound;

namespace {

const std::map<std::string, std::string> kHelp = {
    {"out", "write the result to this file instead of stdout"},
    {"format", "json (default) or csv"},
    {"workers", "worker threads; results do not depend on it"},
    {"depth", "maximum bisection depth"},
    {"cells", "initial log-spaced cells"},
    {"supplementary", "also run the bonus checks (true/false)"},
    {"t0", "lower end of the t-range"},
    {"t1", "upper end of the t-range"},
    {"c", "phase-lemma constant c"},
    {"phi", "exponent phi of the cutoff K0 = t^phi"},
    {"C", "constant in |zeta| <= C t^(1/6) log t"},
    {"r0", "r0 of the intermediate sums (default 4)"},
    {"step", "scan spacing in t"},
    {"suite", "all, sweep, kusmin-landau, weyl or structural"},
    {"samples", "random instances per suite"},
    {"region", "named region, riemann-siegel or all"},
    {"objective", "max_t1 or min_C"},
    {"c_lo", "c grid start"},
    {"c_hi", "c grid end"},
    {"c_steps", "c grid intervals"},
    {"phi_lo", "phi grid start"},
    {"phi_hi", "phi grid end"},
    {"phi_steps", "phi grid intervals"},
    {"t1_cap", "largest t1 tried by max_t1"},
    {"refinements", "local refinement rounds"},
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zetabound: certified bounds for |zeta(1/2+it)|"};
    app.require_subcommand(1);
    std::string config_path;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "flat key = value file; flags override it");
    app.add_option("--seed", seed, "seed of all randomized suites")->default_val(0);

    std::string line;
    for (int i = 0; i < argc; ++i) line += (i ? " " : "") + std::string(argv[i]);

    std::map<std::string, std::map<std::string, std::string>> flags;
    std::map<std::string, CLI::App*> subs;
    for (const auto name : cli::command_names()) {
        const std::string n(name);
        CLI::App* sub = app.add_subcommand(n);
        sub->fallthrough();
        subs[n] = sub;
        for (const auto& key : cli::command_keys(cli::parse_command(name))) {
            auto it = kHelp.find(key);
            sub->add_option("--" + key, flags[n][key], it == kHelp.end() ? "" : it->second);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_usage;
    }

    try {
        cli::RunConfig cfg;
        cfg.command_line = line;
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            cfg.command = cli::parse_command(name);
            if (!config_path.empty()) {
                auto file = cli::read_config_file(config_path);
                if (auto s = file.find("seed"); s != file.end()) {
                    if (!app.count("--seed")) try {
                        seed = std::stoull(s->second);
                    } catch (const std::exception&) {
                        throw cli::UsageError("seed must be a non-negative integer");
                    }
                    file.erase(s);
                }
                cfg.params = file;
            }
            for (const auto& key : cli::command_keys(cfg.command))
                if (sub->count("--" + key)) cfg.params[key] = flags[name][key];
        }
        cfg.seed = seed;
        const cli::RunResult r = cli::run(cfg);
        if (!cfg.params.count("out")) std::cout << r.output;
        std::cerr << r.summary << "\n";
        return r.exit_code;
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_usage;
    }
}
