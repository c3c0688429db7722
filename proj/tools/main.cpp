#include "rieszpair/experiments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CliOverrides {
    std::string config;
    std::vector<std::pair<std::string, std::string>> assignments;  // config key -> value
};

// Every subcommand shares the same flag set; unused keys are simply ignored
// by the experiment that runs. Values are funneled through the same
// key=value parser the config file uses, so flags override file entries.
void add_common_options(CLI::App* sub, CliOverrides& over) {
    sub->add_option("--config", over.config, "flat key=value config file (flags override it)");
    static const std::vector<std::pair<std::string, std::string>> kFlags = {
        {"--gamma", "gamma"},           {"--gamma-grid", "gamma_grid"},
        {"--K", "K"},                   {"--eps", "eps"},
        {"--schedule", "schedule"},     {"--F", "F"},
        {"--out", "out"},               {"--cache", "cache"},
        {"--n", "n"},                   {"--s", "s"},
        {"--cutoffs", "cutoffs"},       {"--window", "window"},
        {"--search-lo", "search_lo"},   {"--search-hi", "search_hi"},
        {"--cover-lo", "cover_lo"},     {"--cover-hi", "cover_hi"},
        {"--j-max", "j_max"},           {"--level", "level"},
    };
    for (const auto& [flag, key] : kFlags) {
        const std::string key_copy = key;
        sub->add_option_function<std::string>(
            flag,
            [&over, key_copy](const std::string& value) {
                over.assignments.emplace_back(key_copy, value);
            },
            "sets " + key_copy);
    }
    sub->add_flag_callback(
        "--eigvec", [&over] { over.assignments.emplace_back("eigvec", "true"); },
        "dump the minimizing eigenvector");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary fat Cantor sets, Riesz-product Fourier tables, and alpha(B, F_n)"};
    app.require_subcommand(1);

    CliOverrides over;
    for (const char* name : {"fig1", "fig2", "fig34", "alpha", "coeffs", "density", "sobolev",
                             "cover", "check-theorem31"}) {
        auto* sub = app.add_subcommand(name, std::string("run the ") + name + " experiment");
        add_common_options(sub, over);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            nlohmann::json err;
            err["error"] = "cli";
            err["detail"] = e.what();
            std::cerr << err.dump() << "\n";
        }
        return app.exit(e);
    }

    try {
        rieszpair::ExperimentSpec spec;
        if (!over.config.empty()) spec = rieszpair::load_config(over.config);
        spec.id = rieszpair::experiment_from_string(app.get_subcommands().front()->get_name());
        for (const auto& [key, value] : over.assignments)
            rieszpair::apply_config_line(spec, key, value);

        const rieszpair::RunSummary summary = rieszpair::run(spec);

        std::printf("experiment=%s wall=%.3fs cache_hits=%d cache_misses=%d\n",
                    rieszpair::to_string(spec.id), summary.wall_seconds, summary.cache_hits,
                    summary.cache_misses);
        for (const auto& path : summary.outputs) std::printf("wrote %s\n", path.c_str());
        if (!summary.headline.empty()) std::printf("%s\n", summary.headline.c_str());
        return 0;
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = "run";
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
