#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "supercong/cli.hpp"

int main(int argc, char** argv) {
    supercong::RunConfig config;
    std::string format = "table";
    std::string output;
    int jobs = 1;

    CLI::App app{"Verify binomial supercongruences over sweeps of primes"};
    app.add_option("--families", config.families, "Catalog names, comma separated, or 'all'")->delimiter(',');
    app.add_option("--p-min", config.p_min, "Smallest prime (at least 5)");
    app.add_option("--p-max", config.p_max, "Largest prime");
    app.add_option("--powers", config.powers, "Exponents a for prime-power entries")->delimiter(',');
    app.add_flag("--proof-steps", config.include_proof_steps, "With 'all', include intermediate congruences");
    app.add_option("--identities-n-max", config.identities_n_max, "Bound for the exact identity checks");
    app.add_option("--t-samples", config.t_samples, "Sampled t values per case for large p");
    app.add_option("--seed", config.seed, "Seed for t sampling");
    app.add_option("--jobs", jobs, "Worker threads");
    app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_flag("--fail-fast", config.fail_fast, "Stop scheduling after the first failure");
    app.add_option("--output", output, "Write the report to this file");
    app.add_flag("--stream", config.stream, "Emit records unsorted as they finish, tagged by task");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (jobs < 1) {
        std::cerr << "usage error: jobs must be at least 1\n" << app.help();
        return 2;
    }
    config.jobs = static_cast<unsigned>(jobs);
    if (format == "json") config.format = supercong::Format::Json;
    if (format == "csv") config.format = supercong::Format::Csv;

    if (output.empty()) {
        int code = supercong::run(config, std::cout, std::cerr);
        if (code == 2) std::cerr << app.help();
        return code;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open " << output << '\n';
        return 2;
    }
    int code = supercong::run(config, file, std::cerr);
    if (code == 2) std::cerr << app.help();
    return code;
}
