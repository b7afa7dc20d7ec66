#include "fusionobs/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using fusionobs::cli::Format;
    fusionobs::cli::RunConfig config;
    std::string input;
    std::string format;
    std::int64_t ne_case = 0;

    CLI::App app{"Fusion ring associator obstructions"};
    app.add_option("command", config.command, "validate | obstruction | classify-rank2 | enumerate | hochschild | pentagon")
        ->required()
        ->check(CLI::IsMember(fusionobs::cli::commands()));
    app.add_option("--input,-i", input, "input JSON file, or - for stdin");
    app.add_option("--output,-o", config.output, "write the report here instead of stdout");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--verify-oracle", config.verify_oracle, "recompute every entry by brute force");
    app.add_option("--rank", config.rank, "enumeration rank")->capture_default_str();
    app.add_option("--max-entry", config.max_entry, "largest structure constant to enumerate")->capture_default_str();
    app.add_flag("--identity", config.identity, "enumerate only rings with identity at index 0");
    app.add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    auto* ne = app.add_option("--ne-case", ne_case, "decide solvability of x*x = n e for this n");
    app.add_option("--degree", config.degree, "cohomology degree")->capture_default_str();
    app.add_option("--max-m", config.max_m, "classify-rank2: largest m")->capture_default_str();
    app.add_option("--max-n", config.max_n, "classify-rank2: largest n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fusionobs::cli::kParseError;
    }
    if (!input.empty()) config.inputs.push_back(input);
    if (!format.empty()) config.format = format == "csv" ? Format::Csv : Format::Json;
    if (ne->count() > 0) config.ne_case = ne_case;
    return fusionobs::cli::run(config, std::cout, std::cerr);
}
