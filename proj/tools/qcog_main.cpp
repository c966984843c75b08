#include "qcog/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using qcog::cli::OutputFormat;

    CLI::App app{"Conjunction, Born-rule and CHSH analysis of annotated count data"};
    app.require_subcommand(1);

    qcog::cli::RunConfig config;
    const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json}, {"text", OutputFormat::text}};

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"conjunction", "overextension and classical-bound report for a conjunction CSV"},
        {"chsh", "full CHSH pipeline for a CHSH suite JSON"},
        {"born-fit", "Born-rule angles for a Born CSV"},
        {"lhv-check", "local-polytope membership of an expectation set or CHSH suite"},
        {"ent-fit", "singlet-model angle fit to an expectation set or CHSH suite"},
        {"report", "combined document for a directory of inputs"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", config.input_path, "input file (directory for report)")->required();
        sub->add_option("--format,-f", config.output_format, "json or text")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--precision,-p", config.precision, "decimal places for text output")
            ->check(CLI::Range(2, 12));
        sub->callback([&config, name = name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qcog::cli::kValidationError;
    }
    return qcog::cli::run(config, std::cout, std::cerr);
}
