#include <iostream>

#include "CLI11.hpp"

#include "logsym/cli.hpp"
#include "logsym/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Poisson cohomology of partitionable log symplectic manifolds"};
    std::string command, path, format = "table";
    logsym::RunFlags flags;
    int cutoff = 0;
    long max_matrix = 0;
    app.add_option("command", command, "Command to run")
        ->required()
        ->check(CLI::IsMember(logsym::command_names()));
    app.add_option("model", path, "Model file (JSON)")->required();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    auto* cutoff_opt = app.add_option("--cutoff", cutoff, "Oracle frequency cutoff")->check(CLI::PositiveNumber);
    auto* cap_opt = app.add_option("--max-matrix", max_matrix, "Oracle column cap")->check(CLI::PositiveNumber);
    app.add_flag("--strict-jk", flags.strict_jk, "Require J and K to be disjoint");
    app.add_flag("--strict-components", flags.strict_components,
                 "Require c to be nonzero on every component of an intersection");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    flags.format = format == "json" ? logsym::OutputFormat::Json : logsym::OutputFormat::Table;
    if (*cutoff_opt) flags.cutoff = cutoff;
    if (*cap_opt) flags.max_matrix = max_matrix;

    try {
        const logsym::ModelSpec spec = logsym::load_model(path);
        const logsym::CommandOutput out = logsym::run_command(command, spec, flags);
        std::cout << (flags.format == logsym::OutputFormat::Json ? out.json : out.table);
        return out.exit_code;
    } catch (const logsym::InputError& e) {
        std::cerr << "logsym: " << path << ": " << e.what() << "\n";
        return 1;
    } catch (const logsym::ResourceError& e) {
        std::cerr << "logsym: " << e.what() << "\n";
        return 1;
    } catch (const logsym::Error& e) {
        std::cerr << "logsym: internal error: " << e.what() << "\n";
        return 1;
    }
}
