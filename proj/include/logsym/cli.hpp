#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logsym/model.hpp"

namespace logsym {

enum class OutputFormat { Table, Json };

struct RunFlags {
    OutputFormat format = OutputFormat::Table;
    std::optional<int> cutoff;
    std::optional<long> max_matrix;
    bool strict_jk = false;
    bool strict_components = false;
};

/// Exit codes: 0 success, 1 input error, 2 mathematical check failed or undetermined.
struct CommandOutput {
    int exit_code = 0;
    std::string json;
    std::string table;
};

const std::vector<std::string>& command_names();

/// Runs one command; throws InputError for malformed or inapplicable input.
CommandOutput run_command(const std::string& command, const ModelSpec& spec, const RunFlags& flags = {});

} // namespace logsym
