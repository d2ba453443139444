#pragma once

#include <string>
#include <string_view>

namespace uoslice {

enum class OutputFormat { Text, Structured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;      // report body, destined for stdout or --out
    std::string diagnostics; // error text, destined for stderr
};

// Each command takes the raw document text. Output is byte-deterministic.
CommandResult run_validate(std::string_view document_text, OutputFormat format);
CommandResult run_plan(std::string_view document_text, OutputFormat format);
CommandResult run_graph(std::string_view document_text);
CommandResult run_replay(std::string_view document_text, OutputFormat format);

} // namespace uoslice
