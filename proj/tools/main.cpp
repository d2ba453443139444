#include "uoslice/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plan, validate and inspect micro-operator network slices"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    std::string format_name = "text";

    auto add = [&](const char* name, const char* help, bool has_format) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Plan document")->required();
        sub->add_option("--out", out_path, "Write the report here instead of stdout");
        if (has_format)
            sub->add_option("--format", format_name, "Output format (default: text)")
                ->check(CLI::IsMember({"text", "structured"}).description(""))
                ->type_name("text|structured");
        return sub;
    };
    auto* validate = add("validate", "Check the replayed plan against the scenario rules", true);
    auto* plan = add("plan", "Show planning decisions and the resulting plan", true);
    auto* graph = add("graph", "Export the sharing graph as DOT", false);
    auto* replay = add("replay", "Replay document events step by step", true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : uoslice::kExitInputError;
    }

    std::string text;
    if (!read_file(file, text)) {
        std::cerr << "cannot read '" << file << "'\n";
        return uoslice::kExitInputError;
    }

    const auto format = format_name == "structured" ? uoslice::OutputFormat::Structured : uoslice::OutputFormat::Text;
    uoslice::CommandResult result;
    if (validate->parsed())
        result = uoslice::run_validate(text, format);
    else if (plan->parsed())
        result = uoslice::run_plan(text, format);
    else if (graph->parsed())
        result = uoslice::run_graph(text);
    else if (replay->parsed())
        result = uoslice::run_replay(text, format);

    std::cerr << result.diagnostics;
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return uoslice::kExitInputError;
        }
        out << result.output;
    }
    return result.exit_code;
}
