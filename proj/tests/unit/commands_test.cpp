#include "fixtures.hpp"

#include "uoslice/commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <regex>

namespace uoslice {
namespace {

using namespace test;

std::string corpus(const std::string& name) {
    return read_text(std::string(UOSLICE_CORPUS_DIR) + "/" + name + ".json");
}

TEST(Commands, ExitCodesFollowVerdict) {
    EXPECT_EQ(run_validate(corpus("fig5_closed_a"), OutputFormat::Text).exit_code, kExitOk);
    EXPECT_EQ(run_validate(corpus("invalid_public_shared"), OutputFormat::Text).exit_code, kExitViolations);
    const auto bad = run_validate(corpus("malformed_syntax"), OutputFormat::Text);
    EXPECT_EQ(bad.exit_code, kExitInputError);
    EXPECT_TRUE(bad.output.empty());
    EXPECT_NE(bad.diagnostics.find("SyntaxError"), std::string::npos);
    EXPECT_EQ(run_validate(corpus("malformed_unsatisfiable"), OutputFormat::Text).exit_code, kExitInputError);
    EXPECT_EQ(run_validate("", OutputFormat::Text).exit_code, kExitInputError);
}

TEST(Commands, PlanListsDeltas) {
    const auto r = run_plan(corpus("fig6_closed_b"), OutputFormat::Text);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_NE(r.output.find("step 0: instantiate remote-monitoring"), std::string::npos);
    EXPECT_NE(r.output.find("final plan version:"), std::string::npos);
    const auto s = nlohmann::json::parse(run_plan(corpus("fig6_closed_b"), OutputFormat::Structured).output);
    EXPECT_TRUE(s.contains("deltas"));
    EXPECT_TRUE(s.at("report").at("legal").get<bool>());
}

TEST(Commands, ReplayReportsEachStep) {
    const auto r = run_replay(corpus("fig9_mixed_option_b"), OutputFormat::Text);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_NE(r.output.find("[1] "), std::string::npos);
    const auto s = nlohmann::json::parse(run_replay(corpus("fig9_mixed_option_b"), OutputFormat::Structured).output);
    EXPECT_TRUE(s.at("ok").get<bool>());
    EXPECT_FALSE(s.at("steps").empty());
}

TEST(Commands, EmptyGraph) {
    const auto r = run_graph(R"({"schema_version": 1, "scenario": {"kind": "ClosedA"},
                                 "domains": [{"id": "uo", "kind": "MicroOperator"}]})");
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_EQ(r.output.substr(0, 36), "digraph network_plan {\n  rankdir=LR;");
}

TEST(Commands, GraphType1SlicesOwnTheirNssis) {
    const auto dot = run_graph(corpus("fig5_closed_a")).output;
    const std::regex edge(R"re("nsi:([^"]+)" -> "nssi:([^"]+)")re");
    std::map<std::string, std::set<std::string>> users;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
        users[(*it)[2]].insert((*it)[1]);
    EXPECT_EQ(users.at("an-robot"), std::set<std::string>{"nsi-automation"});
    EXPECT_EQ(users.at("cn-robot"), std::set<std::string>{"nsi-automation"});
    EXPECT_EQ(users.at("cn-shared").size(), 2u);
}

TEST(Commands, GraphShowsFederationEdge) {
    const auto dot = run_graph(corpus("fig8_mixed_option_a")).output;
    EXPECT_NE(dot.find("-> \"nssi:mno1-core\""), std::string::npos);
    EXPECT_NE(dot.find("subgraph \"cluster_mno1\""), std::string::npos);
}

TEST(Commands, OutputIsByteIdentical) {
    for (const char* name : {"fig7_open_mno", "fig8_mixed_option_a", "invalid_overcommitted"}) {
        const auto text = corpus(name);
        EXPECT_EQ(run_validate(text, OutputFormat::Text).output, run_validate(text, OutputFormat::Text).output);
        EXPECT_EQ(run_validate(text, OutputFormat::Structured).output,
                  run_validate(text, OutputFormat::Structured).output);
        EXPECT_EQ(run_graph(text).output, run_graph(text).output);
    }
}

} // namespace
} // namespace uoslice
