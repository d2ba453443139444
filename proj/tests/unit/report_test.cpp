#include "fixtures.hpp"

#include "uoslice/document.hpp"
#include "uoslice/replay.hpp"
#include "uoslice/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>

namespace uoslice {
namespace {

using namespace test;

ReplayResult load(const std::string& name) {
    return replay(parse_document(read_text(std::string(UOSLICE_CORPUS_DIR) + "/" + name + ".json")));
}

std::multiset<NsiType> types_of(const ScenarioReport& r) {
    std::multiset<NsiType> out;
    for (const auto& s : r.slices) out.insert(s.classification.type);
    return out;
}

TEST(Report, Fig5Multiset) {
    const auto run = load("fig5_closed_a");
    const auto report = scenario_report(run.plan, run.scenario);
    EXPECT_TRUE(report.legal());
    EXPECT_EQ(types_of(report), (std::multiset{NsiType::Type1, NsiType::Type2, NsiType::Type2}));
    EXPECT_EQ(report.shared_nssis, 1u);
    EXPECT_EQ(report.used_nssis, 5u);
    EXPECT_EQ(report.allowed, (TypeSet{NsiType::Type1, NsiType::Type2}));
}

TEST(Report, SamePlanUnderOpenPublicFlagsSharedSlices) {
    auto run = load("fig5_closed_a");
    run.scenario.kind = ScenarioKind::OpenPublic;
    const auto report = scenario_report(run.plan, run.scenario);
    EXPECT_FALSE(report.legal());
    std::vector<std::string> forbidden;
    for (const auto& v : report.violations)
        if (v.code == RuleCode::ForbiddenNsiType) forbidden.push_back(v.subject);
    EXPECT_EQ(forbidden, (std::vector<std::string>{"nsi-logistics", "nsi-office"}));
    const auto& first = report.rules.front();
    EXPECT_EQ(first.rule, Rule::AllowedTypes);
    EXPECT_EQ(first.status, RuleStatus::Fail);
    EXPECT_EQ(first.errors, 2u);
}

TEST(Report, EmptyPlanIsLegalWithNoApplicableRules) {
    NetworkPlan plan;
    add_domain(plan, micro());
    const auto report = scenario_report(plan, scenario(ScenarioKind::ClosedA));
    EXPECT_TRUE(report.legal());
    EXPECT_TRUE(report.slices.empty());
    EXPECT_EQ(report.rules.size(), std::size(kAllRules));
    EXPECT_NE(render_text(report).find("slices: 0\n"), std::string::npos);
}

TEST(Report, StructuredIsParseableAndMirrorsText) {
    for (const char* name : {"fig6_closed_b", "fig8_mixed_option_a", "invalid_public_shared"}) {
        const auto run = load(name);
        const auto report = scenario_report(run.plan, run.scenario);
        const auto j = nlohmann::json::parse(render_structured(report));
        EXPECT_EQ(j.at("legal").get<bool>(), report.legal()) << name;
        EXPECT_EQ(j.at("slices").size(), report.slices.size()) << name;
        EXPECT_EQ(j.at("violations").size(), report.violations.size()) << name;
        for (const auto& s : report.slices)
            EXPECT_NE(render_text(report).find(s.id.str()), std::string::npos) << name;
    }
}

TEST(Report, RenderingIsDeterministic) {
    const auto a = load("fig9_mixed_option_b");
    const auto b = load("fig9_mixed_option_b");
    EXPECT_EQ(render_text(scenario_report(a.plan, a.scenario)), render_text(scenario_report(b.plan, b.scenario)));
    EXPECT_EQ(render_structured(scenario_report(a.plan, a.scenario)),
              render_structured(scenario_report(b.plan, b.scenario)));
}

TEST(Report, ViolationsAreCanonicallyOrdered) {
    const auto run = load("invalid_closed_a_foreign");
    const auto report = scenario_report(run.plan, run.scenario);
    EXPECT_TRUE(std::is_sorted(report.violations.begin(), report.violations.end(), canonical_less));
    ASSERT_EQ(report.violations.size(), 2u);
    EXPECT_EQ(report.violations[0].code, RuleCode::ForbiddenNsiType);
    EXPECT_EQ(report.violations[1].code, RuleCode::ForeignConstituentInClosed);
}

} // namespace
} // namespace uoslice
