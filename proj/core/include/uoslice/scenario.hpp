#pragma once

#include "uoslice/classify.hpp"
#include "uoslice/model.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace uoslice {

enum class ScenarioKind { ClosedA, ClosedB, OpenMNO, OpenPublic, MixedOptionA, MixedOptionB };

std::string_view to_string(ScenarioKind v) noexcept;
bool parse_enum(std::string_view text, ScenarioKind& out);

inline constexpr ScenarioKind kAllScenarioKinds[] = {
    ScenarioKind::ClosedA,    ScenarioKind::ClosedB,      ScenarioKind::OpenMNO,
    ScenarioKind::OpenPublic, ScenarioKind::MixedOptionA, ScenarioKind::MixedOptionB,
};

struct DeploymentScenario {
    ScenarioKind kind = ScenarioKind::ClosedA;
    int peered_mno_count = 0;
    bool multi_location = false;
    // Some tenant of the network needs connectivity outside the micro-operator.
    bool external_need = false;

    friend bool operator==(const DeploymentScenario&, const DeploymentScenario&) = default;
};

// Fills peered_mno_count and external_need from the plan.
DeploymentScenario in_context(ScenarioKind kind, bool multi_location, const NetworkPlan& plan);

// Throws MalformedScenario when the scenario's own invariants fail.
void require_well_formed(const DeploymentScenario& scenario);
bool is_well_formed(const DeploymentScenario& scenario) noexcept;

using TypeSet = std::set<NsiType>;

TypeSet allowed_types(const DeploymentScenario& scenario);

bool is_closed(ScenarioKind kind) noexcept;
bool is_mixed(ScenarioKind kind) noexcept;

enum class RuleCode {
    ForbiddenNsiType,
    ForeignConstituentInClosed,
    PublicSliceShared,
    PublicSliceMissing,
    PublicSliceDuplicated,
    PublicSliceNotType1,
    Type3WithoutExternalNeed,
    SharesWithType3,
    MnoSubscriberSliceNotFederated,
    CompositionError,
    CapacityExceeded,
};

std::string_view to_string(RuleCode code) noexcept;

enum class Severity { Error, Warning };
std::string_view to_string(Severity s) noexcept;

// Rule families, in report order.
enum class Rule { AllowedTypes, ClosedIsolation, ExternalNeed, PublicIsolation, MnoFederation, Capacity, Composition };
inline constexpr Rule kAllRules[] = {
    Rule::AllowedTypes, Rule::ClosedIsolation, Rule::ExternalNeed, Rule::PublicIsolation,
    Rule::MnoFederation, Rule::Capacity, Rule::Composition,
};
std::string_view to_string(Rule rule) noexcept;
Rule rule_of(RuleCode code) noexcept;

struct RuleViolation {
    RuleCode code;
    Severity severity = Severity::Error;
    std::string subject;
    std::string detail;
    std::string anchor; // stable identifier of the configuration rule that fired

    friend bool operator==(const RuleViolation&, const RuleViolation&) = default;
};

// Canonical order: rule family, then code, subject, detail.
bool canonical_less(const RuleViolation& a, const RuleViolation& b);

// Evaluates every configuration rule against the plan and returns all
// violations in canonical order. Throws MalformedScenario / InconsistentPlan.
std::vector<RuleViolation> validate_network_plan(const NetworkPlan& plan, const DeploymentScenario& scenario);

bool has_errors(const std::vector<RuleViolation>& violations) noexcept;

// Whether a rule family has anything to check for this plan and scenario.
bool rule_applies(Rule rule, const NetworkPlan& plan, const DeploymentScenario& scenario);

// Human summary of the configuration row that governs `kind`.
struct ScenarioRow {
    std::string_view network;    // Closed / Open / Mixed
    std::string_view deployment; // Deployment A, MNO Open, Option B, ...
    std::string_view summary;
};
ScenarioRow scenario_row(ScenarioKind kind) noexcept;

} // namespace uoslice
