#pragma once

#include "uoslice/scenario.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace uoslice {

struct SliceEntry {
    NsiId id;
    TenantId tenant;
    SubscriberClass subscriber_class = SubscriberClass::PrivateTenant;
    Classification classification;
    LifecycleState lifecycle = LifecycleState::Planned;
    ManagementMode mode = ManagementMode::Predefined;
    std::vector<NssiId> constituents;
    std::vector<ForeignNsiId> linked_foreign_nsis;
};

enum class RuleStatus { Pass, Fail, NotApplicable };
std::string_view to_string(RuleStatus s) noexcept;

struct RuleOutcome {
    Rule rule;
    RuleStatus status = RuleStatus::Pass;
    std::size_t errors = 0;
    std::size_t warnings = 0;
};

struct ResourceEntry {
    NssiId id;
    SubnetKind kind = SubnetKind::AN;
    DomainId owner;
    bool foreign = false;
    bool sharable = true;
    Units capacity = 0;
    Units reserved = 0;
    Units residual = 0;
    std::size_t users = 0;
};

struct ScenarioReport {
    DeploymentScenario scenario;
    TypeSet allowed;
    ScenarioRow row;
    std::vector<SliceEntry> slices;
    std::vector<RuleOutcome> rules;
    std::vector<RuleViolation> violations;
    std::vector<ResourceEntry> resources;
    std::vector<ServiceBinding> bindings;
    // NSSIs used by more than one live slice, out of NSSIs used at all.
    std::size_t shared_nssis = 0;
    std::size_t used_nssis = 0;

    bool legal() const noexcept { return !has_errors(violations); }
};

ScenarioReport scenario_report(const NetworkPlan& plan, const DeploymentScenario& scenario);

std::string render_text(const ScenarioReport& report);
// Same content as render_text, in the structured document notation.
std::string render_structured(const ScenarioReport& report);

} // namespace uoslice
