#pragma once

#include "uoslice/document.hpp"
#include "uoslice/model.hpp"
#include "uoslice/orchestrator.hpp"
#include "uoslice/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uoslice {

struct StepRecord {
    std::size_t index = 0;
    std::string action;      // e.g. "instantiate r1 as nsi-1 (Request)"
    std::optional<PlanDelta> delta;
    std::size_t errors = 0;  // error-severity violations after the step
    std::size_t warnings = 0;
};

struct ReplayResult {
    NetworkPlan plan;
    DeploymentScenario scenario;
    std::vector<StepRecord> steps;
    std::optional<std::string> failure; // set when a step threw; plan is the state before it

    bool ok() const noexcept { return !failure.has_value(); }
};

// Domains, NSSIs, tenants, agreements and declared slices, in that order.
// Throws SliceError when an entity breaks a plan invariant.
NetworkPlan build_initial_plan(const PlanDocument& document);

// Builds the initial plan, then replays events (or plans every request in
// document order when events are absent). Initial-plan errors throw.
ReplayResult replay(const PlanDocument& document);

} // namespace uoslice
