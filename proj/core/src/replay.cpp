#include "uoslice/replay.hpp"

#include "uoslice/errors.hpp"
#include "uoslice/federation.hpp"

#include <map>

namespace uoslice {

NetworkPlan build_initial_plan(const PlanDocument& doc) {
    NetworkPlan plan;
    for (const auto& d : doc.domains) add_domain(plan, d);
    for (const auto& n : doc.nssis) add_nssi(plan, n);
    for (const auto& t : doc.tenants) add_tenant(plan, t);
    for (const auto& a : doc.agreements) plan = register_peer(std::move(plan), a);
    for (const auto& d : doc.nsis) add_declared_nsi(plan, d.nsi, d.units);
    return plan;
}

namespace {

std::string describe(const Event& ev) {
    if (const auto* e = std::get_if<InstantiateEvent>(&ev))
        return "instantiate " + e->request.str() + " (" + std::string(to_string(e->mode)) + ")";
    if (const auto* e = std::get_if<TransitionEvent>(&ev))
        return "transition " + e->nsi.str() + " -> " + std::string(to_string(e->target)) + " by " +
               std::string(to_string(e->actor));
    const auto& b = std::get<BindEvent>(ev).binding;
    return "bind " + b.service.str();
}

} // namespace

ReplayResult replay(const PlanDocument& doc) {
    NetworkPlan initial = build_initial_plan(doc);
    require_well_formed(in_context(doc.scenario.kind, doc.scenario.multi_location, initial));

    Orchestrator orch(std::move(initial), doc.scenario.kind, doc.scenario.multi_location, doc.planner);
    std::map<RequestId, const ServiceRequest*> requests;
    for (const auto& r : doc.requests) requests.emplace(r.id, &r);

    std::vector<Event> events;
    if (doc.events) {
        events = *doc.events;
    } else {
        for (const auto& r : doc.requests) events.emplace_back(InstantiateEvent{r.id, ManagementMode::Request, {}});
    }

    ReplayResult result;
    for (std::size_t i = 0; i < events.size(); ++i) {
        StepRecord step;
        step.index = i;
        step.action = describe(events[i]);
        try {
            if (const auto* e = std::get_if<InstantiateEvent>(&events[i])) {
                PlanDelta delta = orch.plan(*requests.at(e->request), e->nsi);
                orch.instantiate(delta, e->mode);
                step.action += " as " + delta.created_nsi.id.str();
                step.delta = std::move(delta);
            } else if (const auto* e = std::get_if<TransitionEvent>(&events[i])) {
                orch.transition(e->nsi, e->target, e->actor);
            } else {
                orch.bind_service(std::get<BindEvent>(events[i]).binding);
            }
            const auto violations = validate_network_plan(orch.snapshot(), orch.scenario());
            for (const auto& v : violations) (v.severity == Severity::Error ? step.errors : step.warnings)++;
        } catch (const SliceError& e) {
            result.failure = "step " + std::to_string(i) + " (" + step.action + "): " + e.what();
            break;
        }
        result.steps.push_back(std::move(step));
    }
    result.plan = orch.snapshot();
    result.scenario = orch.scenario();
    return result;
}

} // namespace uoslice
