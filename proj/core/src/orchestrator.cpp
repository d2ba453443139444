#include "uoslice/orchestrator.hpp"

#include "uoslice/classify.hpp"
#include "uoslice/errors.hpp"
#include "uoslice/federation.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace uoslice {

Units SliceRequirement::demand(SubnetKind kind) const {
    auto it = per_kind_demand.find(kind);
    return it == per_kind_demand.end() ? 0 : it->second;
}

SliceRequirement translate_service(const ServiceRequest& request, const DeploymentScenario& scenario) {
    require_well_formed(scenario);
    if (request.demand <= 0)
        throw SliceError(ErrorCode::InvalidRequest, "request '" + request.id.str() + "' has non-positive demand");
    if (request.locations.empty())
        throw SliceError(ErrorCode::InvalidRequest, "request '" + request.id.str() + "' names no location");

    // High reliability only forces isolation together with Exclusive, which already implies it.
    const bool isolated =
        request.latency == LatencyClass::UltraLow || request.isolation == IsolationClass::Exclusive;
    if (isolated && request.wide_area)
        throw SliceError(ErrorCode::ContradictoryRequirement,
                         "request '" + request.id.str() + "' needs an unshared slice and wide-area federation");

    SliceRequirement req;
    req.service = request.id;
    req.tenant = request.tenant;
    req.needs_foreign = request.wide_area;
    if (isolated)
        req.required_type = {TypeBound::Exactly, NsiType::Type1};
    else
        req.required_type = {TypeBound::AtMost, req.needs_foreign ? NsiType::Type3 : NsiType::Type2};
    req.per_kind_demand = {{SubnetKind::AN, request.demand}, {SubnetKind::CN, request.demand}};
    req.locations = request.locations;
    return req;
}

SliceRequirement federate_for_tenant(SliceRequirement requirement, const Tenant& tenant,
                                     const DeploymentScenario& scenario) {
    if (scenario.kind != ScenarioKind::OpenMNO || tenant.subscriber_class != SubscriberClass::MnoSubscriberGroup)
        return requirement;
    if (requirement.required_type.bound == TypeBound::Exactly && requirement.required_type.type == NsiType::Type1)
        throw SliceError(ErrorCode::RuleUnsatisfiable, "MNO subscriber slice of '" + tenant.id.str() +
                                                           "' must include a home MNO constituent, cannot be Type1");
    requirement.needs_foreign = true;
    requirement.required_type = {TypeBound::AtMost, NsiType::Type3};
    return requirement;
}

void check_request(const NetworkPlan& plan, const ServiceRequest& request) {
    auto it = plan.tenants.find(request.tenant);
    if (it == plan.tenants.end())
        throw SliceError(ErrorCode::InvalidRequest,
                         "request '" + request.id.str() + "' names unknown tenant '" + request.tenant.str() + "'");
    if (request.demand <= 0)
        throw SliceError(ErrorCode::InvalidRequest, "request '" + request.id.str() + "' has non-positive demand");
    if (request.locations.empty())
        throw SliceError(ErrorCode::InvalidRequest, "request '" + request.id.str() + "' names no location");
    for (const auto& loc : request.locations)
        if (!it->second.locations.contains(loc))
            throw SliceError(ErrorCode::InvalidRequest, "request '" + request.id.str() + "' location '" + loc +
                                                            "' is outside tenant '" + request.tenant.str() + "'");
}

namespace {

std::string next_free(const std::string& prefix, const auto& taken) {
    for (int n = 1;; ++n) {
        std::string candidate = prefix + std::to_string(n);
        if (!taken(candidate)) return candidate;
    }
}

// Local option for one subnet kind: an existing NSSI to reuse, or a fresh one.
struct LocalOption {
    std::optional<NssiId> reuse;
};

bool location_compatible(const Nssi& nssi, const std::set<Location>& locations) {
    return !nssi.location || locations.contains(*nssi.location);
}

std::vector<LocalOption> local_options(const NetworkPlan& plan, SubnetKind kind, const SliceRequirement& req,
                                       bool exclusive) {
    std::vector<LocalOption> out;
    if (!exclusive) {
        for (const auto& [id, n] : plan.nssis) {
            if (n.kind != kind || plan.is_foreign(n) || !n.sharable) continue;
            if (!location_compatible(n, req.locations)) continue;
            if (plan.ledger.residual(id) < req.demand(kind)) continue;
            out.push_back({id});
        }
    }
    out.push_back({std::nullopt});
    return out;
}

// Applies a delta without the version check; admission failures surface as
// SliceError from the ledger.
void apply_delta(NetworkPlan& plan, const PlanDelta& delta, ManagementMode mode) {
    for (const auto& n : delta.created_nssis) add_nssi(plan, n);
    Nsi nsi = delta.created_nsi;
    nsi.mode = mode;
    nsi.lifecycle = LifecycleState::Planned;
    if (plan.nsis.contains(nsi.id) || plan.retired.contains(nsi.id))
        throw SliceError(ErrorCode::DuplicateId, "NSI '" + nsi.id.str() + "' already exists");
    plan.nsis.emplace(nsi.id, nsi);
    for (const auto& r : delta.reservations) plan.ledger.admit(r.nssi, r.nsi, r.units);
}

using ViolationKey = std::tuple<RuleCode, std::string>;

std::set<ViolationKey> keys_of(const std::vector<RuleViolation>& violations) {
    std::set<ViolationKey> out;
    for (const auto& v : violations) out.emplace(v.code, v.subject);
    return out;
}

} // namespace

PlanDelta plan_nsi(const NetworkPlan& plan, const SliceRequirement& requirement_in,
                   const DeploymentScenario& scenario, const PlannerOptions& options,
                   const std::optional<NsiId>& nsi_id) {
    const TypeSet allowed = allowed_types(scenario);
    const Tenant& tenant = plan.tenant(requirement_in.tenant);
    const SliceRequirement req = federate_for_tenant(requirement_in, tenant, scenario);

    for (auto kind : {SubnetKind::AN, SubnetKind::CN})
        if (req.demand(kind) <= 0)
            throw SliceError(ErrorCode::InvalidRequest, "requirement for '" + req.service.str() +
                                                            "' has no " + std::string(to_string(kind)) + " demand");
    if (req.locations.empty())
        throw SliceError(ErrorCode::InvalidRequest, "requirement for '" + req.service.str() + "' names no location");
    for (const auto& loc : req.locations)
        if (!tenant.locations.contains(loc))
            throw SliceError(ErrorCode::InvalidRequest, "location '" + loc + "' is outside tenant '" +
                                                            tenant.id.str() + "'");
    const auto micro_operator = plan.micro_operator();
    if (!micro_operator) throw SliceError(ErrorCode::InconsistentPlan, "plan has no MicroOperator domain");

    NsiId id;
    if (nsi_id) {
        if (plan.nsis.contains(*nsi_id) || plan.retired.contains(*nsi_id))
            throw SliceError(ErrorCode::DuplicateId, "NSI '" + nsi_id->str() + "' already exists");
        id = *nsi_id;
    } else {
        id = NsiId(next_free("nsi-", [&](const std::string& s) {
            return plan.nsis.contains(NsiId(s)) || plan.retired.contains(NsiId(s));
        }));
    }

    std::vector<std::optional<NssiId>> foreign_options{std::nullopt};
    if (req.needs_foreign) {
        if (!allowed.contains(NsiType::Type3))
            throw SliceError(ErrorCode::ScenarioForbidsFederation,
                             std::string(to_string(scenario.kind)) + " does not admit Type3 slices");
        const bool any_peer = std::any_of(plan.agreements.begin(), plan.agreements.end(),
                                          [](const PeeringAgreement& a) { return permits_local_use(a.direction); });
        if (!any_peer) throw SliceError(ErrorCode::NoPeeredMno, "no MNO peering lets the micro-operator federate");

        std::optional<DomainId> only_from;
        if (scenario.kind == ScenarioKind::OpenMNO && tenant.subscriber_class == SubscriberClass::MnoSubscriberGroup)
            only_from = tenant.home_mno;
        foreign_options.clear();
        for (const auto& f : eligible_foreign_nssis(plan, 1, only_from))
            if (plan.ledger.residual(f) >= req.demand(plan.nssi(f).kind)) foreign_options.emplace_back(f);
        if (foreign_options.empty())
            throw SliceError(ErrorCode::ForeignCapacityExhausted,
                             "no exported foreign NSSI has residual capacity for '" + req.service.str() + "'");
    }

    const bool exclusive =
        req.required_type.bound == TypeBound::Exactly && req.required_type.type == NsiType::Type1;
    const auto an_options = local_options(plan, SubnetKind::AN, req, exclusive);
    const auto cn_options = local_options(plan, SubnetKind::CN, req, exclusive);

    // Fewest fresh NSSIs first, then lowest-id reuse per kind, then lowest foreign id.
    struct Combo {
        int fresh;
        std::size_t an, cn, foreign;
    };
    std::vector<Combo> combos;
    for (std::size_t a = 0; a < an_options.size(); ++a)
        for (std::size_t c = 0; c < cn_options.size(); ++c)
            for (std::size_t f = 0; f < foreign_options.size(); ++f)
                combos.push_back({int(!an_options[a].reuse) + int(!cn_options[c].reuse), a, c, f});
    std::stable_sort(combos.begin(), combos.end(), [](const Combo& x, const Combo& y) { return x.fresh < y.fresh; });

    const std::set<ViolationKey> baseline = keys_of(validate_network_plan(plan, scenario));
    std::string last_failure = "no candidate assignment";

    for (const auto& combo : combos) {
        PlanDelta delta;
        delta.base_version = plan.version;
        delta.created_nsi.id = id;
        delta.created_nsi.tenant = req.tenant;

        std::set<std::string> fresh_ids;
        auto add_local = [&](SubnetKind kind, const LocalOption& opt) {
            if (opt.reuse) {
                delta.reused_nssis.push_back(*opt.reuse);
                delta.created_nsi.constituents.push_back(*opt.reuse);
                return;
            }
            const std::string prefix = kind == SubnetKind::AN ? "an-" : "cn-";
            Nssi n;
            n.id = NssiId(next_free(prefix, [&](const std::string& s) {
                return plan.nssis.contains(NssiId(s)) || fresh_ids.contains(s);
            }));
            fresh_ids.insert(n.id.str());
            n.kind = kind;
            n.owner = *micro_operator;
            n.sharable = !exclusive;
            n.capacity = exclusive ? req.demand(kind) : std::max(req.demand(kind), options.fresh_nssi_capacity);
            if (req.locations.size() == 1) n.location = *req.locations.begin();
            delta.created_nsi.constituents.push_back(n.id);
            delta.created_nssis.push_back(std::move(n));
        };
        add_local(SubnetKind::AN, an_options[combo.an]);
        add_local(SubnetKind::CN, cn_options[combo.cn]);
        if (const auto& f = foreign_options[combo.foreign]) {
            delta.reused_nssis.push_back(*f);
            delta.created_nsi.constituents.push_back(*f);
        }

        for (const auto& c : delta.created_nsi.constituents) {
            SubnetKind kind = plan.nssis.contains(c) ? plan.nssi(c).kind : SubnetKind::AN;
            for (const auto& n : delta.created_nssis)
                if (n.id == c) kind = n.kind;
            delta.reservations.push_back({c, id, req.demand(kind)});
        }

        NetworkPlan trial = plan;
        try {
            apply_delta(trial, delta, ManagementMode::Predefined);
        } catch (const SliceError& e) {
            last_failure = e.what();
            continue;
        }
        const NsiType type = classify_nsi_type(trial, id);
        if (!req.required_type.admits(type)) {
            last_failure = "slice would classify " + std::string(to_string(type));
            continue;
        }
        std::string introduced;
        for (const auto& v : validate_network_plan(trial, scenario)) {
            if (baseline.contains({v.code, v.subject})) continue;
            introduced += (introduced.empty() ? "" : "; ") + std::string(to_string(v.code)) + " " + v.subject;
        }
        if (!introduced.empty()) {
            last_failure = "would introduce " + introduced;
            continue;
        }
        return delta;
    }
    throw SliceError(ErrorCode::RuleUnsatisfiable,
                     "no legal composition for '" + req.service.str() + "': " + last_failure);
}

NetworkPlan instantiate(NetworkPlan plan, const PlanDelta& delta, ManagementMode mode) {
    if (plan.version != delta.base_version)
        throw SliceError(ErrorCode::StalePlanVersion, "delta computed at version " +
                                                          std::to_string(delta.base_version) + ", plan is at " +
                                                          std::to_string(plan.version));
    try {
        apply_delta(plan, delta, mode);
    } catch (const SliceError& e) {
        if (e.code() == ErrorCode::InsufficientCapacity) throw SliceError(ErrorCode::CapacityRace, e.what());
        throw;
    }
    ++plan.version;
    return plan;
}

bool is_legal_transition(LifecycleState from, LifecycleState to) noexcept {
    using enum LifecycleState;
    return (from == Planned && to == Instantiated) || (from == Instantiated && to == Active) ||
           (from == Active && to == Decommissioned) || (from == Instantiated && to == Decommissioned);
}

NetworkPlan transition(NetworkPlan plan, const NsiId& nsi_id, LifecycleState target, Actor actor) {
    if (auto it = plan.retired.find(nsi_id); it != plan.retired.end())
        throw SliceError(ErrorCode::IllegalTransition, "'" + nsi_id.str() + "' is decommissioned");
    const Nsi& current = plan.nsi(nsi_id);
    if (!is_legal_transition(current.lifecycle, target))
        throw SliceError(ErrorCode::IllegalTransition, "'" + nsi_id.str() + "': " +
                                                           std::string(to_string(current.lifecycle)) + " -> " +
                                                           std::string(to_string(target)));
    const bool operator_decommission = actor == Actor::Operator && target == LifecycleState::Decommissioned;
    if (actor != current.manager() && !operator_decommission)
        throw SliceError(ErrorCode::WrongActor, "'" + nsi_id.str() + "' is managed by " +
                                                    std::string(to_string(current.manager())));

    if (target != LifecycleState::Decommissioned) {
        plan.nsis.at(nsi_id).lifecycle = target;
        ++plan.version;
        return plan;
    }

    Nsi retired = plan.nsis.at(nsi_id);
    retired.lifecycle = LifecycleState::Decommissioned;
    plan.nsis.erase(nsi_id);
    plan.ledger.release_all(nsi_id);
    for (const auto& c : retired.constituents) {
        auto it = plan.nssis.find(c);
        if (it == plan.nssis.end() || it->second.sharable || plan.is_foreign(it->second)) continue;
        if (!plan.users_of(c).empty()) continue;
        plan.ledger.untrack(c);
        plan.nssis.erase(it);
    }
    for (auto& [service, binding] : plan.bindings) binding.local_nsis.erase(nsi_id);
    plan.retired.emplace(nsi_id, std::move(retired));
    ++plan.version;
    return plan;
}

Orchestrator::Orchestrator(NetworkPlan initial, ScenarioKind kind, bool multi_location, PlannerOptions options)
    : plan_(std::move(initial)), kind_(kind), multi_location_(multi_location), options_(options) {}

NetworkPlan Orchestrator::snapshot() const {
    std::lock_guard lock(mutex_);
    return plan_;
}

DeploymentScenario Orchestrator::scenario() const {
    std::lock_guard lock(mutex_);
    return scenario_locked();
}

DeploymentScenario Orchestrator::scenario_locked() const { return in_context(kind_, multi_location_, plan_); }

PlanDelta Orchestrator::plan_locked(const ServiceRequest& request, const std::optional<NsiId>& nsi_id) const {
    check_request(plan_, request);
    const auto scenario = scenario_locked();
    return plan_nsi(plan_, translate_service(request, scenario), scenario, options_, nsi_id);
}

PlanDelta Orchestrator::plan(const ServiceRequest& request, const std::optional<NsiId>& nsi_id) const {
    std::lock_guard lock(mutex_);
    return plan_locked(request, nsi_id);
}

void Orchestrator::instantiate(const PlanDelta& delta, ManagementMode mode) {
    std::lock_guard lock(mutex_);
    plan_ = uoslice::instantiate(plan_, delta, mode);
}

NsiId Orchestrator::request(const ServiceRequest& request, ManagementMode mode, const std::optional<NsiId>& nsi_id) {
    std::lock_guard lock(mutex_);
    auto delta = plan_locked(request, nsi_id);
    plan_ = uoslice::instantiate(plan_, delta, mode);
    return delta.created_nsi.id;
}

void Orchestrator::transition(const NsiId& nsi, LifecycleState target, Actor actor) {
    std::lock_guard lock(mutex_);
    plan_ = uoslice::transition(plan_, nsi, target, actor);
}

void Orchestrator::register_peer(PeeringAgreement agreement) {
    std::lock_guard lock(mutex_);
    plan_ = uoslice::register_peer(plan_, std::move(agreement));
}

void Orchestrator::import_foreign_nssi(const NsiId& nsi, const NssiId& foreign_nssi, Units units) {
    std::lock_guard lock(mutex_);
    plan_ = uoslice::import_foreign_nssi(plan_, scenario_locked(), nsi, foreign_nssi, units);
}

void Orchestrator::bind_service(ServiceBinding binding) {
    std::lock_guard lock(mutex_);
    plan_ = uoslice::bind_service(plan_, scenario_locked(), std::move(binding));
}

} // namespace uoslice
