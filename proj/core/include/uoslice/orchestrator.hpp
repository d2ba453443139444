#pragma once

#include "uoslice/model.hpp"
#include "uoslice/scenario.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace uoslice {

enum class TypeBound { Exactly, AtMost };

struct TypeConstraint {
    TypeBound bound = TypeBound::AtMost;
    NsiType type = NsiType::Type2;

    bool admits(NsiType t) const noexcept {
        return bound == TypeBound::Exactly ? t == type : t <= type;
    }

    friend bool operator==(const TypeConstraint&, const TypeConstraint&) = default;
};

struct SliceRequirement {
    RequestId service;
    TenantId tenant;
    TypeConstraint required_type;
    bool needs_foreign = false;
    std::map<SubnetKind, Units> per_kind_demand;
    std::set<Location> locations;

    Units demand(SubnetKind kind) const;

    friend bool operator==(const SliceRequirement&, const SliceRequirement&) = default;
};

// CSMF step: service requirement to slice requirement.
SliceRequirement translate_service(const ServiceRequest& request, const DeploymentScenario& scenario);

// Slices of MNO subscriber groups in an MNO open network must carry a
// constituent of the home MNO; this lifts the requirement accordingly.
// Idempotent. Throws RuleUnsatisfiable when the requirement demands Type1.
SliceRequirement federate_for_tenant(SliceRequirement requirement, const Tenant& tenant,
                                     const DeploymentScenario& scenario);

struct PlannerOptions {
    // Capacity given to freshly created sharable NSSIs (raised to the demand if smaller).
    Units fresh_nssi_capacity = 10;

    friend bool operator==(const PlannerOptions&, const PlannerOptions&) = default;
};

struct PlanDelta {
    std::uint64_t base_version = 0;
    std::vector<Nssi> created_nssis;
    std::vector<NssiId> reused_nssis;
    Nsi created_nsi;
    std::vector<Reservation> reservations;
};

// NSMF/NSSMF step: picks constituents for a new slice. Reuses the lowest-id
// eligible local NSSI per kind when that keeps the plan legal, otherwise
// creates one; adds a single exported foreign NSSI when federation is needed.
PlanDelta plan_nsi(const NetworkPlan& plan, const SliceRequirement& requirement, const DeploymentScenario& scenario,
                   const PlannerOptions& options = {}, const std::optional<NsiId>& nsi_id = std::nullopt);

NetworkPlan instantiate(NetworkPlan plan, const PlanDelta& delta, ManagementMode mode);

bool is_legal_transition(LifecycleState from, LifecycleState to) noexcept;

// Operator may always decommission. Decommissioning releases reservations,
// drops the slice's non-sharable NSSIs and moves it to plan.retired.
NetworkPlan transition(NetworkPlan plan, const NsiId& nsi, LifecycleState target, Actor actor);

// Request fields that must hold against the plan (tenant exists, locations
// within the tenant's, positive demand). Throws InvalidRequest.
void check_request(const NetworkPlan& plan, const ServiceRequest& request);

// Single writer over one NetworkPlan. Readers take snapshots; every mutation
// runs under the lock and bumps the plan version.
class Orchestrator {
public:
    Orchestrator(NetworkPlan initial, ScenarioKind kind, bool multi_location, PlannerOptions options = {});

    NetworkPlan snapshot() const;
    DeploymentScenario scenario() const;

    PlanDelta plan(const ServiceRequest& request, const std::optional<NsiId>& nsi_id = std::nullopt) const;
    void instantiate(const PlanDelta& delta, ManagementMode mode);
    // translate + plan + instantiate; returns the new slice id.
    NsiId request(const ServiceRequest& request, ManagementMode mode,
                  const std::optional<NsiId>& nsi_id = std::nullopt);

    void transition(const NsiId& nsi, LifecycleState target, Actor actor);
    void register_peer(PeeringAgreement agreement);
    void import_foreign_nssi(const NsiId& nsi, const NssiId& foreign_nssi, Units units);
    void bind_service(ServiceBinding binding);

private:
    PlanDelta plan_locked(const ServiceRequest& request, const std::optional<NsiId>& nsi_id) const;
    DeploymentScenario scenario_locked() const;

    mutable std::mutex mutex_;
    NetworkPlan plan_;
    ScenarioKind kind_;
    bool multi_location_;
    PlannerOptions options_;
};

} // namespace uoslice
