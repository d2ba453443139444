#pragma once

#include "uoslice/ids.hpp"
#include "uoslice/resources.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace uoslice {

using Location = std::string;

enum class DomainKind { MicroOperator, Mno };
enum class SubnetKind { AN, CN };
enum class NsiType { Type1, Type2, Type3 };
enum class LifecycleState { Planned, Instantiated, Active, Decommissioned };
enum class ManagementMode { Request, Predefined };
enum class Actor { Tenant, Operator };
enum class SubscriberClass { PrivateTenant, MnoSubscriberGroup, GeneralPublic };
enum class LatencyClass { UltraLow, Normal };
enum class IsolationClass { Exclusive, Shared };
enum class ReliabilityClass { High, Normal };
enum class PeeringDirection { MicroOperatorUsesMno, MnoUsesMicroOperator, Bidirectional };

std::string_view to_string(DomainKind v) noexcept;
std::string_view to_string(SubnetKind v) noexcept;
std::string_view to_string(NsiType v) noexcept;
std::string_view to_string(LifecycleState v) noexcept;
std::string_view to_string(ManagementMode v) noexcept;
std::string_view to_string(Actor v) noexcept;
std::string_view to_string(SubscriberClass v) noexcept;
std::string_view to_string(LatencyClass v) noexcept;
std::string_view to_string(IsolationClass v) noexcept;
std::string_view to_string(ReliabilityClass v) noexcept;
std::string_view to_string(PeeringDirection v) noexcept;

// Inverse of to_string; returns false and leaves `out` untouched on no match.
bool parse_enum(std::string_view text, DomainKind& out);
bool parse_enum(std::string_view text, SubnetKind& out);
bool parse_enum(std::string_view text, NsiType& out);
bool parse_enum(std::string_view text, LifecycleState& out);
bool parse_enum(std::string_view text, ManagementMode& out);
bool parse_enum(std::string_view text, Actor& out);
bool parse_enum(std::string_view text, SubscriberClass& out);
bool parse_enum(std::string_view text, LatencyClass& out);
bool parse_enum(std::string_view text, IsolationClass& out);
bool parse_enum(std::string_view text, ReliabilityClass& out);
bool parse_enum(std::string_view text, PeeringDirection& out);

// The party that runs a slice through its lifecycle.
constexpr Actor manager_of(ManagementMode mode) noexcept {
    return mode == ManagementMode::Request ? Actor::Tenant : Actor::Operator;
}

struct Domain {
    DomainId id;
    DomainKind kind = DomainKind::MicroOperator;
    std::string name;

    friend bool operator==(const Domain&, const Domain&) = default;
};

struct Nssi {
    NssiId id;
    SubnetKind kind = SubnetKind::AN;
    DomainId owner;
    bool sharable = true;
    Units capacity = 0;
    std::optional<Location> location;
    std::set<std::string> nf_labels;

    friend bool operator==(const Nssi&, const Nssi&) = default;
};

struct Nsi {
    NsiId id;
    TenantId tenant;
    std::vector<NssiId> constituents; // insertion-ordered, no duplicates
    std::set<ForeignNsiId> linked_foreign_nsis;
    LifecycleState lifecycle = LifecycleState::Planned;
    ManagementMode mode = ManagementMode::Predefined;

    Actor manager() const noexcept { return manager_of(mode); }

    friend bool operator==(const Nsi&, const Nsi&) = default;
};

struct Tenant {
    TenantId id;
    SubscriberClass subscriber_class = SubscriberClass::PrivateTenant;
    std::optional<DomainId> home_mno; // set iff MnoSubscriberGroup
    std::set<Location> locations;
    bool external_connectivity_need = false;

    friend bool operator==(const Tenant&, const Tenant&) = default;
};

struct ServiceRequest {
    RequestId id;
    TenantId tenant;
    LatencyClass latency = LatencyClass::Normal;
    IsolationClass isolation = IsolationClass::Shared;
    ReliabilityClass reliability = ReliabilityClass::Normal;
    bool wide_area = false;
    Units demand = 1;
    std::set<Location> locations;

    friend bool operator==(const ServiceRequest&, const ServiceRequest&) = default;
};

// Federation records live in the plan so that every foreign constituent can
// be traced back to the agreement that exported it.
struct PeeringAgreement {
    DomainId mno;
    PeeringDirection direction = PeeringDirection::MicroOperatorUsesMno;
    std::set<NssiId> exported_nssis;       // MNO-owned, offered to the micro-operator
    std::set<NssiId> exported_local_nssis; // micro-operator-owned, offered to the MNO
    std::set<ForeignNsiId> foreign_nsis;   // MNO slices usable in service bindings

    friend bool operator==(const PeeringAgreement&, const PeeringAgreement&) = default;
};

constexpr bool permits_local_use(PeeringDirection d) noexcept {
    return d != PeeringDirection::MnoUsesMicroOperator;
}
constexpr bool permits_mno_use(PeeringDirection d) noexcept {
    return d != PeeringDirection::MicroOperatorUsesMno;
}

struct ServiceBinding {
    RequestId service;
    std::set<NsiId> local_nsis;
    std::set<ForeignNsiId> foreign_nsis;

    friend bool operator==(const ServiceBinding&, const ServiceBinding&) = default;
};

// Full network state. Maps are keyed by id so iteration order never depends
// on the order entities were declared in.
struct NetworkPlan {
    std::map<DomainId, Domain> domains;
    std::map<NssiId, Nssi> nssis;
    std::map<NsiId, Nsi> nsis;    // live slices
    std::map<NsiId, Nsi> retired; // decommissioned slices, kept for id reservation and audit
    std::map<TenantId, Tenant> tenants;
    std::vector<PeeringAgreement> agreements; // append-only
    std::map<RequestId, ServiceBinding> bindings;
    CapacityLedger ledger;
    std::uint64_t version = 0;

    friend bool operator==(const NetworkPlan&, const NetworkPlan&) = default;

    const Nsi& nsi(const NsiId& id) const;
    const Nssi& nssi(const NssiId& id) const;
    const Tenant& tenant(const TenantId& id) const;
    const Domain& domain(const DomainId& id) const;

    // The unique MicroOperator domain, if declared.
    std::optional<DomainId> micro_operator() const;
    bool is_foreign(const Nssi& nssi) const;

    // Ids of live slices listing `nssi` as a constituent.
    std::vector<NsiId> users_of(const NssiId& nssi) const;
    // Distinct MNO domains that have registered at least one agreement.
    int peered_mno_count() const;
};

// Checked builders. Each enforces the entity's invariants against the plan
// and throws SliceError on violation; none of them bumps the version.
void add_domain(NetworkPlan& plan, Domain domain);
void add_nssi(NetworkPlan& plan, Nssi nssi);
void add_tenant(NetworkPlan& plan, Tenant tenant);
// Inserts a slice with a fixed per-constituent reservation of `units`,
// bypassing admission so that declared overcommit remains observable.
void add_declared_nsi(NetworkPlan& plan, Nsi nsi, Units units);

// Referential-integrity problems (unresolved owners, tenants, agreement
// exports, binding targets, ledger/NSSI capacity mismatch). Empty when the
// plan is internally consistent.
std::vector<std::string> consistency_problems(const NetworkPlan& plan);

} // namespace uoslice
