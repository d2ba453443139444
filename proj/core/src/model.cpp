#include "uoslice/model.hpp"

#include "uoslice/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace uoslice {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnknownNsi: return "UnknownNsi";
        case ErrorCode::UnknownNssi: return "UnknownNssi";
        case ErrorCode::UnknownDomain: return "UnknownDomain";
        case ErrorCode::UnknownTenant: return "UnknownTenant";
        case ErrorCode::DanglingConstituent: return "DanglingConstituent";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::DuplicateConstituent: return "DuplicateConstituent";
        case ErrorCode::InvalidEntity: return "InvalidEntity";
        case ErrorCode::MalformedScenario: return "MalformedScenario";
        case ErrorCode::InconsistentPlan: return "InconsistentPlan";
        case ErrorCode::ContradictoryRequirement: return "ContradictoryRequirement";
        case ErrorCode::InvalidRequest: return "InvalidRequest";
        case ErrorCode::ScenarioForbidsFederation: return "ScenarioForbidsFederation";
        case ErrorCode::NoPeeredMno: return "NoPeeredMno";
        case ErrorCode::ForeignCapacityExhausted: return "ForeignCapacityExhausted";
        case ErrorCode::RuleUnsatisfiable: return "RuleUnsatisfiable";
        case ErrorCode::StalePlanVersion: return "StalePlanVersion";
        case ErrorCode::CapacityRace: return "CapacityRace";
        case ErrorCode::IllegalTransition: return "IllegalTransition";
        case ErrorCode::WrongActor: return "WrongActor";
        case ErrorCode::NonSharableExport: return "NonSharableExport";
        case ErrorCode::InvalidAgreement: return "InvalidAgreement";
        case ErrorCode::NotExported: return "NotExported";
        case ErrorCode::WrongScenario: return "WrongScenario";
        case ErrorCode::UnknownForeignNsi: return "UnknownForeignNsi";
        case ErrorCode::InsufficientCapacity: return "InsufficientCapacity";
        case ErrorCode::DuplicateReservation: return "DuplicateReservation";
        case ErrorCode::NoSuchReservation: return "NoSuchReservation";
        case ErrorCode::InvalidUnits: return "InvalidUnits";
    }
    return "Unknown";
}

SliceError::SliceError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

template <class E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<DomainKind, 2> kDomainKinds{{{DomainKind::MicroOperator, "MicroOperator"}, {DomainKind::Mno, "MNO"}}};
constexpr NameTable<SubnetKind, 2> kSubnetKinds{{{SubnetKind::AN, "AN"}, {SubnetKind::CN, "CN"}}};
constexpr NameTable<NsiType, 3> kNsiTypes{{{NsiType::Type1, "Type1"}, {NsiType::Type2, "Type2"}, {NsiType::Type3, "Type3"}}};
constexpr NameTable<LifecycleState, 4> kLifecycle{{{LifecycleState::Planned, "Planned"},
                                                   {LifecycleState::Instantiated, "Instantiated"},
                                                   {LifecycleState::Active, "Active"},
                                                   {LifecycleState::Decommissioned, "Decommissioned"}}};
constexpr NameTable<ManagementMode, 2> kModes{{{ManagementMode::Request, "RequestMode"},
                                               {ManagementMode::Predefined, "PredefinedMode"}}};
constexpr NameTable<Actor, 2> kActors{{{Actor::Tenant, "Tenant"}, {Actor::Operator, "Operator"}}};
constexpr NameTable<SubscriberClass, 3> kSubscriberClasses{{{SubscriberClass::PrivateTenant, "PrivateTenant"},
                                                            {SubscriberClass::MnoSubscriberGroup, "MnoSubscriberGroup"},
                                                            {SubscriberClass::GeneralPublic, "GeneralPublic"}}};
constexpr NameTable<LatencyClass, 2> kLatency{{{LatencyClass::UltraLow, "UltraLow"}, {LatencyClass::Normal, "Normal"}}};
constexpr NameTable<IsolationClass, 2> kIsolation{{{IsolationClass::Exclusive, "Exclusive"},
                                                   {IsolationClass::Shared, "Shared"}}};
constexpr NameTable<ReliabilityClass, 2> kReliability{{{ReliabilityClass::High, "High"},
                                                       {ReliabilityClass::Normal, "Normal"}}};
constexpr NameTable<PeeringDirection, 3> kDirections{{{PeeringDirection::MicroOperatorUsesMno, "MicroOperatorUsesMno"},
                                                      {PeeringDirection::MnoUsesMicroOperator, "MnoUsesMicroOperator"},
                                                      {PeeringDirection::Bidirectional, "Bidirectional"}}};

template <class E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) noexcept {
    for (const auto& [v, name] : table)
        if (v == value) return name;
    return "?";
}

template <class E, std::size_t N>
bool value_of(const NameTable<E, N>& table, std::string_view text, E& out) {
    for (const auto& [v, name] : table) {
        if (name == text) {
            out = v;
            return true;
        }
    }
    return false;
}

} // namespace

std::string_view to_string(DomainKind v) noexcept { return name_of(kDomainKinds, v); }
std::string_view to_string(SubnetKind v) noexcept { return name_of(kSubnetKinds, v); }
std::string_view to_string(NsiType v) noexcept { return name_of(kNsiTypes, v); }
std::string_view to_string(LifecycleState v) noexcept { return name_of(kLifecycle, v); }
std::string_view to_string(ManagementMode v) noexcept { return name_of(kModes, v); }
std::string_view to_string(Actor v) noexcept { return name_of(kActors, v); }
std::string_view to_string(SubscriberClass v) noexcept { return name_of(kSubscriberClasses, v); }
std::string_view to_string(LatencyClass v) noexcept { return name_of(kLatency, v); }
std::string_view to_string(IsolationClass v) noexcept { return name_of(kIsolation, v); }
std::string_view to_string(ReliabilityClass v) noexcept { return name_of(kReliability, v); }
std::string_view to_string(PeeringDirection v) noexcept { return name_of(kDirections, v); }

bool parse_enum(std::string_view t, DomainKind& out) { return value_of(kDomainKinds, t, out); }
bool parse_enum(std::string_view t, SubnetKind& out) { return value_of(kSubnetKinds, t, out); }
bool parse_enum(std::string_view t, NsiType& out) { return value_of(kNsiTypes, t, out); }
bool parse_enum(std::string_view t, LifecycleState& out) { return value_of(kLifecycle, t, out); }
bool parse_enum(std::string_view t, ManagementMode& out) { return value_of(kModes, t, out); }
bool parse_enum(std::string_view t, Actor& out) { return value_of(kActors, t, out); }
bool parse_enum(std::string_view t, SubscriberClass& out) { return value_of(kSubscriberClasses, t, out); }
bool parse_enum(std::string_view t, LatencyClass& out) { return value_of(kLatency, t, out); }
bool parse_enum(std::string_view t, IsolationClass& out) { return value_of(kIsolation, t, out); }
bool parse_enum(std::string_view t, ReliabilityClass& out) { return value_of(kReliability, t, out); }
bool parse_enum(std::string_view t, PeeringDirection& out) { return value_of(kDirections, t, out); }

const Nsi& NetworkPlan::nsi(const NsiId& id) const {
    auto it = nsis.find(id);
    if (it == nsis.end()) throw SliceError(ErrorCode::UnknownNsi, "no live slice '" + id.str() + "'");
    return it->second;
}

const Nssi& NetworkPlan::nssi(const NssiId& id) const {
    auto it = nssis.find(id);
    if (it == nssis.end()) throw SliceError(ErrorCode::UnknownNssi, "no NSSI '" + id.str() + "'");
    return it->second;
}

const Tenant& NetworkPlan::tenant(const TenantId& id) const {
    auto it = tenants.find(id);
    if (it == tenants.end()) throw SliceError(ErrorCode::UnknownTenant, "no tenant '" + id.str() + "'");
    return it->second;
}

const Domain& NetworkPlan::domain(const DomainId& id) const {
    auto it = domains.find(id);
    if (it == domains.end()) throw SliceError(ErrorCode::UnknownDomain, "no domain '" + id.str() + "'");
    return it->second;
}

std::optional<DomainId> NetworkPlan::micro_operator() const {
    for (const auto& [id, d] : domains)
        if (d.kind == DomainKind::MicroOperator) return id;
    return std::nullopt;
}

bool NetworkPlan::is_foreign(const Nssi& n) const {
    auto it = domains.find(n.owner);
    return it == domains.end() || it->second.kind != DomainKind::MicroOperator;
}

std::vector<NsiId> NetworkPlan::users_of(const NssiId& nssi) const {
    std::vector<NsiId> out;
    for (const auto& [id, n] : nsis)
        if (std::find(n.constituents.begin(), n.constituents.end(), nssi) != n.constituents.end()) out.push_back(id);
    return out;
}

int NetworkPlan::peered_mno_count() const {
    std::set<DomainId> peers;
    for (const auto& a : agreements) peers.insert(a.mno);
    return static_cast<int>(peers.size());
}

void add_domain(NetworkPlan& plan, Domain domain) {
    if (domain.id.empty()) throw SliceError(ErrorCode::InvalidEntity, "domain id is empty");
    if (plan.domains.contains(domain.id))
        throw SliceError(ErrorCode::DuplicateId, "domain '" + domain.id.str() + "' declared twice");
    if (domain.kind == DomainKind::MicroOperator && plan.micro_operator())
        throw SliceError(ErrorCode::InvalidEntity, "a plan has exactly one MicroOperator domain; '" +
                                                       plan.micro_operator()->str() + "' already declared");
    plan.domains.emplace(domain.id, std::move(domain));
}

void add_nssi(NetworkPlan& plan, Nssi nssi) {
    if (nssi.id.empty()) throw SliceError(ErrorCode::InvalidEntity, "NSSI id is empty");
    if (plan.nssis.contains(nssi.id))
        throw SliceError(ErrorCode::DuplicateId, "NSSI '" + nssi.id.str() + "' declared twice");
    if (!plan.domains.contains(nssi.owner))
        throw SliceError(ErrorCode::UnknownDomain,
                         "NSSI '" + nssi.id.str() + "' owned by undeclared domain '" + nssi.owner.str() + "'");
    if (nssi.capacity < 0)
        throw SliceError(ErrorCode::InvalidUnits, "NSSI '" + nssi.id.str() + "' has negative capacity");
    plan.ledger.track(nssi.id, nssi.capacity);
    plan.nssis.emplace(nssi.id, std::move(nssi));
}

void add_tenant(NetworkPlan& plan, Tenant tenant) {
    if (tenant.id.empty()) throw SliceError(ErrorCode::InvalidEntity, "tenant id is empty");
    if (plan.tenants.contains(tenant.id))
        throw SliceError(ErrorCode::DuplicateId, "tenant '" + tenant.id.str() + "' declared twice");
    if (tenant.locations.empty())
        throw SliceError(ErrorCode::InvalidEntity, "tenant '" + tenant.id.str() + "' has no locations");
    const bool subscriber = tenant.subscriber_class == SubscriberClass::MnoSubscriberGroup;
    if (subscriber != tenant.home_mno.has_value())
        throw SliceError(ErrorCode::InvalidEntity,
                         "tenant '" + tenant.id.str() + "': home_mno is required exactly for MnoSubscriberGroup");
    if (subscriber) {
        auto it = plan.domains.find(*tenant.home_mno);
        if (it == plan.domains.end() || it->second.kind != DomainKind::Mno)
            throw SliceError(ErrorCode::UnknownDomain, "tenant '" + tenant.id.str() + "' home_mno '" +
                                                           tenant.home_mno->str() + "' is not an MNO domain");
    }
    if (tenant.subscriber_class == SubscriberClass::GeneralPublic) {
        for (const auto& [id, t] : plan.tenants)
            if (t.subscriber_class == SubscriberClass::GeneralPublic)
                throw SliceError(ErrorCode::InvalidEntity, "only one GeneralPublic tenant per plan; '" + id.str() +
                                                               "' already declared");
    }
    plan.tenants.emplace(tenant.id, std::move(tenant));
}

void add_declared_nsi(NetworkPlan& plan, Nsi nsi, Units units) {
    if (nsi.id.empty()) throw SliceError(ErrorCode::InvalidEntity, "NSI id is empty");
    if (plan.nsis.contains(nsi.id) || plan.retired.contains(nsi.id))
        throw SliceError(ErrorCode::DuplicateId, "NSI '" + nsi.id.str() + "' declared twice");
    if (nsi.lifecycle == LifecycleState::Decommissioned)
        throw SliceError(ErrorCode::InvalidEntity, "NSI '" + nsi.id.str() + "' cannot be declared decommissioned");
    if (!plan.tenants.contains(nsi.tenant))
        throw SliceError(ErrorCode::UnknownTenant,
                         "NSI '" + nsi.id.str() + "' references undeclared tenant '" + nsi.tenant.str() + "'");
    if (units <= 0) throw SliceError(ErrorCode::InvalidUnits, "NSI '" + nsi.id.str() + "' reserves non-positive units");
    std::set<NssiId> seen;
    for (const auto& c : nsi.constituents) {
        if (!plan.nssis.contains(c))
            throw SliceError(ErrorCode::DanglingConstituent,
                             "NSI '" + nsi.id.str() + "' references undeclared NSSI '" + c.str() + "'");
        if (!seen.insert(c).second)
            throw SliceError(ErrorCode::DuplicateConstituent,
                             "NSI '" + nsi.id.str() + "' lists NSSI '" + c.str() + "' twice");
    }
    for (const auto& c : nsi.constituents) plan.ledger.restore(c, nsi.id, units);
    plan.nsis.emplace(nsi.id, std::move(nsi));
}

std::vector<std::string> consistency_problems(const NetworkPlan& plan) {
    std::vector<std::string> out;
    for (const auto& [id, n] : plan.nssis) {
        if (!plan.domains.contains(n.owner))
            out.push_back("NSSI '" + id.str() + "' owner '" + n.owner.str() + "' unresolved");
        if (!plan.ledger.tracks(id))
            out.push_back("NSSI '" + id.str() + "' missing from capacity ledger");
        else if (plan.ledger.capacity(id) != n.capacity)
            out.push_back("NSSI '" + id.str() + "' capacity differs from ledger");
    }
    for (const auto& r : plan.ledger.reservations()) {
        if (!plan.nssis.contains(r.nssi)) out.push_back("reservation on unknown NSSI '" + r.nssi.str() + "'");
        if (!plan.nsis.contains(r.nsi)) out.push_back("reservation held by non-live NSI '" + r.nsi.str() + "'");
    }
    for (const auto& [id, n] : plan.nsis)
        if (!plan.tenants.contains(n.tenant))
            out.push_back("NSI '" + id.str() + "' tenant '" + n.tenant.str() + "' unresolved");
    for (const auto& [id, t] : plan.tenants) {
        if (t.home_mno && !plan.domains.contains(*t.home_mno))
            out.push_back("tenant '" + id.str() + "' home_mno unresolved");
    }
    for (const auto& a : plan.agreements) {
        if (!plan.domains.contains(a.mno)) out.push_back("agreement MNO '" + a.mno.str() + "' unresolved");
        for (const auto& e : a.exported_nssis)
            if (!plan.nssis.contains(e)) out.push_back("agreement export '" + e.str() + "' unresolved");
        for (const auto& e : a.exported_local_nssis)
            if (!plan.nssis.contains(e)) out.push_back("agreement local export '" + e.str() + "' unresolved");
    }
    for (const auto& [service, b] : plan.bindings)
        for (const auto& n : b.local_nsis)
            if (!plan.nsis.contains(n))
                out.push_back("binding '" + service.str() + "' local NSI '" + n.str() + "' unresolved");
    if (!plan.domains.empty() && !plan.micro_operator()) out.push_back("no MicroOperator domain declared");
    return out;
}

} // namespace uoslice
