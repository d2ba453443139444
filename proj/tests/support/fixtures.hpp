#pragma once

#include "uoslice/errors.hpp"
#include "uoslice/model.hpp"
#include "uoslice/scenario.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <set>
#include <string>
#include <vector>

// Terse constructors for hand-written test plans.
namespace uoslice::test {

inline Domain micro(std::string id = "uo") { return {DomainId(std::move(id)), DomainKind::MicroOperator, ""}; }
inline Domain mno(std::string id) { return {DomainId(std::move(id)), DomainKind::Mno, ""}; }

inline Nssi nssi(std::string id, SubnetKind kind, std::string owner = "uo", Units capacity = 10, bool sharable = true,
                 std::optional<Location> location = std::nullopt) {
    Nssi n;
    n.id = NssiId(std::move(id));
    n.kind = kind;
    n.owner = DomainId(std::move(owner));
    n.capacity = capacity;
    n.sharable = sharable;
    n.location = std::move(location);
    return n;
}

inline Tenant tenant(std::string id, SubscriberClass cls = SubscriberClass::PrivateTenant,
                     std::set<Location> locations = {"site"}, bool need = false,
                     std::optional<std::string> home = std::nullopt) {
    Tenant t;
    t.id = TenantId(std::move(id));
    t.subscriber_class = cls;
    t.locations = std::move(locations);
    t.external_connectivity_need = need;
    if (home) t.home_mno = DomainId(*home);
    return t;
}

inline Tenant subscribers(std::string id, std::string home, std::set<Location> locations = {"site"}) {
    return tenant(std::move(id), SubscriberClass::MnoSubscriberGroup, std::move(locations), false, std::move(home));
}

inline Nsi nsi(std::string id, std::string tenant_id, std::vector<std::string> constituents,
               LifecycleState state = LifecycleState::Active, ManagementMode mode = ManagementMode::Predefined) {
    Nsi n;
    n.id = NsiId(std::move(id));
    n.tenant = TenantId(std::move(tenant_id));
    for (auto& c : constituents) n.constituents.emplace_back(std::move(c));
    n.lifecycle = state;
    n.mode = mode;
    return n;
}

inline ServiceRequest request(std::string id, std::string tenant_id, Units demand = 1,
                              std::set<Location> locations = {"site"}) {
    ServiceRequest r;
    r.id = RequestId(std::move(id));
    r.tenant = TenantId(std::move(tenant_id));
    r.demand = demand;
    r.locations = std::move(locations);
    return r;
}

inline ServiceRequest ultra_low(ServiceRequest r) {
    r.latency = LatencyClass::UltraLow;
    return r;
}

inline ServiceRequest wide_area(ServiceRequest r) {
    r.wide_area = true;
    return r;
}

inline DeploymentScenario scenario(ScenarioKind kind, int peers = 0, bool multi = false, bool need = false) {
    return {kind, peers, multi, need};
}

// Agreement letting the micro-operator use the listed MNO NSSIs.
inline PeeringAgreement uses_mno(std::string mno_id, std::set<std::string> exported) {
    PeeringAgreement a;
    a.mno = DomainId(std::move(mno_id));
    a.direction = PeeringDirection::MicroOperatorUsesMno;
    for (auto& e : exported) a.exported_nssis.emplace(e);
    return a;
}

// Code of the SliceError thrown by `f`, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const SliceError& e) {
        return e.code();
    }
    return std::nullopt;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace uoslice::test
