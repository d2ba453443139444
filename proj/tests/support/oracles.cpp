#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace uoslice::oracle {

namespace {

bool owned_locally(const NetworkPlan& plan, const NssiId& id) {
    auto n = plan.nssis.find(id);
    if (n == plan.nssis.end()) return true;
    auto d = plan.domains.find(n->second.owner);
    return d != plan.domains.end() && d->second.kind == DomainKind::MicroOperator;
}

std::map<NssiId, int> reference_counts(const NetworkPlan& plan) {
    std::map<NssiId, int> refs;
    for (const auto& [id, nsi] : plan.nsis) {
        std::set<NssiId> distinct(nsi.constituents.begin(), nsi.constituents.end());
        for (const auto& c : distinct) ++refs[c];
    }
    return refs;
}

bool resolvable(const NetworkPlan& plan, const Nsi& nsi) {
    for (const auto& c : nsi.constituents)
        if (!plan.nssis.contains(c)) return false;
    return true;
}

bool share(const Nsi& a, const Nsi& b) {
    for (const auto& x : a.constituents)
        for (const auto& y : b.constituents)
            if (x == y) return true;
    return false;
}

int peers(const NetworkPlan& plan) {
    std::set<DomainId> mnos;
    for (const auto& a : plan.agreements) mnos.insert(a.mno);
    return static_cast<int>(mnos.size());
}

bool any_need(const NetworkPlan& plan) {
    for (const auto& [id, t] : plan.tenants)
        if (t.external_connectivity_need) return true;
    return false;
}

SubscriberClass class_of(const NetworkPlan& plan, const Nsi& nsi) {
    auto t = plan.tenants.find(nsi.tenant);
    return t == plan.tenants.end() ? SubscriberClass::PrivateTenant : t->second.subscriber_class;
}

bool tenant_needs(const NetworkPlan& plan, const Nsi& nsi) {
    auto t = plan.tenants.find(nsi.tenant);
    return t != plan.tenants.end() && t->second.external_connectivity_need;
}

} // namespace

namespace {

NsiType type_with(const NetworkPlan& plan, const Nsi& nsi, const std::map<NssiId, int>& refs) {
    if (!nsi.linked_foreign_nsis.empty()) return NsiType::Type3;
    for (const auto& c : nsi.constituents)
        if (!owned_locally(plan, c)) return NsiType::Type3;
    for (const auto& c : nsi.constituents)
        if (refs.at(c) >= 2) return NsiType::Type2;
    return NsiType::Type1;
}

} // namespace

NsiType nsi_type(const NetworkPlan& plan, const NsiId& id) {
    return type_with(plan, plan.nsis.at(id), reference_counts(plan));
}

std::set<NsiType> table_row(ScenarioKind kind, int peered_mnos, bool external_need) {
    using enum NsiType;
    switch (kind) {
        case ScenarioKind::ClosedA: return {Type1, Type2};
        case ScenarioKind::ClosedB:
            if (external_need) return {Type1, Type2, Type3};
            return {Type1, Type2};
        case ScenarioKind::OpenMNO:
            if (peered_mnos == 1) return {Type3};
            return {Type2, Type3};
        case ScenarioKind::OpenPublic: return {Type1};
        case ScenarioKind::MixedOptionA: return {Type1, Type2, Type3};
        case ScenarioKind::MixedOptionB: return {Type1, Type2, Type3};
    }
    return {};
}

std::set<Finding> violations(const NetworkPlan& plan, ScenarioKind kind, bool) {
    std::set<Finding> out;
    const bool need = any_need(plan);
    const auto allowed = table_row(kind, peers(plan), need);
    const bool mixed = kind == ScenarioKind::MixedOptionA || kind == ScenarioKind::MixedOptionB;
    const auto refs = reference_counts(plan);

    std::map<NsiId, NsiType> types;
    for (const auto& [id, nsi] : plan.nsis)
        if (resolvable(plan, nsi)) types[id] = type_with(plan, nsi, refs);

    // composition
    for (const auto& [id, nsi] : plan.nsis) {
        bool bad = nsi.constituents.size() < 2;
        std::set<NssiId> distinct(nsi.constituents.begin(), nsi.constituents.end());
        bad = bad || distinct.size() != nsi.constituents.size();
        bool an = false, cn = false;
        for (const auto& c : distinct) {
            auto n = plan.nssis.find(c);
            if (n == plan.nssis.end()) {
                bad = true;
                continue;
            }
            (n->second.kind == SubnetKind::AN ? an : cn) = true;
            if (!n->second.sharable && refs.at(c) > 1) bad = true;
        }
        if (bad || !an || !cn) out.insert({"CompositionError", id.str()});
    }

    // (a)
    for (const auto& [id, type] : types) {
        if (kind == ScenarioKind::OpenMNO && class_of(plan, plan.nsis.at(id)) == SubscriberClass::GeneralPublic) continue;
        if (!allowed.contains(type)) out.insert({"ForbiddenNsiType", id.str()});
    }

    // (b)
    if (kind == ScenarioKind::ClosedA || (kind == ScenarioKind::ClosedB && !need)) {
        for (const auto& [id, nsi] : plan.nsis)
            for (const auto& c : nsi.constituents)
                if (plan.nssis.contains(c) && !owned_locally(plan, c)) out.insert({"ForeignConstituentInClosed", c.str()});
    }

    // (c)
    if (kind == ScenarioKind::ClosedB || mixed) {
        for (const auto& [id, type] : types) {
            const Nsi& nsi = plan.nsis.at(id);
            if (type != NsiType::Type3 || tenant_needs(plan, nsi)) continue;
            if (mixed && class_of(plan, nsi) != SubscriberClass::PrivateTenant) continue;
            out.insert({"Type3WithoutExternalNeed", id.str()});
        }
    }
    if (kind == ScenarioKind::ClosedB) {
        for (const auto& [id, type] : types) {
            const Nsi& nsi = plan.nsis.at(id);
            if (type == NsiType::Type3 || tenant_needs(plan, nsi)) continue;
            for (const auto& [other, other_type] : types)
                if (other != id && other_type == NsiType::Type3 && share(nsi, plan.nsis.at(other)))
                    out.insert({"SharesWithType3", id.str(), true});
        }
    }

    // (d)
    for (const auto& [tid, t] : plan.tenants) {
        if (t.subscriber_class != SubscriberClass::GeneralPublic) continue;
        std::vector<NsiId> serving;
        for (const auto& [id, nsi] : plan.nsis)
            if (nsi.tenant == tid) serving.push_back(id);
        if (serving.empty()) out.insert({"PublicSliceMissing", tid.str()});
        if (serving.size() > 1) out.insert({"PublicSliceDuplicated", tid.str()});
        for (const auto& id : serving) {
            bool shared_with_subscribers = false;
            for (const auto& [other, onsi] : plan.nsis)
                if (other != id && class_of(plan, onsi) == SubscriberClass::MnoSubscriberGroup &&
                    share(plan.nsis.at(id), onsi))
                    shared_with_subscribers = true;
            if (shared_with_subscribers)
                out.insert({"PublicSliceShared", id.str()});
            else if (types.contains(id) && types.at(id) != NsiType::Type1)
                out.insert({"PublicSliceNotType1", id.str()});
        }
    }

    // (e)
    if (kind == ScenarioKind::OpenMNO) {
        for (const auto& [id, nsi] : plan.nsis) {
            auto t = plan.tenants.find(nsi.tenant);
            if (t == plan.tenants.end() || t->second.subscriber_class != SubscriberClass::MnoSubscriberGroup) continue;
            bool home = false;
            for (const auto& c : nsi.constituents) {
                auto n = plan.nssis.find(c);
                if (n != plan.nssis.end() && t->second.home_mno && n->second.owner == *t->second.home_mno) home = true;
            }
            if (!home) out.insert({"MnoSubscriberSliceNotFederated", id.str()});
        }
    }

    // (f)
    std::map<NssiId, Units> reserved;
    for (const auto& r : plan.ledger.reservations()) reserved[r.nssi] += r.units;
    for (const auto& [id, units] : reserved) {
        auto n = plan.nssis.find(id);
        if (n != plan.nssis.end() && units > n->second.capacity) out.insert({"CapacityExceeded", id.str()});
    }
    return out;
}

std::set<Finding> findings_of(const std::vector<RuleViolation>& violations) {
    std::set<Finding> out;
    for (const auto& v : violations)
        out.insert({std::string(to_string(v.code)), v.subject, v.severity == Severity::Warning});
    return out;
}

namespace {

using Key = std::pair<std::string, std::string>;

std::set<Key> keys(const std::set<Finding>& findings) {
    std::set<Key> out;
    for (const auto& f : findings) out.emplace(f.code, f.subject);
    return out;
}

bool well_formed(ScenarioKind kind, bool multi, int peered, bool need) {
    if (kind == ScenarioKind::ClosedA && multi) return false;
    if (kind == ScenarioKind::ClosedB && !multi) return false;
    if (kind == ScenarioKind::OpenMNO && peered < 1) return false;
    const bool closed = kind == ScenarioKind::ClosedA || kind == ScenarioKind::ClosedB;
    if (closed && !need && peered != 0) return false;
    return true;
}

std::map<NssiId, Units> residuals(const NetworkPlan& plan) {
    std::map<NssiId, Units> out;
    for (const auto& [id, n] : plan.nssis) out[id] = n.capacity;
    for (const auto& r : plan.ledger.reservations()) out[r.nssi] -= r.units;
    return out;
}

} // namespace

bool plan_feasible(const NetworkPlan& plan, const ServiceRequest& request, ScenarioKind kind, bool multi_location,
                   Units fresh_capacity) {
    if (!well_formed(kind, multi_location, peers(plan), any_need(plan))) return false;
    auto tenant_it = plan.tenants.find(request.tenant);
    if (tenant_it == plan.tenants.end() || request.demand <= 0 || request.locations.empty()) return false;
    const Tenant& tenant = tenant_it->second;
    for (const auto& l : request.locations)
        if (!tenant.locations.contains(l)) return false;

    const bool isolated = request.latency == LatencyClass::UltraLow || request.isolation == IsolationClass::Exclusive;
    const bool subscriber_in_open =
        kind == ScenarioKind::OpenMNO && tenant.subscriber_class == SubscriberClass::MnoSubscriberGroup;
    const bool needs_foreign = request.wide_area || subscriber_in_open;
    if (isolated && needs_foreign) return false;
    const NsiType ceiling = needs_foreign ? NsiType::Type3 : NsiType::Type2;

    std::optional<DomainId> micro;
    for (const auto& [id, d] : plan.domains)
        if (d.kind == DomainKind::MicroOperator) micro = id;
    if (!micro) return false;
    const auto residual = residuals(plan);

    auto local_candidates = [&](SubnetKind k) {
        std::vector<std::optional<NssiId>> out{std::nullopt}; // nullopt: fresh
        for (const auto& [id, n] : plan.nssis) {
            if (n.kind != k || n.owner != *micro) continue;
            if (n.location && !request.locations.contains(*n.location)) continue;
            if (residual.at(id) < request.demand) continue;
            out.emplace_back(id);
        }
        return out;
    };
    std::vector<std::optional<NssiId>> foreign{std::nullopt};
    for (const auto& [id, n] : plan.nssis) {
        if (n.owner == *micro) continue;
        if (subscriber_in_open && n.owner != *tenant.home_mno) continue;
        bool exported = false;
        for (const auto& a : plan.agreements)
            if (a.mno == n.owner && a.exported_nssis.contains(id) &&
                a.direction != PeeringDirection::MnoUsesMicroOperator)
                exported = true;
        if (exported && residual.at(id) >= request.demand) foreign.emplace_back(id);
    }

    const auto baseline = keys(violations(plan, kind, multi_location));
    const NsiId new_id("oracle-nsi");
    for (const auto& an : local_candidates(SubnetKind::AN)) {
        for (const auto& cn : local_candidates(SubnetKind::CN)) {
            for (const auto& f : foreign) {
                if (needs_foreign && !f) continue;
                NetworkPlan trial = plan;
                Nsi nsi;
                nsi.id = new_id;
                nsi.tenant = request.tenant;
                int fresh = 0;
                for (auto [pick, k] : {std::pair{an, SubnetKind::AN}, std::pair{cn, SubnetKind::CN}}) {
                    NssiId c;
                    if (pick) {
                        c = *pick;
                    } else {
                        c = NssiId("oracle-fresh-" + std::to_string(fresh++));
                        Nssi n;
                        n.id = c;
                        n.kind = k;
                        n.owner = *micro;
                        n.sharable = !isolated;
                        n.capacity = isolated ? request.demand : std::max(request.demand, fresh_capacity);
                        trial.ledger.track(c, n.capacity);
                        trial.nssis.emplace(c, n);
                    }
                    nsi.constituents.push_back(c);
                }
                if (f) nsi.constituents.push_back(*f);
                trial.nsis.emplace(new_id, nsi);
                for (const auto& c : nsi.constituents) trial.ledger.restore(c, new_id, request.demand);

                const NsiType type = nsi_type(trial, new_id);
                if (isolated ? type != NsiType::Type1 : type > ceiling) continue;
                const auto after = keys(violations(trial, kind, multi_location));
                if (std::includes(baseline.begin(), baseline.end(), after.begin(), after.end())) return true;
            }
        }
    }
    return false;
}

} // namespace uoslice::oracle
