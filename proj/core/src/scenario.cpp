#include "uoslice/scenario.hpp"

#include "uoslice/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace uoslice {

std::string_view to_string(ScenarioKind v) noexcept {
    switch (v) {
        case ScenarioKind::ClosedA: return "ClosedA";
        case ScenarioKind::ClosedB: return "ClosedB";
        case ScenarioKind::OpenMNO: return "OpenMNO";
        case ScenarioKind::OpenPublic: return "OpenPublic";
        case ScenarioKind::MixedOptionA: return "MixedOptionA";
        case ScenarioKind::MixedOptionB: return "MixedOptionB";
    }
    return "?";
}

bool parse_enum(std::string_view text, ScenarioKind& out) {
    for (auto k : kAllScenarioKinds) {
        if (to_string(k) == text) {
            out = k;
            return true;
        }
    }
    return false;
}

std::string_view to_string(RuleCode code) noexcept {
    switch (code) {
        case RuleCode::ForbiddenNsiType: return "ForbiddenNsiType";
        case RuleCode::ForeignConstituentInClosed: return "ForeignConstituentInClosed";
        case RuleCode::PublicSliceShared: return "PublicSliceShared";
        case RuleCode::PublicSliceMissing: return "PublicSliceMissing";
        case RuleCode::PublicSliceDuplicated: return "PublicSliceDuplicated";
        case RuleCode::PublicSliceNotType1: return "PublicSliceNotType1";
        case RuleCode::Type3WithoutExternalNeed: return "Type3WithoutExternalNeed";
        case RuleCode::SharesWithType3: return "SharesWithType3";
        case RuleCode::MnoSubscriberSliceNotFederated: return "MnoSubscriberSliceNotFederated";
        case RuleCode::CompositionError: return "CompositionError";
        case RuleCode::CapacityExceeded: return "CapacityExceeded";
    }
    return "?";
}

std::string_view to_string(Severity s) noexcept { return s == Severity::Error ? "error" : "warning"; }

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
        case Rule::AllowedTypes: return "allowed-types";
        case Rule::ClosedIsolation: return "closed-isolation";
        case Rule::ExternalNeed: return "external-need";
        case Rule::PublicIsolation: return "public-isolation";
        case Rule::MnoFederation: return "mno-federation";
        case Rule::Capacity: return "capacity";
        case Rule::Composition: return "composition";
    }
    return "?";
}

Rule rule_of(RuleCode code) noexcept {
    switch (code) {
        case RuleCode::ForbiddenNsiType: return Rule::AllowedTypes;
        case RuleCode::ForeignConstituentInClosed: return Rule::ClosedIsolation;
        case RuleCode::Type3WithoutExternalNeed:
        case RuleCode::SharesWithType3: return Rule::ExternalNeed;
        case RuleCode::PublicSliceShared:
        case RuleCode::PublicSliceMissing:
        case RuleCode::PublicSliceDuplicated:
        case RuleCode::PublicSliceNotType1: return Rule::PublicIsolation;
        case RuleCode::MnoSubscriberSliceNotFederated: return Rule::MnoFederation;
        case RuleCode::CapacityExceeded: return Rule::Capacity;
        case RuleCode::CompositionError: return Rule::Composition;
    }
    return Rule::Composition;
}

bool canonical_less(const RuleViolation& a, const RuleViolation& b) {
    return std::tuple(rule_of(a.code), a.code, a.subject, a.detail) <
           std::tuple(rule_of(b.code), b.code, b.subject, b.detail);
}

bool has_errors(const std::vector<RuleViolation>& violations) noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [](const RuleViolation& v) { return v.severity == Severity::Error; });
}

bool is_closed(ScenarioKind kind) noexcept { return kind == ScenarioKind::ClosedA || kind == ScenarioKind::ClosedB; }

bool is_mixed(ScenarioKind kind) noexcept {
    return kind == ScenarioKind::MixedOptionA || kind == ScenarioKind::MixedOptionB;
}

DeploymentScenario in_context(ScenarioKind kind, bool multi_location, const NetworkPlan& plan) {
    DeploymentScenario s;
    s.kind = kind;
    s.multi_location = multi_location;
    s.peered_mno_count = plan.peered_mno_count();
    s.external_need = std::any_of(plan.tenants.begin(), plan.tenants.end(),
                                  [](const auto& kv) { return kv.second.external_connectivity_need; });
    return s;
}

namespace {

std::optional<std::string> malformation(const DeploymentScenario& s) {
    if (s.peered_mno_count < 0) return "peered_mno_count is negative";
    if (s.kind == ScenarioKind::ClosedA && s.multi_location) return "ClosedA covers a single location";
    if (s.kind == ScenarioKind::ClosedB && !s.multi_location) return "ClosedB covers multiple locations";
    if (s.kind == ScenarioKind::OpenMNO && s.peered_mno_count < 1) return "OpenMNO needs at least one peered MNO";
    if (is_closed(s.kind) && !s.external_need && s.peered_mno_count != 0)
        return "closed network without externally connecting tenants cannot peer with an MNO";
    return std::nullopt;
}

} // namespace

bool is_well_formed(const DeploymentScenario& scenario) noexcept { return !malformation(scenario).has_value(); }

void require_well_formed(const DeploymentScenario& scenario) {
    if (auto why = malformation(scenario))
        throw SliceError(ErrorCode::MalformedScenario, std::string(to_string(scenario.kind)) + ": " + *why);
}

TypeSet allowed_types(const DeploymentScenario& scenario) {
    require_well_formed(scenario);
    using enum NsiType;
    switch (scenario.kind) {
        case ScenarioKind::ClosedA: return {Type1, Type2};
        case ScenarioKind::ClosedB:
            return scenario.external_need ? TypeSet{Type1, Type2, Type3} : TypeSet{Type1, Type2};
        case ScenarioKind::OpenMNO: return scenario.peered_mno_count == 1 ? TypeSet{Type3} : TypeSet{Type2, Type3};
        case ScenarioKind::OpenPublic: return {Type1};
        case ScenarioKind::MixedOptionA:
        case ScenarioKind::MixedOptionB: return {Type1, Type2, Type3};
    }
    return {};
}

ScenarioRow scenario_row(ScenarioKind kind) noexcept {
    switch (kind) {
        case ScenarioKind::ClosedA:
            return {"Closed", "Deployment A", "single site; Type1 and Type2 only; no external network"};
        case ScenarioKind::ClosedB:
            return {"Closed", "Deployment B",
                    "multiple sites; Type1 and Type2, plus Type3 for tenants that connect externally"};
        case ScenarioKind::OpenMNO:
            return {"Open", "MNO Open", "MNO subscribers; Type3 with one MNO, Type2 and Type3 with several"};
        case ScenarioKind::OpenPublic:
            return {"Open", "Public Open", "general public; one dedicated Type1 slice"};
        case ScenarioKind::MixedOptionA:
            return {"Mixed", "Option A", "Type1, Type2 or Type3; local slices may include MNO NSSIs"};
        case ScenarioKind::MixedOptionB:
            return {"Mixed", "Option B", "Type1, Type2 or Type3; services may combine local and MNO slices"};
    }
    return {"?", "?", "?"};
}

namespace {

std::string scenario_slug(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::ClosedA: return "closed/deployment-a";
        case ScenarioKind::ClosedB: return "closed/deployment-b";
        case ScenarioKind::OpenMNO: return "open/mno-open";
        case ScenarioKind::OpenPublic: return "open/public-open";
        case ScenarioKind::MixedOptionA: return "mixed/option-a";
        case ScenarioKind::MixedOptionB: return "mixed/option-b";
    }
    return "?";
}

std::string type_list(const TypeSet& types) {
    std::string out = "{";
    for (auto t : types) out += (out.size() > 1 ? ", " : "") + std::string(to_string(t));
    return out + "}";
}

std::optional<TenantId> public_tenant(const NetworkPlan& plan) {
    for (const auto& [id, t] : plan.tenants)
        if (t.subscriber_class == SubscriberClass::GeneralPublic) return id;
    return std::nullopt;
}

bool resolves(const NetworkPlan& plan, const Nsi& nsi) {
    return std::all_of(nsi.constituents.begin(), nsi.constituents.end(),
                       [&](const NssiId& c) { return plan.nssis.contains(c); });
}

bool uses(const Nsi& nsi, const NssiId& nssi) {
    return std::find(nsi.constituents.begin(), nsi.constituents.end(), nssi) != nsi.constituents.end();
}

bool shares_constituent(const Nsi& a, const Nsi& b) {
    return std::any_of(a.constituents.begin(), a.constituents.end(), [&](const NssiId& c) { return uses(b, c); });
}

class Checker {
public:
    Checker(const NetworkPlan& plan, const DeploymentScenario& scenario)
        : plan_(plan), scenario_(scenario), allowed_(allowed_types(scenario)),
          slug_(scenario_slug(scenario.kind)) {
        for (const auto& [id, nsi] : plan_.nsis)
            if (resolves(plan_, nsi)) types_.emplace(id, classify(plan_, id).type);
    }

    std::vector<RuleViolation> run() {
        composition();
        allowed_types_rule();
        closed_isolation();
        external_need();
        public_isolation();
        mno_federation();
        capacity();
        std::sort(out_.begin(), out_.end(), canonical_less);
        return std::move(out_);
    }

private:
    void emit(RuleCode code, std::string subject, std::string detail, std::string anchor,
              Severity severity = Severity::Error) {
        out_.push_back({code, severity, std::move(subject), std::move(detail), std::move(anchor)});
    }

    const Tenant* tenant_of(const Nsi& nsi) const {
        auto it = plan_.tenants.find(nsi.tenant);
        return it == plan_.tenants.end() ? nullptr : &it->second;
    }

    void composition() {
        for (const auto& [id, nsi] : plan_.nsis) {
            for (const auto& v : validate_nsi_composition(plan_, id)) {
                emit(RuleCode::CompositionError, id.str(),
                     std::string(to_string(v.code)) + " " + v.subject + ": " + v.detail, "nsi-composition");
            }
        }
    }

    void allowed_types_rule() {
        for (const auto& [id, type] : types_) {
            const Tenant* t = tenant_of(plan_.nsis.at(id));
            // The public slice of an MNO open network is governed by the public isolation rule.
            if (scenario_.kind == ScenarioKind::OpenMNO && t &&
                t->subscriber_class == SubscriberClass::GeneralPublic)
                continue;
            if (!allowed_.contains(type)) {
                emit(RuleCode::ForbiddenNsiType, id.str(),
                     std::string(to_string(type)) + " not in " + type_list(allowed_), "nsi-config/" + slug_);
            }
        }
    }

    void closed_isolation() {
        if (!rule_applies(Rule::ClosedIsolation, plan_, scenario_)) return;
        std::map<NssiId, std::vector<NsiId>> foreign_users;
        for (const auto& [id, nsi] : plan_.nsis) {
            for (const auto& c : nsi.constituents) {
                auto it = plan_.nssis.find(c);
                if (it != plan_.nssis.end() && plan_.is_foreign(it->second)) foreign_users[c].push_back(id);
            }
        }
        for (const auto& [nssi, users] : foreign_users) {
            std::string names;
            for (const auto& u : users) names += (names.empty() ? "" : ", ") + u.str();
            emit(RuleCode::ForeignConstituentInClosed, nssi.str(),
                 "owned by '" + plan_.nssis.at(nssi).owner.str() + "', used by " + names,
                 "closed-isolation/" + slug_);
        }
    }

    void external_need() {
        if (!rule_applies(Rule::ExternalNeed, plan_, scenario_)) return;
        const bool closed_b = scenario_.kind == ScenarioKind::ClosedB;
        for (const auto& [id, type] : types_) {
            const Tenant* t = tenant_of(plan_.nsis.at(id));
            if (!t || t->external_connectivity_need) continue;
            if (!closed_b && t->subscriber_class != SubscriberClass::PrivateTenant) continue;
            if (type == NsiType::Type3) {
                emit(RuleCode::Type3WithoutExternalNeed, id.str(),
                     "tenant '" + t->id.str() + "' has no external connectivity need", "external-need/" + slug_);
            }
        }
        if (!closed_b) return;
        for (const auto& [id, type] : types_) {
            const Tenant* t = tenant_of(plan_.nsis.at(id));
            if (!t || t->external_connectivity_need || type == NsiType::Type3) continue;
            const Nsi& nsi = plan_.nsis.at(id);
            for (const auto& [other, other_type] : types_) {
                if (other == id || other_type != NsiType::Type3) continue;
                if (shares_constituent(nsi, plan_.nsis.at(other))) {
                    emit(RuleCode::SharesWithType3, id.str(), "shares a constituent with Type3 slice '" + other.str() + "'",
                         "external-need/" + slug_, Severity::Warning);
                }
            }
        }
    }

    void public_isolation() {
        auto pub = public_tenant(plan_);
        if (!pub) return;
        std::vector<NsiId> serving;
        for (const auto& [id, nsi] : plan_.nsis)
            if (nsi.tenant == *pub) serving.push_back(id);
        if (serving.empty())
            emit(RuleCode::PublicSliceMissing, pub->str(), "no slice serves the general public",
                 "public-isolation/" + slug_);
        if (serving.size() > 1)
            emit(RuleCode::PublicSliceDuplicated, pub->str(),
                 std::to_string(serving.size()) + " slices serve the general public", "public-isolation/" + slug_);
        for (const auto& id : serving) {
            const Nsi& nsi = plan_.nsis.at(id);
            std::vector<NsiId> subscriber_sharers;
            for (const auto& [other_id, other] : plan_.nsis) {
                if (other_id == id) continue;
                const Tenant* t = tenant_of(other);
                if (t && t->subscriber_class == SubscriberClass::MnoSubscriberGroup && shares_constituent(nsi, other))
                    subscriber_sharers.push_back(other_id);
            }
            if (!subscriber_sharers.empty()) {
                std::string names;
                for (const auto& u : subscriber_sharers) names += (names.empty() ? "" : ", ") + u.str();
                emit(RuleCode::PublicSliceShared, id.str(), "shares constituents with MNO subscriber slice(s) " + names,
                     "public-isolation/" + slug_);
                continue;
            }
            auto type = types_.find(id);
            if (type != types_.end() && type->second != NsiType::Type1) {
                emit(RuleCode::PublicSliceNotType1, id.str(),
                     "public slice classifies " + std::string(to_string(type->second)), "public-isolation/" + slug_);
            }
        }
    }

    void mno_federation() {
        if (!rule_applies(Rule::MnoFederation, plan_, scenario_)) return;
        for (const auto& [id, nsi] : plan_.nsis) {
            const Tenant* t = tenant_of(nsi);
            if (!t || t->subscriber_class != SubscriberClass::MnoSubscriberGroup || !t->home_mno) continue;
            const bool federated = std::any_of(nsi.constituents.begin(), nsi.constituents.end(), [&](const NssiId& c) {
                auto it = plan_.nssis.find(c);
                return it != plan_.nssis.end() && it->second.owner == *t->home_mno;
            });
            if (!federated) {
                emit(RuleCode::MnoSubscriberSliceNotFederated, id.str(),
                     "no constituent owned by home MNO '" + t->home_mno->str() + "'", "mno-federation/" + slug_);
            }
        }
    }

    void capacity() {
        for (const auto& nssi : plan_.ledger.overcommitted()) {
            emit(RuleCode::CapacityExceeded, nssi.str(),
                 "reserved " + std::to_string(plan_.ledger.reserved(nssi)) + " of capacity " +
                     std::to_string(plan_.ledger.capacity(nssi)),
                 "capacity-ledger");
        }
    }

    const NetworkPlan& plan_;
    const DeploymentScenario& scenario_;
    TypeSet allowed_;
    std::string slug_;
    std::map<NsiId, NsiType> types_;
    std::vector<RuleViolation> out_;
};

} // namespace

bool rule_applies(Rule rule, const NetworkPlan& plan, const DeploymentScenario& scenario) {
    switch (rule) {
        case Rule::AllowedTypes:
        case Rule::Capacity:
        case Rule::Composition: return true;
        case Rule::ClosedIsolation:
            return scenario.kind == ScenarioKind::ClosedA ||
                   (scenario.kind == ScenarioKind::ClosedB && !scenario.external_need);
        case Rule::ExternalNeed: return scenario.kind == ScenarioKind::ClosedB || is_mixed(scenario.kind);
        case Rule::PublicIsolation: return public_tenant(plan).has_value();
        case Rule::MnoFederation: return scenario.kind == ScenarioKind::OpenMNO;
    }
    return false;
}

std::vector<RuleViolation> validate_network_plan(const NetworkPlan& plan, const DeploymentScenario& scenario) {
    require_well_formed(scenario);
    if (auto problems = consistency_problems(plan); !problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw SliceError(ErrorCode::InconsistentPlan, msg);
    }
    return Checker(plan, scenario).run();
}

} // namespace uoslice
