#include "uoslice/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace uoslice {

std::string_view to_string(RuleStatus s) noexcept {
    switch (s) {
        case RuleStatus::Pass: return "PASS";
        case RuleStatus::Fail: return "FAIL";
        case RuleStatus::NotApplicable: return "N/A";
    }
    return "?";
}

ScenarioReport scenario_report(const NetworkPlan& plan, const DeploymentScenario& scenario) {
    ScenarioReport r;
    r.scenario = scenario;
    r.allowed = allowed_types(scenario);
    r.row = scenario_row(scenario.kind);
    r.violations = validate_network_plan(plan, scenario);

    for (const auto& [id, nsi] : plan.nsis) {
        SliceEntry e;
        e.id = id;
        e.tenant = nsi.tenant;
        e.subscriber_class = plan.tenant(nsi.tenant).subscriber_class;
        e.lifecycle = nsi.lifecycle;
        e.mode = nsi.mode;
        e.constituents = nsi.constituents;
        e.linked_foreign_nsis.assign(nsi.linked_foreign_nsis.begin(), nsi.linked_foreign_nsis.end());
        const bool resolvable = std::all_of(nsi.constituents.begin(), nsi.constituents.end(),
                                            [&](const NssiId& c) { return plan.nssis.contains(c); });
        if (resolvable) e.classification = classify(plan, id);
        r.slices.push_back(std::move(e));
    }

    for (auto rule : kAllRules) {
        RuleOutcome o{rule};
        for (const auto& v : r.violations) {
            if (rule_of(v.code) != rule) continue;
            (v.severity == Severity::Error ? o.errors : o.warnings)++;
        }
        if (o.errors > 0)
            o.status = RuleStatus::Fail;
        else if (!rule_applies(rule, plan, scenario))
            o.status = RuleStatus::NotApplicable;
        r.rules.push_back(o);
    }

    for (const auto& [id, nssi] : plan.nssis) {
        ResourceEntry e;
        e.id = id;
        e.kind = nssi.kind;
        e.owner = nssi.owner;
        e.foreign = plan.is_foreign(nssi);
        e.sharable = nssi.sharable;
        e.capacity = plan.ledger.capacity(id);
        e.reserved = plan.ledger.reserved(id);
        e.residual = plan.ledger.residual(id);
        e.users = plan.users_of(id).size();
        if (e.users > 0) ++r.used_nssis;
        if (e.users > 1) ++r.shared_nssis;
        r.resources.push_back(std::move(e));
    }

    for (const auto& [service, b] : plan.bindings) r.bindings.push_back(b);
    return r;
}

namespace {

template <class Range>
std::string join(const Range& items) {
    std::string out;
    for (const auto& i : items) {
        if (!out.empty()) out += ", ";
        if constexpr (requires { i.str(); })
            out += i.str();
        else
            out += std::string(to_string(i));
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string render_text(const ScenarioReport& r) {
    std::ostringstream os;
    os << "scenario: " << to_string(r.scenario.kind) << " (" << r.row.network << " / " << r.row.deployment << ")\n";
    os << "  peered_mno_count=" << r.scenario.peered_mno_count
       << " multi_location=" << (r.scenario.multi_location ? "true" : "false")
       << " external_need=" << (r.scenario.external_need ? "true" : "false") << "\n";
    os << "  configuration: " << r.row.summary << "\n";
    os << "  allowed types: {" << join(r.allowed) << "}\n";

    os << "slices: " << r.slices.size() << "\n";
    for (const auto& s : r.slices) {
        os << "  " << s.id << " tenant=" << s.tenant << " (" << to_string(s.subscriber_class) << ")"
           << " type=" << to_string(s.classification.type)
           << " locally_shared=" << yes_no(s.classification.locally_shared)
           << " state=" << to_string(s.lifecycle) << " manager=" << to_string(manager_of(s.mode)) << "\n";
        os << "    constituents: [" << join(s.constituents) << "]";
        if (!s.linked_foreign_nsis.empty()) os << " linked: [" << join(s.linked_foreign_nsis) << "]";
        os << "\n";
    }

    os << "rules:\n";
    for (const auto& o : r.rules) {
        os << "  " << to_string(o.rule) << ": " << to_string(o.status);
        if (o.errors > 0) os << " errors=" << o.errors;
        if (o.warnings > 0) os << " warnings=" << o.warnings;
        os << "\n";
    }

    os << "resources: shared " << r.shared_nssis << " of " << r.used_nssis << " used NSSIs\n";
    for (const auto& e : r.resources) {
        os << "  " << e.id << " " << to_string(e.kind) << " owner=" << e.owner << (e.foreign ? " (foreign)" : "")
           << " sharable=" << yes_no(e.sharable) << " capacity=" << e.capacity << " reserved=" << e.reserved
           << " residual=" << e.residual << " users=" << e.users << "\n";
    }

    if (!r.bindings.empty()) {
        os << "services:\n";
        for (const auto& b : r.bindings)
            os << "  " << b.service << " local=[" << join(b.local_nsis) << "] foreign=[" << join(b.foreign_nsis)
               << "]\n";
    }

    os << "violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations) {
        os << "  " << to_string(v.severity) << " " << to_string(v.code) << " " << v.subject << ": " << v.detail
           << " [" << v.anchor << "]\n";
    }
    os << "verdict: " << (r.legal() ? "legal" : "illegal") << "\n";
    return os.str();
}

std::string render_structured(const ScenarioReport& r) {
    using nlohmann::json;
    json doc;
    doc["scenario"] = {
        {"kind", to_string(r.scenario.kind)},
        {"peered_mno_count", r.scenario.peered_mno_count},
        {"multi_location", r.scenario.multi_location},
        {"external_need", r.scenario.external_need},
    };
    doc["configuration"] = {
        {"network", r.row.network},
        {"deployment", r.row.deployment},
        {"summary", r.row.summary},
        {"allowed_types", json::array()},
    };
    for (auto t : r.allowed) doc["configuration"]["allowed_types"].push_back(to_string(t));

    doc["slices"] = json::array();
    for (const auto& s : r.slices) {
        json e = {
            {"id", s.id.str()},
            {"tenant", s.tenant.str()},
            {"subscriber_class", to_string(s.subscriber_class)},
            {"type", to_string(s.classification.type)},
            {"locally_shared", s.classification.locally_shared},
            {"lifecycle", to_string(s.lifecycle)},
            {"mode", to_string(s.mode)},
            {"manager", to_string(manager_of(s.mode))},
            {"constituents", json::array()},
            {"linked_foreign_nsis", json::array()},
        };
        for (const auto& c : s.constituents) e["constituents"].push_back(c.str());
        for (const auto& f : s.linked_foreign_nsis) e["linked_foreign_nsis"].push_back(f.str());
        doc["slices"].push_back(std::move(e));
    }

    doc["rules"] = json::array();
    for (const auto& o : r.rules)
        doc["rules"].push_back(
            {{"rule", to_string(o.rule)}, {"status", to_string(o.status)}, {"errors", o.errors}, {"warnings", o.warnings}});

    doc["resources"] = {{"shared_nssis", r.shared_nssis}, {"used_nssis", r.used_nssis}, {"nssis", json::array()}};
    for (const auto& e : r.resources) {
        doc["resources"]["nssis"].push_back({
            {"id", e.id.str()},
            {"kind", to_string(e.kind)},
            {"owner", e.owner.str()},
            {"foreign", e.foreign},
            {"sharable", e.sharable},
            {"capacity", e.capacity},
            {"reserved", e.reserved},
            {"residual", e.residual},
            {"users", e.users},
        });
    }

    doc["services"] = json::array();
    for (const auto& b : r.bindings) {
        json e = {{"service", b.service.str()}, {"local_nsis", json::array()}, {"foreign_nsis", json::array()}};
        for (const auto& n : b.local_nsis) e["local_nsis"].push_back(n.str());
        for (const auto& n : b.foreign_nsis) e["foreign_nsis"].push_back(n.str());
        doc["services"].push_back(std::move(e));
    }

    doc["violations"] = json::array();
    for (const auto& v : r.violations) {
        doc["violations"].push_back({
            {"code", to_string(v.code)},
            {"severity", to_string(v.severity)},
            {"subject", v.subject},
            {"detail", v.detail},
            {"anchor", v.anchor},
        });
    }
    doc["legal"] = r.legal();
    return doc.dump(2) + "\n";
}

} // namespace uoslice
