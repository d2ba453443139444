#include "uoslice/graph.hpp"

#include "uoslice/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace uoslice {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string node(std::string_view prefix, const std::string& id) { return quoted(std::string(prefix) + ":" + id); }

} // namespace

std::string export_graph(const NetworkPlan& plan) {
    std::ostringstream os;
    os << "digraph network_plan {\n";
    os << "  rankdir=LR;\n";
    if (plan.domains.empty() && plan.nsis.empty()) {
        os << "}\n";
        return os.str();
    }
    os << "  node [fontname=\"Helvetica\"];\n";

    std::map<DomainId, std::set<ForeignNsiId>> foreign_nsis;
    for (const auto& a : plan.agreements) foreign_nsis[a.mno].insert(a.foreign_nsis.begin(), a.foreign_nsis.end());

    for (const auto& [id, d] : plan.domains) {
        os << "  subgraph " << quoted("cluster_" + id.str()) << " {\n";
        os << "    label=" << quoted((d.name.empty() ? id.str() : d.name) + " (" + std::string(to_string(d.kind)) + ")")
           << ";\n";
        if (d.kind == DomainKind::Mno) os << "    style=filled; fillcolor=\"#eeeeee\";\n";
        os << "    " << node("domain", id.str()) << " [shape=folder, label=" << quoted(id.str()) << "];\n";
        for (const auto& [nid, n] : plan.nssis) {
            if (n.owner != id) continue;
            os << "    " << node("nssi", nid.str()) << " [shape=box, label="
               << quoted(nid.str() + "\n" + std::string(to_string(n.kind)))
               << (n.sharable ? "" : ", peripheries=2") << "];\n";
        }
        if (auto it = foreign_nsis.find(id); it != foreign_nsis.end()) {
            for (const auto& f : it->second)
                os << "    " << node("foreign-nsi", f.str()) << " [shape=ellipse, style=dashed, label="
                   << quoted(f.str()) << "];\n";
        }
        os << "  }\n";
    }

    for (const auto& [id, nsi] : plan.nsis) {
        const bool resolvable = std::all_of(nsi.constituents.begin(), nsi.constituents.end(),
                                            [&](const NssiId& c) { return plan.nssis.contains(c); });
        std::string label = id.str();
        if (resolvable) label += "\n" + std::string(to_string(classify_nsi_type(plan, id)));
        os << "  " << node("nsi", id.str()) << " [shape=ellipse, label=" << quoted(label) << "];\n";
    }
    for (const auto& [id, nsi] : plan.nsis)
        for (const auto& c : nsi.constituents) os << "  " << node("nsi", id.str()) << " -> " << node("nssi", c.str()) << ";\n";

    for (const auto& [service, b] : plan.bindings) {
        os << "  " << node("service", service.str()) << " [shape=note, label=" << quoted(service.str()) << "];\n";
        for (const auto& n : b.local_nsis)
            os << "  " << node("service", service.str()) << " -> " << node("nsi", n.str()) << " [style=dashed];\n";
        for (const auto& f : b.foreign_nsis)
            os << "  " << node("service", service.str()) << " -> " << node("foreign-nsi", f.str())
               << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace uoslice
