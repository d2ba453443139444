#include "uoslice/classify.hpp"

#include "uoslice/errors.hpp"

#include <algorithm>
#include <set>

namespace uoslice {

namespace {

bool contains(const std::vector<NssiId>& v, const NssiId& id) {
    return std::find(v.begin(), v.end(), id) != v.end();
}

bool shared_with_other(const NetworkPlan& plan, const NsiId& self, const NssiId& nssi) {
    for (const auto& [id, other] : plan.nsis)
        if (id != self && contains(other.constituents, nssi)) return true;
    return false;
}

} // namespace

Classification classify(const NetworkPlan& plan, const NsiId& nsi_id) {
    const Nsi& nsi = plan.nsi(nsi_id);
    Classification out;
    bool foreign = !nsi.linked_foreign_nsis.empty();
    for (const auto& c : nsi.constituents) {
        auto it = plan.nssis.find(c);
        if (it == plan.nssis.end())
            throw SliceError(ErrorCode::DanglingConstituent,
                             "NSI '" + nsi_id.str() + "' references unknown NSSI '" + c.str() + "'");
        foreign = foreign || plan.is_foreign(it->second);
        out.locally_shared = out.locally_shared || shared_with_other(plan, nsi_id, c);
    }
    if (foreign)
        out.type = NsiType::Type3;
    else if (out.locally_shared)
        out.type = NsiType::Type2;
    else
        out.type = NsiType::Type1;
    return out;
}

NsiType classify_nsi_type(const NetworkPlan& plan, const NsiId& nsi) { return classify(plan, nsi).type; }

std::string_view to_string(CompositionCode code) noexcept {
    switch (code) {
        case CompositionCode::TooFewConstituents: return "TooFewConstituents";
        case CompositionCode::MissingKind: return "MissingKind";
        case CompositionCode::DanglingConstituent: return "DanglingConstituent";
        case CompositionCode::NonSharableShared: return "NonSharableShared";
        case CompositionCode::DuplicateConstituent: return "DuplicateConstituent";
    }
    return "?";
}

std::vector<CompositionViolation> validate_nsi_composition(const NetworkPlan& plan, const NsiId& nsi_id) {
    const Nsi& nsi = plan.nsi(nsi_id);
    std::vector<CompositionViolation> out;

    if (nsi.constituents.size() < 2) {
        out.push_back({CompositionCode::TooFewConstituents, nsi_id.str(), std::nullopt,
                       "has " + std::to_string(nsi.constituents.size()) + " constituent(s), needs at least 2"});
    }

    bool has_an = false;
    bool has_cn = false;
    std::set<NssiId> seen;
    for (const auto& c : nsi.constituents) {
        if (!seen.insert(c).second) {
            out.push_back({CompositionCode::DuplicateConstituent, c.str(), std::nullopt,
                           "listed more than once in '" + nsi_id.str() + "'"});
            continue;
        }
        auto it = plan.nssis.find(c);
        if (it == plan.nssis.end()) {
            out.push_back({CompositionCode::DanglingConstituent, c.str(), std::nullopt,
                           "referenced by '" + nsi_id.str() + "' but not declared"});
            continue;
        }
        const Nssi& nssi = it->second;
        (nssi.kind == SubnetKind::AN ? has_an : has_cn) = true;
        if (!nssi.sharable) {
            const auto users = plan.users_of(c);
            if (users.size() > 1) {
                std::string names;
                for (const auto& u : users) names += (names.empty() ? "" : ", ") + u.str();
                out.push_back({CompositionCode::NonSharableShared, c.str(), std::nullopt,
                               "non-sharable NSSI used by " + names});
            }
        }
    }
    if (!has_an)
        out.push_back({CompositionCode::MissingKind, nsi_id.str(), SubnetKind::AN, "no AN constituent"});
    if (!has_cn)
        out.push_back({CompositionCode::MissingKind, nsi_id.str(), SubnetKind::CN, "no CN constituent"});
    return out;
}

} // namespace uoslice
