#include "uoslice/federation.hpp"

#include "uoslice/errors.hpp"

#include <algorithm>

namespace uoslice {

bool is_exported(const NetworkPlan& plan, const NssiId& nssi) {
    return std::any_of(plan.agreements.begin(), plan.agreements.end(), [&](const PeeringAgreement& a) {
        return permits_local_use(a.direction) && a.exported_nssis.contains(nssi);
    });
}

bool is_registered_foreign_nsi(const NetworkPlan& plan, const ForeignNsiId& nsi) {
    return std::any_of(plan.agreements.begin(), plan.agreements.end(), [&](const PeeringAgreement& a) {
        return permits_mno_use(a.direction) && a.foreign_nsis.contains(nsi);
    });
}

std::vector<NssiId> eligible_foreign_nssis(const NetworkPlan& plan, Units units,
                                           const std::optional<DomainId>& only_from) {
    std::vector<NssiId> out;
    for (const auto& [id, nssi] : plan.nssis) {
        if (!plan.is_foreign(nssi) || !is_exported(plan, id)) continue;
        if (only_from && nssi.owner != *only_from) continue;
        if (plan.ledger.residual(id) >= units) out.push_back(id);
    }
    return out;
}

NetworkPlan register_peer(NetworkPlan plan, PeeringAgreement agreement) {
    auto dom = plan.domains.find(agreement.mno);
    if (dom == plan.domains.end() || dom->second.kind != DomainKind::Mno)
        throw SliceError(ErrorCode::UnknownDomain, "'" + agreement.mno.str() + "' is not a registered MNO domain");

    if (!agreement.exported_nssis.empty() && !permits_local_use(agreement.direction))
        throw SliceError(ErrorCode::InvalidAgreement, "direction " + std::string(to_string(agreement.direction)) +
                                                          " does not let the micro-operator use MNO NSSIs");
    if ((!agreement.exported_local_nssis.empty() || !agreement.foreign_nsis.empty()) &&
        !permits_mno_use(agreement.direction))
        throw SliceError(ErrorCode::InvalidAgreement, "direction " + std::string(to_string(agreement.direction)) +
                                                          " does not let the MNO use the micro-operator network");

    for (const auto& id : agreement.exported_nssis) {
        const Nssi& n = plan.nssi(id);
        if (n.owner != agreement.mno)
            throw SliceError(ErrorCode::InvalidAgreement,
                             "'" + id.str() + "' is not owned by '" + agreement.mno.str() + "'");
        if (!n.sharable) throw SliceError(ErrorCode::NonSharableExport, "'" + id.str() + "' is not sharable");
    }
    for (const auto& id : agreement.exported_local_nssis) {
        const Nssi& n = plan.nssi(id);
        if (plan.is_foreign(n))
            throw SliceError(ErrorCode::InvalidAgreement, "'" + id.str() + "' is not owned by the micro-operator");
        if (!n.sharable) throw SliceError(ErrorCode::NonSharableExport, "'" + id.str() + "' is not sharable");
    }

    plan.agreements.push_back(std::move(agreement));
    ++plan.version;
    return plan;
}

NetworkPlan import_foreign_nssi(NetworkPlan plan, const DeploymentScenario& scenario, const NsiId& nsi_id,
                                const NssiId& foreign_nssi, Units units) {
    plan.nsi(nsi_id);
    if (!allowed_types(scenario).contains(NsiType::Type3))
        throw SliceError(ErrorCode::ScenarioForbidsFederation,
                         std::string(to_string(scenario.kind)) + " does not admit Type3 slices");
    if (!plan.nssis.contains(foreign_nssi) || !plan.is_foreign(plan.nssi(foreign_nssi)) ||
        !is_exported(plan, foreign_nssi))
        throw SliceError(ErrorCode::NotExported, "no agreement exports '" + foreign_nssi.str() + "'");

    Nsi& nsi = plan.nsis.at(nsi_id);
    if (std::find(nsi.constituents.begin(), nsi.constituents.end(), foreign_nssi) != nsi.constituents.end())
        throw SliceError(ErrorCode::DuplicateConstituent,
                         "'" + nsi_id.str() + "' already contains '" + foreign_nssi.str() + "'");
    if (units <= 0) throw SliceError(ErrorCode::InvalidUnits, "import units must be positive");
    if (plan.ledger.residual(foreign_nssi) < units)
        throw SliceError(ErrorCode::ForeignCapacityExhausted,
                         "'" + foreign_nssi.str() + "' has residual " +
                             std::to_string(plan.ledger.residual(foreign_nssi)) + ", requested " +
                             std::to_string(units));

    plan.ledger.admit(foreign_nssi, nsi_id, units);
    nsi.constituents.push_back(foreign_nssi);
    ++plan.version;
    return plan;
}

NetworkPlan bind_service(NetworkPlan plan, const DeploymentScenario& scenario, ServiceBinding binding) {
    for (const auto& id : binding.local_nsis) plan.nsi(id);
    if (!binding.foreign_nsis.empty() && scenario.kind != ScenarioKind::MixedOptionB)
        throw SliceError(ErrorCode::WrongScenario, "services spanning MNO slices need MixedOptionB, not " +
                                                       std::string(to_string(scenario.kind)));
    for (const auto& f : binding.foreign_nsis)
        if (!is_registered_foreign_nsi(plan, f))
            throw SliceError(ErrorCode::UnknownForeignNsi, "no agreement registers MNO slice '" + f.str() + "'");
    if (plan.bindings.contains(binding.service))
        throw SliceError(ErrorCode::DuplicateId, "service '" + binding.service.str() + "' is already bound");

    for (const auto& id : binding.local_nsis) {
        auto& linked = plan.nsis.at(id).linked_foreign_nsis;
        linked.insert(binding.foreign_nsis.begin(), binding.foreign_nsis.end());
    }
    plan.bindings.emplace(binding.service, std::move(binding));
    ++plan.version;
    return plan;
}

} // namespace uoslice
