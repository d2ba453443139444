#pragma once

#include "uoslice/model.hpp"
#include "uoslice/scenario.hpp"

#include <optional>
#include <vector>

namespace uoslice {

// Records an agreement with an MNO. Exported MNO NSSIs become candidates for
// foreign constituents; listed foreign NSIs become bindable under Option B.
NetworkPlan register_peer(NetworkPlan plan, PeeringAgreement agreement);

// Option A: adds an exported MNO NSSI to a local slice and reserves `units` on it.
NetworkPlan import_foreign_nssi(NetworkPlan plan, const DeploymentScenario& scenario, const NsiId& nsi,
                                const NssiId& foreign_nssi, Units units);

// Option B: records a service composed of local and MNO slices. Links the
// foreign NSIs onto the local slices; never touches constituents.
NetworkPlan bind_service(NetworkPlan plan, const DeploymentScenario& scenario, ServiceBinding binding);

// True when some agreement lets the micro-operator use `nssi`.
bool is_exported(const NetworkPlan& plan, const NssiId& nssi);
// True when some agreement admitting MNO use lists `nsi`.
bool is_registered_foreign_nsi(const NetworkPlan& plan, const ForeignNsiId& nsi);

// Exported foreign NSSIs with residual >= units, in id order, optionally
// restricted to one MNO.
std::vector<NssiId> eligible_foreign_nssis(const NetworkPlan& plan, Units units,
                                           const std::optional<DomainId>& only_from = std::nullopt);

} // namespace uoslice
