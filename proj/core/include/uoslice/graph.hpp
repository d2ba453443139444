#pragma once

#include "uoslice/model.hpp"

#include <string>

namespace uoslice {

// Graphviz DOT rendering of the plan: one cluster per domain holding its
// NSSIs (and, for MNOs, its bound foreign NSIs), slice nodes outside the
// clusters, constituent edges solid, binding edges dashed. Stable-ordered.
std::string export_graph(const NetworkPlan& plan);

} // namespace uoslice
