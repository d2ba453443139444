#pragma once

#include "uoslice/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uoslice {

struct Classification {
    NsiType type = NsiType::Type1;
    // True when some constituent is also used by another live slice, even if
    // foreign exposure already made the slice Type3.
    bool locally_shared = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

// Type3 if any constituent is owned outside the micro-operator or the slice is
// linked to a foreign NSI; otherwise Type2 if any constituent is shared with
// another live slice; otherwise Type1. Throws UnknownNsi / DanglingConstituent.
Classification classify(const NetworkPlan& plan, const NsiId& nsi);
NsiType classify_nsi_type(const NetworkPlan& plan, const NsiId& nsi);

enum class CompositionCode {
    TooFewConstituents,
    MissingKind,
    DanglingConstituent,
    NonSharableShared,
    DuplicateConstituent,
};

std::string_view to_string(CompositionCode code) noexcept;

struct CompositionViolation {
    CompositionCode code;
    std::string subject;                 // NSI or NSSI id
    std::optional<SubnetKind> kind;      // set for MissingKind
    std::string detail;

    friend bool operator==(const CompositionViolation&, const CompositionViolation&) = default;
};

std::vector<CompositionViolation> validate_nsi_composition(const NetworkPlan& plan, const NsiId& nsi);

} // namespace uoslice
