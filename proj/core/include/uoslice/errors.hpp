#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uoslice {

enum class ErrorCode {
    // core-model
    UnknownNsi,
    UnknownNssi,
    UnknownDomain,
    UnknownTenant,
    DanglingConstituent,
    DuplicateId,
    DuplicateConstituent,
    InvalidEntity,
    // scenario-rules
    MalformedScenario,
    InconsistentPlan,
    // orchestrator
    ContradictoryRequirement,
    InvalidRequest,
    ScenarioForbidsFederation,
    NoPeeredMno,
    ForeignCapacityExhausted,
    RuleUnsatisfiable,
    StalePlanVersion,
    CapacityRace,
    IllegalTransition,
    WrongActor,
    // federation
    NonSharableExport,
    InvalidAgreement,
    NotExported,
    WrongScenario,
    UnknownForeignNsi,
    // resources
    InsufficientCapacity,
    DuplicateReservation,
    NoSuchReservation,
    InvalidUnits,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failing operation in the library throws this; the code is stable and
// meant for programmatic matching, the message for humans.
class SliceError : public std::runtime_error {
public:
    SliceError(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace uoslice
