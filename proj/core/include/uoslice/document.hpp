#pragma once

#include "uoslice/model.hpp"
#include "uoslice/orchestrator.hpp"
#include "uoslice/scenario.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace uoslice {

inline constexpr int kSchemaVersion = 1;

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::ClosedA;
    bool multi_location = false;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

// A slice that already exists when the document is loaded. `units` is
// reserved on every constituent.
struct DeclaredNsi {
    Nsi nsi;
    Units units = 1;

    friend bool operator==(const DeclaredNsi&, const DeclaredNsi&) = default;
};

struct InstantiateEvent {
    RequestId request;
    ManagementMode mode = ManagementMode::Request;
    std::optional<NsiId> nsi; // name for the created slice; generated when absent

    friend bool operator==(const InstantiateEvent&, const InstantiateEvent&) = default;
};

struct TransitionEvent {
    NsiId nsi;
    LifecycleState target = LifecycleState::Instantiated;
    Actor actor = Actor::Operator;

    friend bool operator==(const TransitionEvent&, const TransitionEvent&) = default;
};

struct BindEvent {
    ServiceBinding binding;

    friend bool operator==(const BindEvent&, const BindEvent&) = default;
};

using Event = std::variant<InstantiateEvent, TransitionEvent, BindEvent>;

struct PlanDocument {
    int schema_version = kSchemaVersion;
    ScenarioSpec scenario;
    PlannerOptions planner;
    std::vector<Domain> domains;
    std::vector<Nssi> nssis;
    std::vector<Tenant> tenants;
    std::vector<PeeringAgreement> agreements;
    std::vector<DeclaredNsi> nsis;
    std::vector<ServiceRequest> requests;
    std::optional<std::vector<Event>> events; // absent: auto-plan requests in order

    friend bool operator==(const PlanDocument&, const PlanDocument&) = default;
};

enum class DocumentErrorCode { SyntaxError, SchemaError, UnknownReference, DuplicateId, UnsupportedSchemaVersion };
std::string_view to_string(DocumentErrorCode code) noexcept;

struct Diagnostic {
    DocumentErrorCode code;
    std::string message;
    std::string pointer; // JSON pointer of the offending value, may be empty
    int line = 0;        // 1-based, 0 when unknown
    int column = 0;

    std::string format() const;
};

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Parses and fully resolves a plan document. Collects every schema and
// reference problem before throwing DocumentError.
PlanDocument parse_document(std::string_view text);

// Canonical serialization; parse_document(serialize_document(d)) == d.
std::string serialize_document(const PlanDocument& document);

} // namespace uoslice
