#include "uoslice/commands.hpp"

#include "uoslice/document.hpp"
#include "uoslice/errors.hpp"
#include "uoslice/graph.hpp"
#include "uoslice/replay.hpp"
#include "uoslice/report.hpp"

#include <json.hpp>

#include <sstream>

namespace uoslice {

namespace {

using nlohmann::json;

CommandResult input_error(std::string diagnostics) {
    CommandResult r;
    r.exit_code = kExitInputError;
    r.diagnostics = std::move(diagnostics);
    if (!r.diagnostics.empty() && r.diagnostics.back() != '\n') r.diagnostics += '\n';
    return r;
}

// Parses and replays; on failure fills `error` and returns nullopt.
std::optional<ReplayResult> load(std::string_view text, CommandResult& error) {
    try {
        ReplayResult result = replay(parse_document(text));
        if (!result.ok()) {
            error = input_error(*result.failure);
            return std::nullopt;
        }
        return result;
    } catch (const DocumentError& e) {
        std::string out;
        for (const auto& d : e.diagnostics()) out += d.format() + "\n";
        error = input_error(out);
    } catch (const SliceError& e) {
        error = input_error(e.what());
    }
    return std::nullopt;
}

int status_of(const ScenarioReport& report) { return report.legal() ? kExitOk : kExitViolations; }

std::string units(Units u) { return std::to_string(u); }

std::string render_delta_text(const StepRecord& step) {
    std::ostringstream out;
    out << "step " << step.index << ": " << step.action << "\n";
    if (!step.delta) return out.str();
    const PlanDelta& d = *step.delta;
    out << "  base version: " << d.base_version << "\n";
    for (const auto& n : d.created_nssis)
        out << "  create " << n.id << " " << to_string(n.kind) << (n.sharable ? " sharable" : " exclusive")
            << " capacity " << units(n.capacity) << "\n";
    for (const auto& id : d.reused_nssis) out << "  reuse " << id << "\n";
    for (const auto& r : d.reservations) out << "  reserve " << units(r.units) << " on " << r.nssi << "\n";
    return out.str();
}

json delta_json(const StepRecord& step) {
    json e = {{"step", step.index}, {"action", step.action}, {"errors", step.errors}, {"warnings", step.warnings}};
    if (!step.delta) return e;
    const PlanDelta& d = *step.delta;
    json delta = {{"base_version", d.base_version},
                  {"nsi", d.created_nsi.id.str()},
                  {"created_nssis", json::array()},
                  {"reused_nssis", json::array()},
                  {"reservations", json::array()}};
    for (const auto& n : d.created_nssis)
        delta["created_nssis"].push_back(
            {{"id", n.id.str()}, {"kind", to_string(n.kind)}, {"sharable", n.sharable}, {"capacity", n.capacity}});
    for (const auto& id : d.reused_nssis) delta["reused_nssis"].push_back(id.str());
    for (const auto& r : d.reservations)
        delta["reservations"].push_back({{"nssi", r.nssi.str()}, {"units", r.units}});
    e["delta"] = std::move(delta);
    return e;
}

} // namespace

CommandResult run_validate(std::string_view text, OutputFormat format) {
    CommandResult result;
    auto replayed = load(text, result);
    if (!replayed) return result;
    try {
        const auto report = scenario_report(replayed->plan, replayed->scenario);
        result.output = format == OutputFormat::Text ? render_text(report) : render_structured(report);
        result.exit_code = status_of(report);
    } catch (const SliceError& e) {
        return input_error(e.what());
    }
    return result;
}

CommandResult run_plan(std::string_view text, OutputFormat format) {
    CommandResult result;
    auto replayed = load(text, result);
    if (!replayed) return result;
    try {
        const auto report = scenario_report(replayed->plan, replayed->scenario);
        result.exit_code = status_of(report);
        if (format == OutputFormat::Text) {
            std::string out;
            for (const auto& step : replayed->steps)
                if (step.delta) out += render_delta_text(step);
            out += "final plan version: " + std::to_string(replayed->plan.version) + "\n\n";
            result.output = out + render_text(report);
        } else {
            json doc = {{"deltas", json::array()}, {"plan_version", replayed->plan.version}};
            for (const auto& step : replayed->steps)
                if (step.delta) doc["deltas"].push_back(delta_json(step));
            doc["report"] = json::parse(render_structured(report));
            result.output = doc.dump(2) + "\n";
        }
    } catch (const SliceError& e) {
        return input_error(e.what());
    }
    return result;
}

CommandResult run_graph(std::string_view text) {
    CommandResult result;
    auto replayed = load(text, result);
    if (!replayed) return result;
    result.output = export_graph(replayed->plan);
    return result;
}

CommandResult run_replay(std::string_view text, OutputFormat format) {
    CommandResult result;
    std::optional<ReplayResult> replayed;
    try {
        replayed = replay(parse_document(text));
    } catch (const DocumentError& e) {
        std::string out;
        for (const auto& d : e.diagnostics()) out += d.format() + "\n";
        return input_error(out);
    } catch (const SliceError& e) {
        return input_error(e.what());
    }

    const bool legal = replayed->steps.empty() ? true : replayed->steps.back().errors == 0;
    if (!replayed->ok()) {
        result.exit_code = kExitInputError;
        result.diagnostics = *replayed->failure + "\n";
    } else if (replayed->steps.empty()) {
        try {
            result.exit_code = has_errors(validate_network_plan(replayed->plan, replayed->scenario)) ? kExitViolations
                                                                                                      : kExitOk;
        } catch (const SliceError& e) {
            return input_error(e.what());
        }
    } else {
        result.exit_code = legal ? kExitOk : kExitViolations;
    }

    if (format == OutputFormat::Text) {
        std::string out;
        for (const auto& s : replayed->steps)
            out += "[" + std::to_string(s.index) + "] " + s.action + ": " + std::to_string(s.errors) + " errors, " +
                   std::to_string(s.warnings) + " warnings\n";
        out += replayed->ok() ? "replayed " + std::to_string(replayed->steps.size()) + " steps, plan version " +
                                    std::to_string(replayed->plan.version) + "\n"
                              : "stopped: " + *replayed->failure + "\n";
        result.output = out;
    } else {
        json doc = {{"steps", json::array()}, {"plan_version", replayed->plan.version}, {"ok", replayed->ok()}};
        for (const auto& s : replayed->steps) doc["steps"].push_back(delta_json(s));
        if (!replayed->ok()) doc["failure"] = *replayed->failure;
        result.output = doc.dump(2) + "\n";
    }
    return result;
}

} // namespace uoslice
