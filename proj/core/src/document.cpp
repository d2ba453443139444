#include "uoslice/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace uoslice {

using nlohmann::json;

std::string_view to_string(DocumentErrorCode code) noexcept {
    switch (code) {
        case DocumentErrorCode::SyntaxError: return "SyntaxError";
        case DocumentErrorCode::SchemaError: return "SchemaError";
        case DocumentErrorCode::UnknownReference: return "UnknownReference";
        case DocumentErrorCode::DuplicateId: return "DuplicateId";
        case DocumentErrorCode::UnsupportedSchemaVersion: return "UnsupportedSchemaVersion";
    }
    return "?";
}

std::string Diagnostic::format() const {
    std::string out;
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    out += std::string(to_string(code)) + ": " + message;
    if (!pointer.empty()) out += " (at " + pointer + ")";
    return out;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) out += (out.empty() ? "" : "\n") + d.format();
    return out;
}

} // namespace

DocumentError::DocumentError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

struct Position {
    int line = 1;
    int column = 1;
};

// Maps the JSON pointer of every value to where it starts in the text. Only
// run on text that already parsed, so the scanner can stay permissive.
class SourceMap {
public:
    explicit SourceMap(std::string_view text) : text_(text) {
        value("");
    }

    std::optional<Position> find(const std::string& pointer) const {
        auto it = positions_.find(pointer);
        if (it == positions_.end()) return std::nullopt;
        return it->second;
    }

private:
    char peek() const { return i_ < text_.size() ? text_[i_] : '\0'; }

    void advance() {
        if (i_ >= text_.size()) return;
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_ws() {
        while (i_ < text_.size() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) advance();
    }

    std::string string_literal() {
        std::string out;
        advance(); // opening quote
        while (i_ < text_.size() && peek() != '"') {
            if (peek() == '\\') {
                advance();
                char c = peek();
                out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
            } else {
                out += peek();
            }
            advance();
        }
        advance(); // closing quote
        return out;
    }

    static std::string escape(const std::string& key) {
        std::string out;
        for (char c : key) {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out += c;
        }
        return out;
    }

    void value(const std::string& pointer) {
        skip_ws();
        positions_[pointer] = pos_;
        switch (peek()) {
            case '{': {
                advance();
                skip_ws();
                while (i_ < text_.size() && peek() != '}') {
                    skip_ws();
                    std::string key = string_literal();
                    skip_ws();
                    advance(); // ':'
                    value(pointer + "/" + escape(key));
                    skip_ws();
                    if (peek() == ',') advance();
                    skip_ws();
                }
                advance();
                break;
            }
            case '[': {
                advance();
                skip_ws();
                for (int index = 0; i_ < text_.size() && peek() != ']'; ++index) {
                    value(pointer + "/" + std::to_string(index));
                    skip_ws();
                    if (peek() == ',') advance();
                    skip_ws();
                }
                advance();
                break;
            }
            case '"': string_literal(); break;
            default:
                while (i_ < text_.size() && peek() != ',' && peek() != '}' && peek() != ']' && peek() != ' ' &&
                       peek() != '\n' && peek() != '\r' && peek() != '\t')
                    advance();
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
    std::map<std::string, Position> positions_;
};

Position position_of_byte(std::string_view text, std::size_t byte) {
    Position p;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

class Reader {
public:
    Reader(const json& root, const SourceMap& map) : root_(root), map_(map) {}

    PlanDocument read() {
        PlanDocument doc;
        if (!root_.is_object()) {
            fail(DocumentErrorCode::SchemaError, "", "document must be an object");
            throw DocumentError(std::move(diags_));
        }
        read_schema_version(doc);
        check_keys(root_, "", {"schema_version", "scenario", "planner", "domains", "nssis", "tenants", "agreements",
                               "nsis", "requests", "events"});
        read_scenario(doc);
        read_planner(doc);
        for_each(root_, "", "domains", true, [&](const json& v, const std::string& p) { doc.domains.push_back(domain(v, p)); });
        for_each(root_, "", "nssis", false, [&](const json& v, const std::string& p) { doc.nssis.push_back(nssi(v, p)); });
        for_each(root_, "", "tenants", false, [&](const json& v, const std::string& p) { doc.tenants.push_back(tenant(v, p)); });
        for_each(root_, "", "agreements", false,
                 [&](const json& v, const std::string& p) { doc.agreements.push_back(agreement(v, p)); });
        for_each(root_, "", "nsis", false, [&](const json& v, const std::string& p) { doc.nsis.push_back(declared_nsi(v, p)); });
        for_each(root_, "", "requests", false,
                 [&](const json& v, const std::string& p) { doc.requests.push_back(request(v, p)); });
        if (root_.contains("events")) {
            doc.events.emplace();
            for_each(root_, "", "events", false, [&](const json& v, const std::string& p) { doc.events->push_back(event(v, p)); });
        }
        if (diags_.empty()) resolve(doc);
        if (!diags_.empty()) throw DocumentError(std::move(diags_));
        return doc;
    }

private:
    void fail(DocumentErrorCode code, const std::string& pointer, std::string message) {
        Diagnostic d{code, std::move(message), pointer, 0, 0};
        // Walk up to the nearest value the source map knows about.
        std::string p = pointer;
        for (;;) {
            if (auto pos = map_.find(p)) {
                d.line = pos->line;
                d.column = pos->column;
                break;
            }
            if (p.empty()) break;
            p.erase(p.rfind('/'));
        }
        diags_.push_back(std::move(d));
    }

    void check_keys(const json& obj, const std::string& pointer, std::initializer_list<std::string_view> allowed) {
        for (const auto& [key, value] : obj.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "unknown field '" + key + "'");
        }
    }

    const json* field(const json& obj, const std::string& pointer, const std::string& key, bool required) {
        if (!obj.is_object()) {
            fail(DocumentErrorCode::SchemaError, pointer, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) fail(DocumentErrorCode::SchemaError, pointer, "missing required field '" + key + "'");
            return nullptr;
        }
        return &*it;
    }

    std::string str(const json& obj, const std::string& pointer, const std::string& key, bool required = true) {
        const json* v = field(obj, pointer, key, required);
        if (!v) return {};
        if (!v->is_string()) {
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must be a string");
            return {};
        }
        auto s = v->get<std::string>();
        if (s.empty()) fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must not be empty");
        return s;
    }

    std::optional<std::string> opt_str(const json& obj, const std::string& pointer, const std::string& key) {
        if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
        return str(obj, pointer, key);
    }

    bool boolean(const json& obj, const std::string& pointer, const std::string& key, bool required,
                 bool fallback = false) {
        const json* v = field(obj, pointer, key, required);
        if (!v) return fallback;
        if (!v->is_boolean()) {
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must be true or false");
            return fallback;
        }
        return v->get<bool>();
    }

    std::int64_t integer(const json& obj, const std::string& pointer, const std::string& key, bool required,
                         std::int64_t fallback = 0) {
        const json* v = field(obj, pointer, key, required);
        if (!v) return fallback;
        if (!v->is_number_integer()) {
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must be an integer");
            return fallback;
        }
        return v->get<std::int64_t>();
    }

    template <class E>
    E enumeration(const json& obj, const std::string& pointer, const std::string& key, bool required, E fallback) {
        const json* v = field(obj, pointer, key, required);
        if (!v) return fallback;
        E out = fallback;
        if (!v->is_string() || !parse_enum(v->get<std::string>(), out))
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' has an unrecognized value");
        return out;
    }

    template <class T>
    std::vector<T> string_list(const json& obj, const std::string& pointer, const std::string& key, bool required) {
        std::vector<T> out;
        const json* v = field(obj, pointer, key, required);
        if (!v) return out;
        if (!v->is_array()) {
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must be an array");
            return out;
        }
        for (std::size_t i = 0; i < v->size(); ++i) {
            const auto& item = (*v)[i];
            if (!item.is_string() || item.get<std::string>().empty()) {
                fail(DocumentErrorCode::SchemaError, pointer + "/" + key + "/" + std::to_string(i),
                     "entries of '" + key + "' must be non-empty strings");
                continue;
            }
            out.emplace_back(item.get<std::string>());
        }
        return out;
    }

    template <class T>
    std::set<T> string_set(const json& obj, const std::string& pointer, const std::string& key, bool required) {
        auto list = string_list<T>(obj, pointer, key, required);
        std::set<T> out(list.begin(), list.end());
        if (out.size() != list.size())
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' contains duplicates");
        return out;
    }

    void for_each(const json& obj, const std::string& pointer, const std::string& key, bool required,
                  const std::function<void(const json&, const std::string&)>& fn) {
        const json* v = field(obj, pointer, key, required);
        if (!v) return;
        if (!v->is_array()) {
            fail(DocumentErrorCode::SchemaError, pointer + "/" + key, "'" + key + "' must be an array");
            return;
        }
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string p = pointer + "/" + key + "/" + std::to_string(i);
            if (!(*v)[i].is_object()) {
                fail(DocumentErrorCode::SchemaError, p, "expected an object");
                continue;
            }
            fn((*v)[i], p);
        }
    }

    void read_schema_version(PlanDocument& doc) {
        auto it = root_.find("schema_version");
        if (it == root_.end() || !it->is_number_integer() || it->get<std::int64_t>() != kSchemaVersion) {
            std::string seen = it == root_.end() ? "missing" : it->dump();
            fail(DocumentErrorCode::UnsupportedSchemaVersion, it == root_.end() ? "" : "/schema_version",
                 "schema_version " + seen + " is not supported; expected " + std::to_string(kSchemaVersion));
            throw DocumentError(std::move(diags_));
        }
        doc.schema_version = kSchemaVersion;
    }

    void read_scenario(PlanDocument& doc) {
        const json* s = field(root_, "", "scenario", true);
        if (!s) return;
        if (!s->is_object()) {
            fail(DocumentErrorCode::SchemaError, "/scenario", "expected an object");
            return;
        }
        check_keys(*s, "/scenario", {"kind", "multi_location"});
        doc.scenario.kind = enumeration(*s, "/scenario", "kind", true, ScenarioKind::ClosedA);
        doc.scenario.multi_location = boolean(*s, "/scenario", "multi_location", false, false);
    }

    void read_planner(PlanDocument& doc) {
        const json* p = field(root_, "", "planner", false);
        if (!p) return;
        if (!p->is_object()) {
            fail(DocumentErrorCode::SchemaError, "/planner", "expected an object");
            return;
        }
        check_keys(*p, "/planner", {"fresh_nssi_capacity"});
        doc.planner.fresh_nssi_capacity =
            integer(*p, "/planner", "fresh_nssi_capacity", false, PlannerOptions{}.fresh_nssi_capacity);
        if (doc.planner.fresh_nssi_capacity < 0)
            fail(DocumentErrorCode::SchemaError, "/planner/fresh_nssi_capacity", "must be non-negative");
    }

    Domain domain(const json& v, const std::string& p) {
        check_keys(v, p, {"id", "kind", "name"});
        Domain d;
        d.id = DomainId(str(v, p, "id"));
        d.kind = enumeration(v, p, "kind", true, DomainKind::MicroOperator);
        d.name = v.contains("name") && v["name"].is_string() ? v["name"].get<std::string>() : std::string();
        if (v.contains("name") && !v["name"].is_string())
            fail(DocumentErrorCode::SchemaError, p + "/name", "'name' must be a string");
        return d;
    }

    Nssi nssi(const json& v, const std::string& p) {
        check_keys(v, p, {"id", "kind", "owner", "sharable", "capacity", "location", "nf_labels"});
        Nssi n;
        n.id = NssiId(str(v, p, "id"));
        n.kind = enumeration(v, p, "kind", true, SubnetKind::AN);
        n.owner = DomainId(str(v, p, "owner"));
        n.sharable = boolean(v, p, "sharable", true);
        n.capacity = integer(v, p, "capacity", true);
        if (n.capacity < 0) fail(DocumentErrorCode::SchemaError, p + "/capacity", "capacity must be non-negative");
        n.location = opt_str(v, p, "location");
        n.nf_labels = string_set<std::string>(v, p, "nf_labels", false);
        return n;
    }

    Tenant tenant(const json& v, const std::string& p) {
        check_keys(v, p, {"id", "subscriber_class", "home_mno", "locations", "external_connectivity_need"});
        Tenant t;
        t.id = TenantId(str(v, p, "id"));
        t.subscriber_class = enumeration(v, p, "subscriber_class", true, SubscriberClass::PrivateTenant);
        if (auto mno = opt_str(v, p, "home_mno")) t.home_mno = DomainId(*mno);
        if ((t.subscriber_class == SubscriberClass::MnoSubscriberGroup) != t.home_mno.has_value())
            fail(DocumentErrorCode::SchemaError, p, "home_mno is required exactly for MnoSubscriberGroup tenants");
        t.locations = string_set<Location>(v, p, "locations", true);
        if (t.locations.empty() && v.contains("locations"))
            fail(DocumentErrorCode::SchemaError, p + "/locations", "a tenant needs at least one location");
        t.external_connectivity_need = boolean(v, p, "external_connectivity_need", false, false);
        return t;
    }

    PeeringAgreement agreement(const json& v, const std::string& p) {
        check_keys(v, p, {"mno", "direction", "exported_nssis", "exported_local_nssis", "foreign_nsis"});
        PeeringAgreement a;
        a.mno = DomainId(str(v, p, "mno"));
        a.direction = enumeration(v, p, "direction", true, PeeringDirection::MicroOperatorUsesMno);
        a.exported_nssis = string_set<NssiId>(v, p, "exported_nssis", false);
        a.exported_local_nssis = string_set<NssiId>(v, p, "exported_local_nssis", false);
        a.foreign_nsis = string_set<ForeignNsiId>(v, p, "foreign_nsis", false);
        return a;
    }

    DeclaredNsi declared_nsi(const json& v, const std::string& p) {
        check_keys(v, p, {"id", "tenant", "constituents", "linked_foreign_nsis", "lifecycle", "mode", "units"});
        DeclaredNsi d;
        d.nsi.id = NsiId(str(v, p, "id"));
        d.nsi.tenant = TenantId(str(v, p, "tenant"));
        d.nsi.constituents = string_list<NssiId>(v, p, "constituents", true);
        d.nsi.linked_foreign_nsis = string_set<ForeignNsiId>(v, p, "linked_foreign_nsis", false);
        d.nsi.lifecycle = enumeration(v, p, "lifecycle", false, LifecycleState::Active);
        if (d.nsi.lifecycle == LifecycleState::Decommissioned)
            fail(DocumentErrorCode::SchemaError, p + "/lifecycle", "declared slices cannot be Decommissioned");
        d.nsi.mode = enumeration(v, p, "mode", false, ManagementMode::Predefined);
        d.units = integer(v, p, "units", false, 1);
        if (d.units <= 0) fail(DocumentErrorCode::SchemaError, p + "/units", "units must be positive");
        return d;
    }

    ServiceRequest request(const json& v, const std::string& p) {
        check_keys(v, p, {"id", "tenant", "latency_class", "isolation_class", "reliability_class", "wide_area",
                          "demand", "locations"});
        ServiceRequest r;
        r.id = RequestId(str(v, p, "id"));
        r.tenant = TenantId(str(v, p, "tenant"));
        r.latency = enumeration(v, p, "latency_class", true, LatencyClass::Normal);
        r.isolation = enumeration(v, p, "isolation_class", true, IsolationClass::Shared);
        r.reliability = enumeration(v, p, "reliability_class", true, ReliabilityClass::Normal);
        r.wide_area = boolean(v, p, "wide_area", false, false);
        r.demand = integer(v, p, "demand", true, 1);
        if (r.demand <= 0) fail(DocumentErrorCode::SchemaError, p + "/demand", "demand must be positive");
        r.locations = string_set<Location>(v, p, "locations", true);
        if (r.locations.empty() && v.contains("locations"))
            fail(DocumentErrorCode::SchemaError, p + "/locations", "a request needs at least one location");
        return r;
    }

    Event event(const json& v, const std::string& p) {
        if (v.size() != 1) {
            fail(DocumentErrorCode::SchemaError, p, "an event has exactly one of 'instantiate', 'transition', 'bind'");
            return InstantiateEvent{};
        }
        const auto& [kind, body] = *v.items().begin();
        const std::string bp = p + "/" + kind;
        if (!body.is_object()) {
            fail(DocumentErrorCode::SchemaError, bp, "expected an object");
            return InstantiateEvent{};
        }
        if (kind == "instantiate") {
            check_keys(body, bp, {"request", "mode", "nsi"});
            InstantiateEvent e;
            e.request = RequestId(str(body, bp, "request"));
            e.mode = enumeration(body, bp, "mode", false, ManagementMode::Request);
            if (auto n = opt_str(body, bp, "nsi")) e.nsi = NsiId(*n);
            return e;
        }
        if (kind == "transition") {
            check_keys(body, bp, {"nsi", "target", "actor"});
            TransitionEvent e;
            e.nsi = NsiId(str(body, bp, "nsi"));
            e.target = enumeration(body, bp, "target", true, LifecycleState::Instantiated);
            e.actor = enumeration(body, bp, "actor", true, Actor::Operator);
            return e;
        }
        if (kind == "bind") {
            check_keys(body, bp, {"service", "local_nsis", "foreign_nsis"});
            BindEvent e;
            e.binding.service = RequestId(str(body, bp, "service"));
            e.binding.local_nsis = string_set<NsiId>(body, bp, "local_nsis", false);
            e.binding.foreign_nsis = string_set<ForeignNsiId>(body, bp, "foreign_nsis", false);
            return e;
        }
        fail(DocumentErrorCode::SchemaError, bp, "unknown event kind '" + kind + "'");
        return InstantiateEvent{};
    }

    template <class Id>
    void unique(const std::vector<std::pair<Id, std::string>>& ids, const char* what, std::set<Id>& out) {
        for (const auto& [id, pointer] : ids) {
            if (!out.insert(id).second)
                fail(DocumentErrorCode::DuplicateId, pointer + "/id", std::string(what) + " '" + id.str() + "' declared twice");
        }
    }

    void unknown(const std::string& pointer, const char* what, const std::string& id) {
        fail(DocumentErrorCode::UnknownReference, pointer, std::string("unknown ") + what + " '" + id + "'");
    }

    // Second pass: every cross-reference must name a declared entity.
    void resolve(const PlanDocument& doc) {
        std::set<DomainId> domains;
        std::set<DomainId> mnos;
        std::set<NssiId> nssis;
        std::set<TenantId> tenants;
        std::set<RequestId> requests;
        std::set<NsiId> nsis;
        std::set<ForeignNsiId> foreign;
        std::map<TenantId, const Tenant*> tenant_by_id;

        auto indexed = [](const auto& list, const std::string& base, auto get_id) {
            std::vector<std::pair<std::decay_t<decltype(get_id(list.front()))>, std::string>> out;
            for (std::size_t i = 0; i < list.size(); ++i) out.emplace_back(get_id(list[i]), base + "/" + std::to_string(i));
            return out;
        };
        if (!doc.domains.empty())
            unique(indexed(doc.domains, "/domains", [](const Domain& d) { return d.id; }), "domain", domains);
        if (!doc.nssis.empty())
            unique(indexed(doc.nssis, "/nssis", [](const Nssi& n) { return n.id; }), "NSSI", nssis);
        if (!doc.tenants.empty())
            unique(indexed(doc.tenants, "/tenants", [](const Tenant& t) { return t.id; }), "tenant", tenants);
        if (!doc.requests.empty())
            unique(indexed(doc.requests, "/requests", [](const ServiceRequest& r) { return r.id; }), "request",
                   requests);
        if (!doc.nsis.empty())
            unique(indexed(doc.nsis, "/nsis", [](const DeclaredNsi& n) { return n.nsi.id; }), "NSI", nsis);

        int micro_operators = 0;
        for (const auto& d : doc.domains) {
            if (d.kind == DomainKind::Mno) mnos.insert(d.id);
            if (d.kind == DomainKind::MicroOperator) ++micro_operators;
        }
        if (micro_operators != 1)
            fail(DocumentErrorCode::SchemaError, "/domains",
                 "exactly one MicroOperator domain is required, found " + std::to_string(micro_operators));

        for (std::size_t i = 0; i < doc.nssis.size(); ++i)
            if (!domains.contains(doc.nssis[i].owner))
                unknown("/nssis/" + std::to_string(i) + "/owner", "domain", doc.nssis[i].owner.str());

        for (std::size_t i = 0; i < doc.tenants.size(); ++i) {
            const auto& t = doc.tenants[i];
            tenant_by_id.emplace(t.id, &t);
            if (t.home_mno && !mnos.contains(*t.home_mno))
                unknown("/tenants/" + std::to_string(i) + "/home_mno", "MNO domain", t.home_mno->str());
        }

        for (std::size_t i = 0; i < doc.agreements.size(); ++i) {
            const auto& a = doc.agreements[i];
            const std::string p = "/agreements/" + std::to_string(i);
            if (!mnos.contains(a.mno)) unknown(p + "/mno", "MNO domain", a.mno.str());
            std::size_t k = 0;
            for (const auto& n : a.exported_nssis) {
                if (!nssis.contains(n)) unknown(p + "/exported_nssis/" + std::to_string(k), "NSSI", n.str());
                ++k;
            }
            k = 0;
            for (const auto& n : a.exported_local_nssis) {
                if (!nssis.contains(n)) unknown(p + "/exported_local_nssis/" + std::to_string(k), "NSSI", n.str());
                ++k;
            }
            foreign.insert(a.foreign_nsis.begin(), a.foreign_nsis.end());
        }

        for (std::size_t i = 0; i < doc.nsis.size(); ++i) {
            const auto& n = doc.nsis[i].nsi;
            const std::string p = "/nsis/" + std::to_string(i);
            if (!tenants.contains(n.tenant)) unknown(p + "/tenant", "tenant", n.tenant.str());
            for (std::size_t k = 0; k < n.constituents.size(); ++k)
                if (!nssis.contains(n.constituents[k]))
                    unknown(p + "/constituents/" + std::to_string(k), "NSSI", n.constituents[k].str());
            std::size_t k = 0;
            for (const auto& f : n.linked_foreign_nsis) {
                if (!foreign.contains(f)) unknown(p + "/linked_foreign_nsis/" + std::to_string(k), "foreign NSI", f.str());
                ++k;
            }
        }

        for (std::size_t i = 0; i < doc.requests.size(); ++i) {
            const auto& r = doc.requests[i];
            const std::string p = "/requests/" + std::to_string(i);
            auto t = tenant_by_id.find(r.tenant);
            if (t == tenant_by_id.end()) {
                unknown(p + "/tenant", "tenant", r.tenant.str());
                continue;
            }
            for (const auto& loc : r.locations)
                if (!t->second->locations.contains(loc))
                    fail(DocumentErrorCode::SchemaError, p + "/locations",
                         "location '" + loc + "' is not a location of tenant '" + r.tenant.str() + "'");
        }

        if (!doc.events) return;
        for (std::size_t i = 0; i < doc.events->size(); ++i) {
            const std::string p = "/events/" + std::to_string(i);
            const Event& ev = (*doc.events)[i];
            if (const auto* e = std::get_if<InstantiateEvent>(&ev)) {
                if (!requests.contains(e->request)) unknown(p + "/instantiate/request", "request", e->request.str());
                if (e->nsi && !nsis.insert(*e->nsi).second)
                    fail(DocumentErrorCode::DuplicateId, p + "/instantiate/nsi", "NSI '" + e->nsi->str() + "' declared twice");
            } else if (const auto* e = std::get_if<TransitionEvent>(&ev)) {
                if (!nsis.contains(e->nsi)) unknown(p + "/transition/nsi", "NSI", e->nsi.str());
            } else if (const auto* e = std::get_if<BindEvent>(&ev)) {
                if (!requests.contains(e->binding.service))
                    unknown(p + "/bind/service", "request", e->binding.service.str());
                std::size_t k = 0;
                for (const auto& n : e->binding.local_nsis) {
                    if (!nsis.contains(n)) unknown(p + "/bind/local_nsis/" + std::to_string(k), "NSI", n.str());
                    ++k;
                }
                k = 0;
                for (const auto& f : e->binding.foreign_nsis) {
                    if (!foreign.contains(f)) unknown(p + "/bind/foreign_nsis/" + std::to_string(k), "foreign NSI", f.str());
                    ++k;
                }
            }
        }
    }

    const json& root_;
    const SourceMap& map_;
    std::vector<Diagnostic> diags_;
};

template <class Set>
json string_array(const Set& items) {
    json out = json::array();
    for (const auto& i : items) {
        if constexpr (requires { i.str(); })
            out.push_back(i.str());
        else
            out.push_back(i);
    }
    return out;
}

} // namespace

PlanDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const Position pos = position_of_byte(text, e.byte);
        std::string message = e.what();
        // Drop the library prefix; line and column are reported separately.
        if (auto col = message.find("column "); col != std::string::npos)
            if (auto cut = message.find(": ", col); cut != std::string::npos) message = message.substr(cut + 2);
        throw DocumentError({Diagnostic{DocumentErrorCode::SyntaxError, message, "", pos.line, pos.column}});
    }
    const SourceMap map(text);
    return Reader(root, map).read();
}

std::string serialize_document(const PlanDocument& doc) {
    json out;
    out["schema_version"] = doc.schema_version;
    out["scenario"] = {{"kind", to_string(doc.scenario.kind)}, {"multi_location", doc.scenario.multi_location}};
    out["planner"] = {{"fresh_nssi_capacity", doc.planner.fresh_nssi_capacity}};

    out["domains"] = json::array();
    for (const auto& d : doc.domains)
        out["domains"].push_back({{"id", d.id.str()}, {"kind", to_string(d.kind)}, {"name", d.name}});

    out["nssis"] = json::array();
    for (const auto& n : doc.nssis) {
        json e = {{"id", n.id.str()},         {"kind", to_string(n.kind)}, {"owner", n.owner.str()},
                  {"sharable", n.sharable},   {"capacity", n.capacity},    {"nf_labels", string_array(n.nf_labels)}};
        if (n.location) e["location"] = *n.location;
        out["nssis"].push_back(std::move(e));
    }

    out["tenants"] = json::array();
    for (const auto& t : doc.tenants) {
        json e = {{"id", t.id.str()},
                  {"subscriber_class", to_string(t.subscriber_class)},
                  {"locations", string_array(t.locations)},
                  {"external_connectivity_need", t.external_connectivity_need}};
        if (t.home_mno) e["home_mno"] = t.home_mno->str();
        out["tenants"].push_back(std::move(e));
    }

    out["agreements"] = json::array();
    for (const auto& a : doc.agreements) {
        out["agreements"].push_back({{"mno", a.mno.str()},
                                     {"direction", to_string(a.direction)},
                                     {"exported_nssis", string_array(a.exported_nssis)},
                                     {"exported_local_nssis", string_array(a.exported_local_nssis)},
                                     {"foreign_nsis", string_array(a.foreign_nsis)}});
    }

    out["nsis"] = json::array();
    for (const auto& d : doc.nsis) {
        out["nsis"].push_back({{"id", d.nsi.id.str()},
                               {"tenant", d.nsi.tenant.str()},
                               {"constituents", string_array(d.nsi.constituents)},
                               {"linked_foreign_nsis", string_array(d.nsi.linked_foreign_nsis)},
                               {"lifecycle", to_string(d.nsi.lifecycle)},
                               {"mode", to_string(d.nsi.mode)},
                               {"units", d.units}});
    }

    out["requests"] = json::array();
    for (const auto& r : doc.requests) {
        out["requests"].push_back({{"id", r.id.str()},
                                   {"tenant", r.tenant.str()},
                                   {"latency_class", to_string(r.latency)},
                                   {"isolation_class", to_string(r.isolation)},
                                   {"reliability_class", to_string(r.reliability)},
                                   {"wide_area", r.wide_area},
                                   {"demand", r.demand},
                                   {"locations", string_array(r.locations)}});
    }

    if (doc.events) {
        out["events"] = json::array();
        for (const auto& ev : *doc.events) {
            if (const auto* e = std::get_if<InstantiateEvent>(&ev)) {
                json body = {{"request", e->request.str()}, {"mode", to_string(e->mode)}};
                if (e->nsi) body["nsi"] = e->nsi->str();
                out["events"].push_back({{"instantiate", std::move(body)}});
            } else if (const auto* e = std::get_if<TransitionEvent>(&ev)) {
                out["events"].push_back({{"transition",
                                          {{"nsi", e->nsi.str()},
                                           {"target", to_string(e->target)},
                                           {"actor", to_string(e->actor)}}}});
            } else if (const auto* e = std::get_if<BindEvent>(&ev)) {
                out["events"].push_back({{"bind",
                                          {{"service", e->binding.service.str()},
                                           {"local_nsis", string_array(e->binding.local_nsis)},
                                           {"foreign_nsis", string_array(e->binding.foreign_nsis)}}}});
            }
        }
    }
    return out.dump(2) + "\n";
}

} // namespace uoslice
