#include "preab/serialize.hpp"

#include "preab/linalg.hpp"

#ifndef PREAB_VERSION
#define PREAB_VERSION "0.0.0"
#endif

namespace preab {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
    return *it;
}

template <typename T>
T get(const Json& j, const char* key)
{
    try {
        return field(j, key).get<T>();
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("bad value for '") + key + "': " + e.what());
    }
}

std::int64_t get_count(const Json& j, const char* key)
{
    const auto v = get<std::int64_t>(j, key);
    if (v < 0) throw SchemaError(std::string("'") + key + "' must be non-negative");
    return v;
}

CheckKind kind_from(const std::string& name)
{
    const auto k = parse_check_kind(name);
    if (!k) throw SchemaError("unknown check '" + name + "'");
    return *k;
}

Json morphism_map(const std::map<std::string, Morphism>& ms)
{
    Json out = Json::object();
    for (const auto& [name, m] : ms) out[name] = to_json(m);
    return out;
}

std::map<std::string, Morphism> morphism_map_from(const Json& j)
{
    if (!j.is_object()) throw SchemaError("expected an object of morphisms");
    std::map<std::string, Morphism> out;
    for (const auto& [name, m] : j.items()) out.emplace(name, morphism_from_json(m));
    return out;
}

} // namespace

const char* tool_version() { return PREAB_VERSION; }

Json to_json(const RatMatrix& m)
{
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

RatMatrix matrix_from_json(const Json& j)
{
    const Index rows = get_count(j, "rows"), cols = get_count(j, "cols");
    const Json& data = field(j, "data");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows)
        throw SchemaError("matrix data must hold 'rows' rows");
    RatMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const Json& row = data[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw SchemaError("matrix row " + std::to_string(i) + " must hold 'cols' entries");
        for (Index c = 0; c < cols; ++c) {
            const Json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_string()) throw SchemaError("matrix entries are strings \"p/q\"");
            try {
                m(i, c) = parse_rational(e.get<std::string>());
            } catch (const std::invalid_argument& err) {
                throw SchemaError(err.what());
            }
        }
    }
    return m;
}

Json to_json(const Object& a)
{
    Json layers = Json::array();
    for (const auto& layer : a.layers) layers.push_back(to_json(layer.basis()));
    return {{"dim", a.dim}, {"layers", std::move(layers)}};
}

Object object_from_json(const Json& j)
{
    Object a;
    a.dim = get_count(j, "dim");
    const Json& layers = field(j, "layers");
    if (!layers.is_array()) throw SchemaError("'layers' must be an array");
    for (const Json& l : layers) {
        const RatMatrix basis = matrix_from_json(l);
        if (basis.rows() != a.dim) throw SchemaError("layer basis must have 'dim' rows");
        a.layers.push_back(RatSubspace::span(basis));
    }
    return a;
}

Json to_json(const Morphism& f)
{
    return {{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"matrix", to_json(f.matrix)}};
}

Morphism morphism_from_json(const Json& j)
{
    return Morphism{object_from_json(field(j, "dom")), object_from_json(field(j, "cod")),
                    matrix_from_json(field(j, "matrix"))};
}

Json to_json(const Instance& in)
{
    Json params = Json::object();
    for (const auto& [k, v] : in.params) params[k] = v;
    return {{"morphisms", morphism_map(in.morphisms)}, {"params", std::move(params)}};
}

Instance instance_from_json(const Json& j)
{
    Instance in;
    in.morphisms = morphism_map_from(field(j, "morphisms"));
    if (j.contains("params")) {
        const Json& p = j.at("params");
        if (!p.is_object()) throw SchemaError("'params' must be an object");
        for (const auto& [k, v] : p.items()) {
            if (!v.is_number_integer()) throw SchemaError("param '" + k + "' must be an integer");
            in.params[k] = v.get<std::int64_t>();
        }
    }
    return in;
}

Json to_json(const CheckResult& r)
{
    return {{"condition", to_string(r.kind)}, {"backend", r.backend},
            {"verdict", to_string(r.verdict)}, {"reason", r.reason},
            {"instance", to_json(r.instance)},  {"witness", morphism_map(r.witness)}};
}

CheckResult check_result_from_json(const Json& j)
{
    CheckResult r;
    r.kind = kind_from(get<std::string>(j, "condition"));
    r.backend = get<std::string>(j, "backend");
    const auto v = parse_verdict(get<std::string>(j, "verdict"));
    if (!v) throw SchemaError("unknown verdict");
    r.verdict = *v;
    r.reason = get<std::string>(j, "reason");
    r.instance = instance_from_json(field(j, "instance"));
    r.witness = morphism_map_from(field(j, "witness"));
    return r;
}

AuditConfig config_from_json(const Json& j)
{
    if (!j.is_object()) throw SchemaError("config must be a JSON object");
    AuditConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "backend") c.backend = get<std::string>(j, "backend");
        else if (key == "seed") {
            if (!value.is_number_unsigned()) throw SchemaError("'seed' must be a non-negative integer");
            c.seed = value.get<std::uint64_t>();
        }
        else if (key == "dim_bound") c.dim_bound = get_count(j, "dim_bound");
        else if (key == "shrink_budget") c.shrink_budget = get_count(j, "shrink_budget");
        else if (key == "min_nonvacuous") c.min_nonvacuous = get_count(j, "min_nonvacuous");
        else if (key == "workers") c.workers = static_cast<int>(get_count(j, "workers"));
        else if (key == "probe_samples") c.probe_samples = get_count(j, "probe_samples");
        else if (key == "max_witnesses") c.max_witnesses = get_count(j, "max_witnesses");
        else if (key == "samples") {
            if (value.is_number_integer()) {
                c.default_samples = get_count(j, "samples");
                continue;
            }
            if (!value.is_object()) throw SchemaError("'samples' must be a count or an object");
            for (const auto& [name, n] : value.items()) {
                if (name == "default") c.default_samples = get_count(value, "default");
                else c.samples[kind_from(name)] = get_count(value, name.c_str());
            }
        } else {
            throw SchemaError("unknown config key '" + key + "'");
        }
    }
    return c;
}

Json config_echo(const AuditConfig& c)
{
    Json samples = {{"default", c.default_samples}};
    for (const auto& [kind, n] : c.samples) samples[to_string(kind)] = n;
    return {{"backend", c.backend},
            {"seed", c.seed},
            {"samples", std::move(samples)},
            {"dim_bound", c.dim_bound},
            {"shrink_budget", c.shrink_budget},
            {"min_nonvacuous", c.min_nonvacuous},
            {"probe_samples", c.probe_samples},
            {"max_witnesses", c.max_witnesses}};
}

Json to_json(const AuditReport& r)
{
    Json tallies = Json::object();
    for (const auto& [kind, t] : r.tallies)
        tallies[to_string(kind)] = {
            {"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}, {"exhausted", t.exhausted}};
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"tallies", std::move(tallies)},
            {"verdict", to_string(r.verdict)},
            {"caveats", r.caveats},
            {"witnesses", std::move(witnesses)}};
}

AuditReport report_from_json(const Json& j)
{
    AuditReport r;
    const Json& tallies = field(j, "tallies");
    if (!tallies.is_object()) throw SchemaError("'tallies' must be an object");
    for (const auto& [name, t] : tallies.items())
        r.tallies[kind_from(name)] = Tally{get_count(t, "pass"), get_count(t, "fail"),
                                           get_count(t, "vacuous"), get_count(t, "exhausted")};
    const auto v = parse_zoo_verdict(get<std::string>(j, "verdict"));
    if (!v) throw SchemaError("unknown zoo verdict");
    r.verdict = *v;
    r.caveats = get<std::vector<std::string>>(j, "caveats");
    const Json& ws = field(j, "witnesses");
    if (!ws.is_array()) throw SchemaError("'witnesses' must be an array");
    for (const Json& w : ws) r.witnesses.push_back(check_result_from_json(w));
    return r;
}

ReportDocument make_document(const AuditConfig& config, const AuditReport& report)
{
    return ReportDocument{kSchemaVersion, tool_version(), config_echo(config), report};
}

Json to_json(const ReportDocument& doc)
{
    return {{"schema_version", doc.schema_version},
            {"tool_version", doc.tool_version},
            {"config", doc.config},
            {"report", to_json(doc.report)}};
}

ReportDocument document_from_json(const Json& j)
{
    const int version = get<int>(j, "schema_version");
    if (version != kSchemaVersion)
        throw SchemaError("unsupported schema_version " + std::to_string(version));
    ReportDocument doc;
    doc.schema_version = version;
    doc.tool_version = get<std::string>(j, "tool_version");
    doc.config = field(j, "config");
    doc.report = report_from_json(field(j, "report"));
    return doc;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

} // namespace preab
