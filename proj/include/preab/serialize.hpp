#pragma once

// JSON forms of matrices, objects, morphisms, instances, check results,
// audit configs and report documents. Rationals are always strings "p/q";
// matrices are {"rows", "cols", "data"} so empty shapes survive.

#include "preab/audit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace preab {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;
const char* tool_version();

/// Any structural problem in a JSON payload.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const Object& a);
Object object_from_json(const Json& j);

Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);

/// {"morphisms": {...}, "params": {...}}
Json to_json(const Instance& in);
Instance instance_from_json(const Json& j);

/// {"condition", "backend", "verdict", "reason", "instance", "witness"}
Json to_json(const CheckResult& r);
CheckResult check_result_from_json(const Json& j);

/// Keys: backend, seed, samples {default, <kind>...}, dim_bound,
/// shrink_budget, min_nonvacuous, workers, probe_samples, max_witnesses.
/// Missing keys keep their defaults; unknown keys are rejected.
AuditConfig config_from_json(const Json& j);
/// The echo omits `workers`: reports must not depend on parallelism.
Json config_echo(const AuditConfig& c);

Json to_json(const AuditReport& r);
AuditReport report_from_json(const Json& j);

struct ReportDocument {
    int schema_version = kSchemaVersion;
    std::string tool_version;
    Json config;
    AuditReport report;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const AuditConfig& config, const AuditReport& report);
Json to_json(const ReportDocument& doc);
/// Refuses any schema_version other than kSchemaVersion.
ReportDocument document_from_json(const Json& j);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string emit(const Json& j);

} // namespace preab
