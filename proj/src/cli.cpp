#include "preab/cli.hpp"

#include "preab/backends.hpp"
#include "preab/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace preab {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON when the argument starts with '{', otherwise a file path.
Json load_json(const std::string& arg)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    const std::string text = first != std::string::npos && arg[first] == '{' ? arg : read_file(arg);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

std::string backend_of(const std::string& flag, const Json& payload)
{
    if (!flag.empty()) return flag;
    if (payload.is_object() && payload.contains("backend") && payload["backend"].is_string())
        return payload["backend"].get<std::string>();
    throw std::invalid_argument("no backend given (use --backend)");
}

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::pass: return kExitOk;
    case Verdict::fail: return kExitRefuted;
    case Verdict::vacuous: return kExitInconclusive;
    }
    return kExitError;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace

int cmd_audit(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed, std::optional<std::string> backend,
              std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Json raw = [&] {
            try {
                return Json::parse(read_file(config_path));
            } catch (const Json::parse_error& e) {
                throw SchemaError(std::string("invalid config JSON: ") + e.what());
            }
        }();
        AuditConfig config = config_from_json(raw);
        if (seed) config.seed = *seed;
        if (backend) config.backend = *backend;

        const AuditReport report = run_audit(config);
        const std::string text = emit(to_json(make_document(config, report)));
        if (out_path.empty() || out_path == "-") {
            out << text;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot write " + out_path);
            file << text;
            out << "verdict: " << to_string(report.verdict) << "\n";
        }
        return exit_code(report);
    });
}

int cmd_check(const std::string& backend, const std::string& check_name, const std::string& instance,
              std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto kind = parse_check_kind(check_name);
        if (!kind) throw std::invalid_argument("unknown check '" + check_name + "'");
        const Json payload = load_json(instance);
        const CategoryPtr cat = make_backend(backend_of(backend, payload));
        const Json& inst = payload.contains("instance") ? payload["instance"] : payload;
        const CheckResult r = run_check(cat, *kind, instance_from_json(inst));
        out << emit(to_json(r));
        return verdict_exit(r.verdict);
    });
}

int cmd_decompose(const std::string& backend, const std::string& morphism, std::ostream& out,
                  std::ostream& err)
{
    return guarded(err, [&] {
        const Json payload = load_json(morphism);
        const CategoryPtr cat = make_backend(backend_of(backend, payload));
        const Morphism f = morphism_from_json(payload.contains("morphism") ? payload["morphism"] : payload);
        cat->validate(f);
        const Decomposition d = decompose(*cat, f);
        const MorphismClass c = classify(*cat, f);
        const Json doc = {{"backend", cat->name()},
                          {"coim", to_json(d.coim)},
                          {"fbar", to_json(d.fbar)},
                          {"im", to_json(d.im)},
                          {"flags",
                           {{"mono", c.mono},
                            {"epi", c.epi},
                            {"bimorphism", c.bimorphism},
                            {"iso", c.iso},
                            {"strict", c.strict},
                            {"kernel", c.is_kernel},
                            {"cokernel", c.is_cokernel}}}};
        out << emit(doc);
        return kExitOk;
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Preabelian category workbench: semi-abelian condition checks and audits", "preab"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string config_path, out_path = "-", backend, check_name, payload;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> backend_override;

    auto* audit = app.add_subcommand("audit", "Run a randomized audit campaign");
    audit->add_option("--config", config_path, "Audit config (JSON)")->required();
    audit->add_option("--out", out_path, "Report path, '-' for stdout");
    audit->add_option("--seed", seed, "Override the config seed");
    audit->add_option("--backend", backend_override, "Override the config backend");

    auto* check = app.add_subcommand("check", "Replay a single checker on one instance");
    check->add_option("--backend", backend, "VectQ, SubVect, FiltVect_<n>, LatZ, op(...)");
    check->add_option("check", check_name, "right-i .. left-vii, strict, semi-abelian, lemma2, ...")
        ->required();
    check->add_option("instance", payload, "Instance JSON text or path")->required();

    auto* dec = app.add_subcommand("decompose", "Print the canonical decomposition of a morphism");
    dec->add_option("--backend", backend, "Backend name");
    dec->add_option("morphism", payload, "Morphism JSON text or path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (audit->parsed()) return cmd_audit(config_path, out_path, seed, backend_override, out, err);
    if (check->parsed()) return cmd_check(backend, check_name, payload, out, err);
    return cmd_decompose(backend, payload, out, err);
}

} // namespace preab
