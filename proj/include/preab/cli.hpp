#pragma once

// Command implementations behind the `preab` executable. They write to the
// given streams and return the process exit code.
//
//   0  consistent verdict / check passed / decomposition printed
//   1  usage, IO, parse or constraint error
//   2  counterexample: refuted verdict, law violation, or check failed
//   3  inconclusive audit / vacuous check

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace preab {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;

/// Runs the configured audit and writes the report document to `out_path`
/// ("-" for `out`).
int cmd_audit(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed, std::optional<std::string> backend,
              std::ostream& out, std::ostream& err);

/// Replays one checker. `instance` is JSON text or a path to a JSON file
/// holding either an instance or a whole check result (e.g. a report
/// witness). An empty backend falls back to the payload's "backend" key.
int cmd_check(const std::string& backend, const std::string& check_name, const std::string& instance,
              std::ostream& out, std::ostream& err);

/// Prints {coim, fbar, im, flags} for one morphism (JSON text or path).
int cmd_decompose(const std::string& backend, const std::string& morphism, std::ostream& out,
                  std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace preab
