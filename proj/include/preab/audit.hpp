#pragma once

// Randomized audit campaigns: instance generation, parallel evaluation,
// witness shrinking and the empirical zoo verdict.

#include "preab/conditions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace preab {

struct AuditConfig {
    std::string backend = "VectQ";
    std::uint64_t seed = 0;
    /// Samples for every audited kind unless overridden in `samples`.
    std::int64_t default_samples = 0;
    std::map<CheckKind, std::int64_t> samples;
    Index dim_bound = 3;
    std::int64_t shrink_budget = 200;
    /// Non-vacuous instances required per condition (and for strict).
    std::int64_t min_nonvacuous = 30;
    int workers = 1;
    /// Pushouts (pullbacks) sampled per semi-stability instance.
    std::int64_t probe_samples = 20;
    /// Shrunk witnesses kept per kind.
    std::int64_t max_witnesses = 3;

    std::int64_t samples_for(CheckKind kind) const;

    friend bool operator==(const AuditConfig&, const AuditConfig&) = default;
};

/// The kinds a campaign samples: the fourteen conditions, strict, lemma2,
/// both corollary3 sides and both semi-stability roles.
const std::vector<CheckKind>& audited_kinds();

struct Tally {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t vacuous = 0;
    std::int64_t exhausted = 0;  ///< generator gave up

    std::int64_t nonvacuous() const { return pass + fail; }
    std::int64_t total() const { return pass + fail + vacuous + exhausted; }

    friend bool operator==(const Tally&, const Tally&) = default;
};

enum class ZooVerdict {
    abelian_consistent,
    quasi_abelian_consistent,
    semi_abelian_consistent,
    left_only,
    right_only,
    preabelian_only,
    inconclusive,
};

std::string to_string(ZooVerdict v);
std::optional<ZooVerdict> parse_zoo_verdict(std::string_view name);

struct AuditReport {
    std::map<CheckKind, Tally> tallies;
    ZooVerdict verdict = ZooVerdict::inconclusive;
    std::vector<std::string> caveats;
    std::vector<CheckResult> witnesses;  ///< shrunk, replayable

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Decision table, in order:
///   1. nothing sampled                                  -> inconclusive
///   2. fails on both sides                              -> preabelian-only
///   3. fails on one side                                -> left-only / right-only
///   4. a condition or strict below min_nonvacuous       -> inconclusive
///   5. a semi-stability counterexample                  -> semi-abelian-consistent
///   6. no strictness failure                            -> abelian-consistent
///   7. both semi-stability roles probed, all clean      -> quasi-abelian-consistent
///   8. otherwise                                        -> semi-abelian-consistent
ZooVerdict decide_verdict(const std::map<CheckKind, Tally>& tallies, std::int64_t min_nonvacuous);

/// Lemma 2 fails, or Corollary 3 fails where its composition hypothesis
/// (right-vi, resp. left-vi) was not refuted.
bool has_law_violation(const std::map<CheckKind, Tally>& tallies);

/// 0 consistent, 2 refuted or law violation, 3 inconclusive.
int exit_code(const AuditReport& report);

/// Builds an instance shaped for `kind` (kernel legs, pushouts along kernels,
/// strict maps, ...). Deterministic in `seed`; nullopt when the retry budget
/// runs out.
std::optional<Instance> generate_instance(const CategoryPtr& cat, CheckKind kind, Index dim_bound,
                                          std::uint64_t seed, std::int64_t probe_samples = 20);

/// Lexicographic size used by shrink: total dimension, entry magnitude,
/// nonzero entries.
struct WitnessSize {
    std::int64_t dimension = 0;
    Integer magnitude = 0;
    std::int64_t nonzeros = 0;

    friend bool operator<(const WitnessSize& a, const WitnessSize& b)
    {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
        return a.nonzeros < b.nonzeros;
    }
    friend bool operator==(const WitnessSize&, const WitnessSize&) = default;
};

WitnessSize witness_size(const Instance& instance);

/// Greedy shrinking of a failing result: coordinate deletion on shared
/// objects, then entry zeroing, then magnitude reduction. Every accepted step
/// still fails the same checker; at most `budget` candidates are evaluated.
CheckResult shrink(const CategoryPtr& cat, const CheckResult& failing, std::int64_t budget);

AuditReport run_audit(const AuditConfig& config);

} // namespace preab
