#pragma once

// Per-instance checkers for the right and left semi-abelian conditions, the
// semi-abelian (bimorphism) test, the two image/coimage lemmas and the
// semi-stability probe.
//
// Right conditions (diagram: C -g-> D, alpha: C -> A, beta: D -> B, f: A -> B)
//   i    fbar is an epimorphism
//   ii   h∘l a kernel            => l a kernel
//   iii  pushout, g a kernel     => the square is a pullback
//   iv   pushout, g a kernel     => f mono
//   v    pushout, g a kernel, beta a cokernel => f mono
//   vi   h, l kernels            => h∘l a kernel
//   vii  pushout, g strict       => the induced map on kernels is epi
// Left conditions are the same statements in the opposite category.

#include "preab/constructions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace preab {

enum class CheckKind {
    right_i, right_ii, right_iii, right_iv, right_v, right_vi, right_vii,
    left_i, left_ii, left_iii, left_iv, left_v, left_vi, left_vii,
    strict,
    semi_abelian,
    lemma2,
    corollary3_kernels,
    corollary3_cokernels,
    semistable_kernel,
    semistable_cokernel,
};

/// "right-iii", "left-vii", "strict", "semi-abelian", "lemma2",
/// "corollary3-kernels", "semistable-cokernel", ...
std::string to_string(CheckKind kind);
std::optional<CheckKind> parse_check_kind(std::string_view name);

const std::vector<CheckKind>& all_check_kinds();

/// One of the fourteen equivalent-condition checks.
bool is_condition(CheckKind kind);
bool is_left(CheckKind kind);
/// Conditions with a hypothesis (ii..vii on either side); these can be vacuous.
bool is_conditional(CheckKind kind);
/// right-x <-> left-x; identity on the other kinds.
CheckKind dual(CheckKind kind);

enum class Verdict { pass, fail, vacuous };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

/// Named morphisms plus integer parameters. Key names per kind:
///   i, strict, semi-abelian, semistable-*   f
///   ii, vi                                  h, l   (h∘l)
///   right iii-vii                           alpha, g  [+ beta, f]
///   left iii-vii                            f, beta   [+ alpha, g]
///   lemma2, corollary3-*                    f, g   (g∘f)
/// Squares given by two legs are completed as a pushout (right side) or a
/// pullback (left side); with all four legs they are taken as merely
/// commutative and the universal property is verified instead.
struct Instance {
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, std::int64_t> params;

    const Morphism& at(const std::string& name) const;
    bool has(const std::string& name) const { return morphisms.count(name) != 0; }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Missing keys, wrong shapes or non-composable data.
class MalformedInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckResult {
    CheckKind kind = CheckKind::right_i;
    std::string backend;
    Verdict verdict = Verdict::vacuous;
    Instance instance;  ///< replayable input
    std::string reason;
    std::map<std::string, Morphism> witness;  ///< offending data on failure

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

CheckResult check_right_i(const Category& cat, const Morphism& f);
CheckResult check_right_ii(const Category& cat, const Morphism& h, const Morphism& l);
CheckResult check_right_iii(const Category& cat, const Square& sq);
CheckResult check_right_iv(const Category& cat, const Square& sq);
CheckResult check_right_v(const Category& cat, const Square& sq);
CheckResult check_right_vi(const Category& cat, const Morphism& h, const Morphism& l);
CheckResult check_right_vii(const Category& cat, const Square& sq);

/// Left condition `cond` as the matching right condition in opposite(cat),
/// on the transported instance.
CheckResult check_left(const CategoryPtr& cat, CheckKind cond, const Instance& instance);

/// Left condition evaluated natively in `cat` with cokernels, pullbacks and
/// induced cokernel maps. Independent of the opposite adapter.
CheckResult check_left_direct(const Category& cat, CheckKind cond, const Instance& instance);

CheckResult check_strict(const Category& cat, const Morphism& f);
CheckResult check_semi_abelian(const Category& cat, const Morphism& f);

/// cok(g∘im f) ≅ cok(g∘f) and ker((coim g)∘f) ≅ ker(g∘f) by unique
/// isomorphisms compatible with the legs.
CheckResult check_lemma2(const Category& cat, const Morphism& f, const Morphism& g);

enum class Corollary3Side { kernels, cokernels };

/// kernels: g a kernel => im(g∘f) ≅ g∘im f.
/// cokernels: f a cokernel => coim(g∘f) ≅ (coim g)∘f.
CheckResult check_corollary3(const Category& cat, const Morphism& f, const Morphism& g,
                             Corollary3Side side);

enum class SemistableRole { kernel, cokernel };

/// Samples pushouts of a kernel (pullbacks of a cokernel) along random
/// morphisms and fails on the first transported leg that is no longer a
/// kernel (cokernel). A pass only means no counterexample was found.
CheckResult probe_semistable(const Category& cat, const Morphism& f, SemistableRole role,
                             std::int64_t n_samples, std::uint64_t seed, Index dim_bound);

/// Left instance in C <-> right instance in op(C): every morphism flipped,
/// names exchanged g<->f, alpha<->beta (squares) and h<->l (pairs).
Instance transport(CheckKind kind, const Instance& instance);

/// Dispatch by kind. Throws MalformedInstance or ConstraintViolation when
/// the instance does not fit the kind or the backend.
CheckResult run_check(const CategoryPtr& cat, CheckKind kind, const Instance& instance);

/// Validates the instance against the backend and the kind's key layout.
void validate_instance(const Category& cat, CheckKind kind, const Instance& instance);

} // namespace preab
