#include "preab/conditions.hpp"

#include <array>
#include <set>
#include <utility>

namespace preab {

namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 21> kKindNames{{
    {CheckKind::right_i, "right-i"},
    {CheckKind::right_ii, "right-ii"},
    {CheckKind::right_iii, "right-iii"},
    {CheckKind::right_iv, "right-iv"},
    {CheckKind::right_v, "right-v"},
    {CheckKind::right_vi, "right-vi"},
    {CheckKind::right_vii, "right-vii"},
    {CheckKind::left_i, "left-i"},
    {CheckKind::left_ii, "left-ii"},
    {CheckKind::left_iii, "left-iii"},
    {CheckKind::left_iv, "left-iv"},
    {CheckKind::left_v, "left-v"},
    {CheckKind::left_vi, "left-vi"},
    {CheckKind::left_vii, "left-vii"},
    {CheckKind::strict, "strict"},
    {CheckKind::semi_abelian, "semi-abelian"},
    {CheckKind::lemma2, "lemma2"},
    {CheckKind::corollary3_kernels, "corollary3-kernels"},
    {CheckKind::corollary3_cokernels, "corollary3-cokernels"},
    {CheckKind::semistable_kernel, "semistable-kernel"},
    {CheckKind::semistable_cokernel, "semistable-cokernel"},
}};

int kind_index(CheckKind k) { return static_cast<int>(k); }

CheckResult start(const Category& cat, CheckKind kind, Instance instance)
{
    CheckResult r;
    r.kind = kind;
    r.backend = cat.name();
    r.instance = std::move(instance);
    return r;
}

// Runs `body` and converts a LawViolation into a failing verdict.
template <typename Body>
CheckResult guarded(CheckResult r, Body&& body)
{
    try {
        body(r);
    } catch (const LawViolation& e) {
        r.verdict = Verdict::fail;
        r.reason = std::string("law violation: ") + e.what();
    }
    return r;
}

void set(CheckResult& r, bool ok, std::string fail_reason)
{
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    if (!ok) r.reason = std::move(fail_reason);
}

void vacuous(CheckResult& r, std::string why)
{
    r.verdict = Verdict::vacuous;
    r.reason = std::move(why);
}

Instance single(const Morphism& f)
{
    return Instance{{{"f", f}}, {}};
}

Instance pair(const char* a, const Morphism& x, const char* b, const Morphism& y)
{
    return Instance{{{a, x}, {b, y}}, {}};
}

Instance right_square_instance(const Square& sq)
{
    Instance in{{{"alpha", sq.alpha}, {"g", sq.g}}, {}};
    if (sq.provenance != Provenance::pushout) {
        in.morphisms.emplace("beta", sq.beta);
        in.morphisms.emplace("f", sq.f);
    }
    return in;
}

Square full_square(const Category& cat, const Instance& in)
{
    if (!in.has("alpha") || !in.has("g") || !in.has("beta") || !in.has("f"))
        throw MalformedInstance("square needs alpha, g, beta and f");
    try {
        return make_square(cat, in.at("g"), in.at("alpha"), in.at("beta"), in.at("f"));
    } catch (const std::invalid_argument& e) {
        throw MalformedInstance(e.what());
    }
}

Square right_square(const Category& cat, const Instance& in)
{
    if (in.has("f") || in.has("beta")) return full_square(cat, in);
    if (!(in.at("alpha").dom == in.at("g").dom))
        throw MalformedInstance("alpha and g must share their domain");
    return pushout(cat, in.at("alpha"), in.at("g"));
}

Square left_square(const Category& cat, const Instance& in)
{
    if (in.has("alpha") || in.has("g")) return full_square(cat, in);
    if (!(in.at("f").cod == in.at("beta").cod))
        throw MalformedInstance("f and beta must share their codomain");
    return pullback(cat, in.at("f"), in.at("beta"));
}

void require_composable(const Morphism& outer, const Morphism& inner, const char* what)
{
    if (!(inner.cod == outer.dom)) throw MalformedInstance(std::string(what) + " is not composable");
}

// Hypotheses shared by right iii, iv, v: the square is a pushout and g is a
// kernel. Returns false (and marks the result vacuous) otherwise.
bool right_pushout_of_kernel(const Category& cat, const Square& sq, CheckResult& r)
{
    if (sq.provenance != Provenance::pushout && !is_pushout(cat, sq)) {
        vacuous(r, "square is not a pushout");
        return false;
    }
    if (!is_kernel(cat, sq.g)) {
        vacuous(r, "g is not a kernel");
        return false;
    }
    return true;
}

bool left_pullback_of_cokernel(const Category& cat, const Square& sq, CheckResult& r)
{
    if (sq.provenance != Provenance::pullback && !is_pullback(cat, sq)) {
        vacuous(r, "square is not a pullback");
        return false;
    }
    if (!is_cokernel(cat, sq.f)) {
        vacuous(r, "f is not a cokernel");
        return false;
    }
    return true;
}

std::int64_t param_or(const Instance& in, const std::string& key, std::int64_t fallback)
{
    const auto it = in.params.find(key);
    return it == in.params.end() ? fallback : it->second;
}

} // namespace

// ---------------------------------------------------------------------------
// Kind metadata

std::string to_string(CheckKind kind)
{
    return std::string(kKindNames[static_cast<std::size_t>(kind_index(kind))].second);
}

std::optional<CheckKind> parse_check_kind(std::string_view name)
{
    for (const auto& [kind, text] : kKindNames)
        if (text == name) return kind;
    return std::nullopt;
}

const std::vector<CheckKind>& all_check_kinds()
{
    static const std::vector<CheckKind> kinds = [] {
        std::vector<CheckKind> v;
        for (const auto& entry : kKindNames) v.push_back(entry.first);
        return v;
    }();
    return kinds;
}

bool is_condition(CheckKind kind)
{
    return kind_index(kind) <= kind_index(CheckKind::left_vii);
}

bool is_left(CheckKind kind)
{
    return kind_index(kind) >= kind_index(CheckKind::left_i) &&
           kind_index(kind) <= kind_index(CheckKind::left_vii);
}

bool is_conditional(CheckKind kind)
{
    return is_condition(kind) && kind != CheckKind::right_i && kind != CheckKind::left_i;
}

CheckKind dual(CheckKind kind)
{
    if (!is_condition(kind)) return kind;
    const int offset = kind_index(CheckKind::left_i);
    const int i = kind_index(kind);
    return static_cast<CheckKind>(i < offset ? i + offset : i - offset);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    }
    return "vacuous";
}

std::optional<Verdict> parse_verdict(std::string_view name)
{
    if (name == "pass") return Verdict::pass;
    if (name == "fail") return Verdict::fail;
    if (name == "vacuous") return Verdict::vacuous;
    return std::nullopt;
}

const Morphism& Instance::at(const std::string& name) const
{
    const auto it = morphisms.find(name);
    if (it == morphisms.end()) throw MalformedInstance("instance is missing morphism '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Right conditions

CheckResult check_right_i(const Category& cat, const Morphism& f)
{
    return guarded(start(cat, CheckKind::right_i, single(f)), [&](CheckResult& r) {
        const Morphism fbar = decompose(cat, f).fbar;
        const bool epi = is_epi(cat, fbar);
        set(r, epi, "fbar is not an epimorphism");
        if (!epi) r.witness.emplace("fbar", fbar);
    });
}

CheckResult check_right_ii(const Category& cat, const Morphism& h, const Morphism& l)
{
    require_composable(h, l, "h∘l");
    return guarded(start(cat, CheckKind::right_ii, pair("h", h, "l", l)), [&](CheckResult& r) {
        if (!is_kernel(cat, cat.compose(h, l))) return vacuous(r, "h∘l is not a kernel");
        set(r, is_kernel(cat, l), "h∘l is a kernel but l is not");
    });
}

CheckResult check_right_iii(const Category& cat, const Square& sq)
{
    return guarded(start(cat, CheckKind::right_iii, right_square_instance(sq)), [&](CheckResult& r) {
        if (!right_pushout_of_kernel(cat, sq, r)) return;
        const bool ok = is_pullback(cat, sq);
        set(r, ok, "pushout along a kernel is not a pullback");
        if (!ok) {
            r.witness.emplace("f", sq.f);
            r.witness.emplace("beta", sq.beta);
        }
    });
}

CheckResult check_right_iv(const Category& cat, const Square& sq)
{
    return guarded(start(cat, CheckKind::right_iv, right_square_instance(sq)), [&](CheckResult& r) {
        if (!right_pushout_of_kernel(cat, sq, r)) return;
        const bool ok = is_mono(cat, sq.f);
        set(r, ok, "pushout of a kernel is not a monomorphism");
        if (!ok) r.witness.emplace("f", sq.f);
    });
}

CheckResult check_right_v(const Category& cat, const Square& sq)
{
    return guarded(start(cat, CheckKind::right_v, right_square_instance(sq)), [&](CheckResult& r) {
        if (!right_pushout_of_kernel(cat, sq, r)) return;
        if (!is_cokernel(cat, sq.beta)) return vacuous(r, "beta is not a cokernel");
        const bool ok = is_mono(cat, sq.f);
        set(r, ok, "pushout of a kernel is not a monomorphism");
        if (!ok) r.witness.emplace("f", sq.f);
    });
}

CheckResult check_right_vi(const Category& cat, const Morphism& h, const Morphism& l)
{
    require_composable(h, l, "h∘l");
    return guarded(start(cat, CheckKind::right_vi, pair("h", h, "l", l)), [&](CheckResult& r) {
        if (!is_kernel(cat, l)) return vacuous(r, "l is not a kernel");
        if (!is_kernel(cat, h)) return vacuous(r, "h is not a kernel");
        const Morphism hl = cat.compose(h, l);
        const bool ok = is_kernel(cat, hl);
        set(r, ok, "composite of kernels is not a kernel");
        if (!ok) r.witness.emplace("hl", hl);
    });
}

CheckResult check_right_vii(const Category& cat, const Square& sq)
{
    return guarded(start(cat, CheckKind::right_vii, right_square_instance(sq)), [&](CheckResult& r) {
        if (sq.provenance != Provenance::pushout && !is_pushout(cat, sq))
            return vacuous(r, "square is not a pushout");
        if (!is_strict(cat, sq.g)) return vacuous(r, "g is not strict");
        const Morphism hat = induced_kernel_map(cat, sq);
        const bool ok = is_epi(cat, hat);
        set(r, ok, "induced map on kernels is not an epimorphism");
        if (!ok) r.witness.emplace("alpha_hat", hat);
    });
}

// ---------------------------------------------------------------------------
// Left conditions

Instance transport(CheckKind kind, const Instance& instance)
{
    static const std::map<std::string, std::string> square_names{
        {"alpha", "beta"}, {"beta", "alpha"}, {"g", "f"}, {"f", "g"}};
    static const std::map<std::string, std::string> pair_names{{"h", "l"}, {"l", "h"}};

    const bool squares = kind == CheckKind::right_iii || kind == CheckKind::right_iv ||
                         kind == CheckKind::right_v || kind == CheckKind::right_vii ||
                         kind == CheckKind::left_iii || kind == CheckKind::left_iv ||
                         kind == CheckKind::left_v || kind == CheckKind::left_vii;
    const bool pairs = kind == CheckKind::right_ii || kind == CheckKind::right_vi ||
                       kind == CheckKind::left_ii || kind == CheckKind::left_vi;

    Instance out;
    out.params = instance.params;
    for (const auto& [name, m] : instance.morphisms) {
        std::string renamed = name;
        const auto& table = squares ? square_names : pair_names;
        if (squares || pairs) {
            const auto it = table.find(name);
            if (it != table.end()) renamed = it->second;
        }
        out.morphisms.emplace(renamed, flip(m));
    }
    return out;
}

CheckResult check_left(const CategoryPtr& cat, CheckKind cond, const Instance& instance)
{
    if (!is_left(cond)) throw std::invalid_argument("check_left: not a left condition");
    CheckResult r = run_check(opposite(cat), dual(cond), transport(cond, instance));
    r.kind = cond;
    r.backend = cat->name();
    r.instance = instance;
    std::map<std::string, Morphism> witness;
    for (const auto& [name, m] : r.witness) witness.emplace(name, flip(m));
    r.witness = std::move(witness);
    return r;
}

CheckResult check_left_direct(const Category& cat, CheckKind cond, const Instance& in)
{
    CheckResult r = start(cat, cond, in);
    switch (cond) {
    case CheckKind::left_i:
        return guarded(std::move(r), [&](CheckResult& res) {
            const Morphism fbar = decompose(cat, in.at("f")).fbar;
            const bool mono = is_mono(cat, fbar);
            set(res, mono, "fbar is not a monomorphism");
            if (!mono) res.witness.emplace("fbar", fbar);
        });
    case CheckKind::left_ii:
    case CheckKind::left_vi: {
        const Morphism& h = in.at("h");
        const Morphism& l = in.at("l");
        require_composable(h, l, "h∘l");
        return guarded(std::move(r), [&](CheckResult& res) {
            if (cond == CheckKind::left_ii) {
                if (!is_cokernel(cat, cat.compose(h, l))) return vacuous(res, "h∘l is not a cokernel");
                set(res, is_cokernel(cat, h), "h∘l is a cokernel but h is not");
                return;
            }
            if (!is_cokernel(cat, l)) return vacuous(res, "l is not a cokernel");
            if (!is_cokernel(cat, h)) return vacuous(res, "h is not a cokernel");
            const Morphism hl = cat.compose(h, l);
            const bool ok = is_cokernel(cat, hl);
            set(res, ok, "composite of cokernels is not a cokernel");
            if (!ok) res.witness.emplace("hl", hl);
        });
    }
    case CheckKind::left_iii:
    case CheckKind::left_iv:
    case CheckKind::left_v:
    case CheckKind::left_vii: {
        const Square sq = left_square(cat, in);
        return guarded(std::move(r), [&](CheckResult& res) {
            if (cond == CheckKind::left_vii) {
                if (sq.provenance != Provenance::pullback && !is_pullback(cat, sq))
                    return vacuous(res, "square is not a pullback");
                if (!is_strict(cat, sq.f)) return vacuous(res, "f is not strict");
                const Morphism hat = induced_cokernel_map(cat, sq);
                const bool ok = is_mono(cat, hat);
                set(res, ok, "induced map on cokernels is not a monomorphism");
                if (!ok) res.witness.emplace("beta_hat", hat);
                return;
            }
            if (!left_pullback_of_cokernel(cat, sq, res)) return;
            if (cond == CheckKind::left_iii) {
                set(res, is_pushout(cat, sq), "pullback along a cokernel is not a pushout");
                return;
            }
            if (cond == CheckKind::left_v && !is_kernel(cat, sq.alpha))
                return vacuous(res, "alpha is not a kernel");
            const bool ok = is_epi(cat, sq.g);
            set(res, ok, "pullback of a cokernel is not an epimorphism");
            if (!ok) res.witness.emplace("g", sq.g);
        });
    }
    default: throw std::invalid_argument("check_left_direct: not a left condition");
    }
}

// ---------------------------------------------------------------------------
// Strictness, lemmas, semi-stability

CheckResult check_strict(const Category& cat, const Morphism& f)
{
    return guarded(start(cat, CheckKind::strict, single(f)), [&](CheckResult& r) {
        const Morphism fbar = decompose(cat, f).fbar;
        const bool ok = is_iso(cat, fbar);
        set(r, ok, "fbar is not an isomorphism");
        if (!ok) r.witness.emplace("fbar", fbar);
    });
}

CheckResult check_semi_abelian(const Category& cat, const Morphism& f)
{
    return guarded(start(cat, CheckKind::semi_abelian, single(f)), [&](CheckResult& r) {
        const Morphism fbar = decompose(cat, f).fbar;
        const bool mono = is_mono(cat, fbar), epi = is_epi(cat, fbar);
        set(r, mono && epi, !mono ? "fbar is not a monomorphism" : "fbar is not an epimorphism");
        if (!(mono && epi)) r.witness.emplace("fbar", fbar);
    });
}

CheckResult check_lemma2(const Category& cat, const Morphism& f, const Morphism& g)
{
    require_composable(g, f, "g∘f");
    return guarded(start(cat, CheckKind::lemma2, pair("f", f, "g", g)), [&](CheckResult& r) {
        const Morphism gf = cat.compose(g, f);
        const Morphism im_f = cat.kernel(cat.cokernel(f).leg).leg;
        const Morphism coim_g = cat.cokernel(cat.kernel(g).leg).leg;

        // u∘cok(g∘f) = cok(g∘im f) with u an isomorphism.
        const Cone cok_gf = cat.cokernel(gf);
        const Morphism cok_g_im = cat.cokernel(cat.compose(g, im_f)).leg;
        const auto u = cok_gf.factor(cok_g_im);
        if (!u || !is_iso(cat, *u)) {
            r.verdict = Verdict::fail;
            r.reason = "cok(g∘im f) is not isomorphic to cok(g∘f) under the legs";
            r.witness.emplace("cok_g_im_f", cok_g_im);
            r.witness.emplace("cok_gf", cok_gf.leg);
            return;
        }
        // ker(g∘f) = ker((coim g)∘f)∘v with v an isomorphism.
        const Cone ker_coim = cat.kernel(cat.compose(coim_g, f));
        const Morphism ker_gf = cat.kernel(gf).leg;
        const auto v = ker_coim.factor(ker_gf);
        if (!v || !is_iso(cat, *v)) {
            r.verdict = Verdict::fail;
            r.reason = "ker((coim g)∘f) is not isomorphic to ker(g∘f) under the legs";
            r.witness.emplace("ker_coim_g_f", ker_coim.leg);
            r.witness.emplace("ker_gf", ker_gf);
            return;
        }
        r.verdict = Verdict::pass;
        r.witness.emplace("u", *u);
        r.witness.emplace("v", *v);
    });
}

CheckResult check_corollary3(const Category& cat, const Morphism& f, const Morphism& g,
                             Corollary3Side side)
{
    require_composable(g, f, "g∘f");
    const CheckKind kind = side == Corollary3Side::kernels ? CheckKind::corollary3_kernels
                                                           : CheckKind::corollary3_cokernels;
    return guarded(start(cat, kind, pair("f", f, "g", g)), [&](CheckResult& r) {
        const Morphism gf = cat.compose(g, f);
        if (side == Corollary3Side::kernels) {
            if (!is_kernel(cat, g)) return vacuous(r, "g is not a kernel");
            const Cone im_gf = cat.kernel(cat.cokernel(gf).leg);
            const Morphism g_im_f = cat.compose(g, decompose(cat, f).im);
            const auto v = im_gf.factor(g_im_f);
            const bool ok = v && is_iso(cat, *v);
            set(r, ok, "im(g∘f) differs from g∘im f");
            if (!ok) {
                r.witness.emplace("im_gf", im_gf.leg);
                r.witness.emplace("g_im_f", g_im_f);
            }
        } else {
            if (!is_cokernel(cat, f)) return vacuous(r, "f is not a cokernel");
            const Cone coim_gf = cat.cokernel(cat.kernel(gf).leg);
            const Morphism coim_g_f = cat.compose(decompose(cat, g).coim, f);
            const auto u = coim_gf.factor(coim_g_f);
            const bool ok = u && is_iso(cat, *u);
            set(r, ok, "coim(g∘f) differs from (coim g)∘f");
            if (!ok) {
                r.witness.emplace("coim_gf", coim_gf.leg);
                r.witness.emplace("coim_g_f", coim_g_f);
            }
        }
    });
}

CheckResult probe_semistable(const Category& cat, const Morphism& f, SemistableRole role,
                             std::int64_t n_samples, std::uint64_t seed, Index dim_bound)
{
    const CheckKind kind = role == SemistableRole::kernel ? CheckKind::semistable_kernel
                                                          : CheckKind::semistable_cokernel;
    Instance in = single(f);
    in.params = {{"samples", n_samples},
                 {"seed", static_cast<std::int64_t>(seed)},
                 {"dim_bound", static_cast<std::int64_t>(dim_bound)}};
    return guarded(start(cat, kind, std::move(in)), [&](CheckResult& r) {
        if (role == SemistableRole::kernel ? !is_kernel(cat, f) : !is_cokernel(cat, f))
            return vacuous(r, role == SemistableRole::kernel ? "f is not a kernel" : "f is not a cokernel");
        for (std::int64_t s = 0; s < n_samples; ++s) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
            const Object other = cat.random_object(rng, dim_bound);
            if (role == SemistableRole::kernel) {
                const Morphism alpha = cat.random_morphism(rng, f.dom, other);
                const Square sq = pushout(cat, alpha, f);
                if (!is_kernel(cat, sq.f)) {
                    r.verdict = Verdict::fail;
                    r.reason = "pushout of the kernel is not a kernel (sample " + std::to_string(s) + ")";
                    r.witness = {{"alpha", alpha}, {"pushed", sq.f}};
                    return;
                }
            } else {
                const Morphism t = cat.random_morphism(rng, other, f.cod);
                const Square sq = pullback(cat, f, t);
                if (!is_cokernel(cat, sq.g)) {
                    r.verdict = Verdict::fail;
                    r.reason = "pullback of the cokernel is not a cokernel (sample " + std::to_string(s) + ")";
                    r.witness = {{"t", t}, {"pulled", sq.g}};
                    return;
                }
            }
        }
        r.verdict = Verdict::pass;
        r.reason = "no counterexample in " + std::to_string(n_samples) + " samples";
    });
}

// ---------------------------------------------------------------------------
// Dispatch

void validate_instance(const Category& cat, CheckKind kind, const Instance& in)
{
    std::set<std::string> required, optional;
    switch (kind) {
    case CheckKind::right_i:
    case CheckKind::left_i:
    case CheckKind::strict:
    case CheckKind::semi_abelian:
    case CheckKind::semistable_kernel:
    case CheckKind::semistable_cokernel: required = {"f"}; break;
    case CheckKind::right_ii:
    case CheckKind::right_vi:
    case CheckKind::left_ii:
    case CheckKind::left_vi: required = {"h", "l"}; break;
    case CheckKind::right_iii:
    case CheckKind::right_iv:
    case CheckKind::right_v:
    case CheckKind::right_vii:
        required = {"alpha", "g"};
        optional = {"beta", "f"};
        break;
    case CheckKind::left_iii:
    case CheckKind::left_iv:
    case CheckKind::left_v:
    case CheckKind::left_vii:
        required = {"f", "beta"};
        optional = {"alpha", "g"};
        break;
    case CheckKind::lemma2:
    case CheckKind::corollary3_kernels:
    case CheckKind::corollary3_cokernels: required = {"f", "g"}; break;
    }
    for (const auto& name : required)
        if (!in.has(name))
            throw MalformedInstance(to_string(kind) + ": missing morphism '" + name + "'");
    for (const auto& [name, m] : in.morphisms) {
        if (!required.count(name) && !optional.count(name))
            throw MalformedInstance(to_string(kind) + ": unexpected morphism '" + name + "'");
        cat.validate(m);
    }
}

CheckResult run_check(const CategoryPtr& catp, CheckKind kind, const Instance& in)
{
    const Category& cat = *catp;
    validate_instance(cat, kind, in);
    CheckResult r;
    switch (kind) {
    case CheckKind::right_i: r = check_right_i(cat, in.at("f")); break;
    case CheckKind::right_ii: r = check_right_ii(cat, in.at("h"), in.at("l")); break;
    case CheckKind::right_iii: r = check_right_iii(cat, right_square(cat, in)); break;
    case CheckKind::right_iv: r = check_right_iv(cat, right_square(cat, in)); break;
    case CheckKind::right_v: r = check_right_v(cat, right_square(cat, in)); break;
    case CheckKind::right_vi: r = check_right_vi(cat, in.at("h"), in.at("l")); break;
    case CheckKind::right_vii: r = check_right_vii(cat, right_square(cat, in)); break;
    case CheckKind::left_i:
    case CheckKind::left_ii:
    case CheckKind::left_iii:
    case CheckKind::left_iv:
    case CheckKind::left_v:
    case CheckKind::left_vi:
    case CheckKind::left_vii: return check_left(catp, kind, in);
    case CheckKind::strict: r = check_strict(cat, in.at("f")); break;
    case CheckKind::semi_abelian: r = check_semi_abelian(cat, in.at("f")); break;
    case CheckKind::lemma2: r = check_lemma2(cat, in.at("f"), in.at("g")); break;
    case CheckKind::corollary3_kernels:
        r = check_corollary3(cat, in.at("f"), in.at("g"), Corollary3Side::kernels);
        break;
    case CheckKind::corollary3_cokernels:
        r = check_corollary3(cat, in.at("f"), in.at("g"), Corollary3Side::cokernels);
        break;
    case CheckKind::semistable_kernel:
    case CheckKind::semistable_cokernel:
        r = probe_semistable(cat, in.at("f"),
                             kind == CheckKind::semistable_kernel ? SemistableRole::kernel
                                                                  : SemistableRole::cokernel,
                             param_or(in, "samples", 50),
                             static_cast<std::uint64_t>(param_or(in, "seed", 0)),
                             static_cast<Index>(param_or(in, "dim_bound", 3)));
        break;
    }
    r.instance = in;
    return r;
}

} // namespace preab
