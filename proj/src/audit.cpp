#include "preab/audit.hpp"

#include "preab/backends.hpp"
#include "preab/linalg.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace preab {

namespace {

constexpr int kRetryBudget = 16;

std::uint64_t kind_seed(CheckKind kind) { return static_cast<std::uint64_t>(kind); }

// Instance generation. Everything below builds right-side shapes; left kinds
// are generated as right kinds in the opposite category and transported.

struct Gen {
    const Category& cat;
    Rng& rng;
    Index bound;

    Object obj() const { return cat.random_object(rng, bound); }
    Morphism map(const Object& a, const Object& b) const { return cat.random_morphism(rng, a, b); }
    Morphism any() const
    {
        const Object a = obj(), b = obj();
        return map(a, b);
    }
    Morphism from(const Object& a) const { return map(a, obj()); }
    Morphism into(const Object& b) const
    {
        const Object a = obj();
        return map(a, b);
    }
    Morphism kernel_leg() const { return cat.kernel(any()).leg; }
    Morphism cokernel_leg() const { return cat.cokernel(any()).leg; }
    Morphism kernel_leg_into(const Object& b) const { return cat.kernel(from(b)).leg; }
};

std::optional<Instance> generate_right(const Gen& gen, CheckKind kind, std::int64_t probe_samples)
{
    const Category& cat = gen.cat;
    switch (kind) {
    case CheckKind::right_i:
    case CheckKind::strict:
    case CheckKind::semi_abelian: return Instance{{{"f", gen.any()}}, {}};

    case CheckKind::right_ii: {
        if (gen.rng.chance(15)) {
            const Morphism l = gen.any();
            return Instance{{{"h", gen.from(l.cod)}, {"l", l}}, {}};
        }
        // h∘l = k for a kernel k: l = (k, r) into Y⊕Z, h the projection onto Y.
        const Morphism k = gen.kernel_leg();
        const Morphism r = gen.from(k.dom);
        const Biproduct yz = cat.biproduct(k.cod, r.cod);
        const Morphism l = cat.add(cat.compose(yz.inj1, k), cat.compose(yz.inj2, r));
        return Instance{{{"h", yz.proj1}, {"l", l}}, {}};
    }

    case CheckKind::right_iii:
    case CheckKind::right_iv: {
        const Morphism g = gen.kernel_leg();
        return Instance{{{"alpha", gen.from(g.dom)}, {"g", g}}, {}};
    }

    case CheckKind::right_v: {
        // A cokernel alpha pushes out to a cokernel beta.
        const Morphism g = gen.kernel_leg();
        const Morphism alpha = cat.cokernel(gen.into(g.dom)).leg;
        return Instance{{{"alpha", alpha}, {"g", g}}, {}};
    }

    case CheckKind::right_vi: {
        const Morphism h = gen.kernel_leg();
        const Morphism l = gen.kernel_leg_into(h.dom);
        return Instance{{{"h", h}, {"l", l}}, {}};
    }

    case CheckKind::right_vii: {
        const int pick = gen.rng.uniform(0, 9);
        Morphism g;
        if (pick < 4) {
            g = gen.kernel_leg();
        } else if (pick < 7) {
            g = gen.cokernel_leg();
        } else {
            bool found = false;
            for (int attempt = 0; attempt < kRetryBudget && !found; ++attempt) {
                g = gen.any();
                found = is_strict(cat, g);
            }
            if (!found) return std::nullopt;
        }
        return Instance{{{"alpha", gen.from(g.dom)}, {"g", g}}, {}};
    }

    case CheckKind::lemma2: {
        const Morphism f = gen.any();
        return Instance{{{"f", f}, {"g", gen.from(f.cod)}}, {}};
    }
    case CheckKind::corollary3_kernels: {
        const Morphism g = gen.kernel_leg();
        return Instance{{{"f", gen.into(g.dom)}, {"g", g}}, {}};
    }
    case CheckKind::corollary3_cokernels: {
        const Morphism f = gen.cokernel_leg();
        return Instance{{{"f", f}, {"g", gen.from(f.cod)}}, {}};
    }
    case CheckKind::semistable_kernel:
    case CheckKind::semistable_cokernel: {
        const Morphism f = kind == CheckKind::semistable_kernel ? gen.kernel_leg() : gen.cokernel_leg();
        Instance in{{{"f", f}}, {}};
        in.params = {{"samples", probe_samples},
                     {"seed", static_cast<std::int64_t>(gen.rng.next() >> 1)},
                     {"dim_bound", static_cast<std::int64_t>(gen.bound)}};
        return in;
    }
    default: break;
    }
    throw std::invalid_argument("generate_instance: unsupported kind " + to_string(kind));
}

// --- shrinking --------------------------------------------------------------

RatMatrix drop_row(const RatMatrix& m, Index j)
{
    RatMatrix out(m.rows() - 1, m.cols());
    for (Index i = 0, o = 0; i < m.rows(); ++i)
        if (i != j) out.row(o++) = m.row(i);
    return out;
}

RatMatrix drop_col(const RatMatrix& m, Index j)
{
    RatMatrix out(m.rows(), m.cols() - 1);
    for (Index i = 0, o = 0; i < m.cols(); ++i)
        if (i != j) out.col(o++) = m.col(i);
    return out;
}

Object drop_coordinate(const Object& o, Index j)
{
    RatMatrix iota = zeros<Rational>(o.dim, o.dim - 1);
    for (Index i = 0; i < o.dim - 1; ++i) iota(i < j ? i : i + 1, i) = 1;
    Object out{o.dim - 1, {}};
    for (const auto& layer : o.layers) out.layers.push_back(preimage(iota, layer));
    return out;
}

std::vector<Object> distinct_objects(const Instance& in)
{
    std::vector<Object> objs;
    auto add = [&](const Object& o) {
        for (const auto& seen : objs)
            if (seen == o) return;
        objs.push_back(o);
    };
    for (const auto& [name, m] : in.morphisms) {
        add(m.dom);
        add(m.cod);
    }
    return objs;
}

Integer entry_magnitude(const Rational& q)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Integer(abs(numerator(q))) + Integer(denominator(q)) - 1;
}

std::vector<Instance> candidates(const Instance& in)
{
    std::vector<Instance> out;

    for (const Object& o : distinct_objects(in)) {
        for (Index j = 0; j < o.dim; ++j) {
            const Object smaller = drop_coordinate(o, j);
            Instance c = in;
            for (auto& [name, m] : c.morphisms) {
                if (m.dom == o) {
                    m.matrix = drop_col(m.matrix, j);
                    m.dom = smaller;
                }
                if (m.cod == o) {
                    m.matrix = drop_row(m.matrix, j);
                    m.cod = smaller;
                }
            }
            out.push_back(std::move(c));
        }
    }

    for (const auto& [name, m] : in.morphisms)
        for (Index col = 0; col < m.matrix.cols(); ++col)
            for (Index row = 0; row < m.matrix.rows(); ++row)
                if (m.matrix(row, col) != 0) {
                    Instance c = in;
                    c.morphisms.at(name).matrix(row, col) = 0;
                    out.push_back(std::move(c));
                }

    for (const auto& [name, m] : in.morphisms)
        for (Index col = 0; col < m.matrix.cols(); ++col)
            for (Index row = 0; row < m.matrix.rows(); ++row) {
                const Rational& q = m.matrix(row, col);
                if (q == 0 || entry_magnitude(q) == 1) continue;
                Instance c = in;
                c.morphisms.at(name).matrix(row, col) = q > 0 ? 1 : -1;
                out.push_back(std::move(c));
            }
    return out;
}

bool still_fails(const CategoryPtr& cat, CheckKind kind, const Instance& in, CheckResult& result)
{
    for (const auto& [name, m] : in.morphisms)
        if (!cat->valid(m)) return false;
    try {
        result = run_check(cat, kind, in);
    } catch (const std::exception&) {
        return false;
    }
    return result.verdict == Verdict::fail;
}

// --- verdict ----------------------------------------------------------------

bool any_fail(const std::map<CheckKind, Tally>& tallies, bool left)
{
    for (const auto& [kind, t] : tallies)
        if (is_condition(kind) && is_left(kind) == left && t.fail > 0) return true;
    return false;
}

Tally tally_of(const std::map<CheckKind, Tally>& tallies, CheckKind kind)
{
    const auto it = tallies.find(kind);
    return it == tallies.end() ? Tally{} : it->second;
}

bool is_positive(ZooVerdict v)
{
    return v == ZooVerdict::abelian_consistent || v == ZooVerdict::quasi_abelian_consistent ||
           v == ZooVerdict::semi_abelian_consistent;
}

std::vector<std::string> caveats_for(const std::map<CheckKind, Tally>& tallies, ZooVerdict verdict)
{
    std::vector<std::string> out;
    if (is_positive(verdict))
        out.emplace_back("sampling-only: a consistent verdict means no counterexample was found, "
                         "not that the property holds");
    const Tally sk = tally_of(tallies, CheckKind::semistable_kernel);
    const Tally sc = tally_of(tallies, CheckKind::semistable_cokernel);
    if (sk.fail + sc.fail > 0)
        out.emplace_back("semi-stability counterexample: the category is not quasi-abelian");
    else if (verdict == ZooVerdict::quasi_abelian_consistent)
        out.emplace_back("semi-stability is sampling-falsifiable only: quasi-abelian status is not decided");
    else if (verdict == ZooVerdict::semi_abelian_consistent)
        out.emplace_back("semi-stability not probed on both roles");

    if (tally_of(tallies, CheckKind::lemma2).fail > 0)
        out.emplace_back("law violation: lemma2 failed");
    const bool vi_refuted = tally_of(tallies, CheckKind::right_vi).fail > 0;
    const bool vi_dual_refuted = tally_of(tallies, CheckKind::left_vi).fail > 0;
    if (tally_of(tallies, CheckKind::corollary3_kernels).fail > 0)
        out.emplace_back(vi_refuted ? "corollary3-kernels not scored as a law: right-vi refuted"
                                    : "law violation: corollary3-kernels failed");
    if (tally_of(tallies, CheckKind::corollary3_cokernels).fail > 0)
        out.emplace_back(vi_dual_refuted ? "corollary3-cokernels not scored as a law: left-vi refuted"
                                         : "law violation: corollary3-cokernels failed");

    for (const auto& [kind, t] : tallies)
        if (t.exhausted > 0)
            out.push_back("generation exhausted: " + to_string(kind) + " (" + std::to_string(t.exhausted) +
                          ")");
    return out;
}

} // namespace

std::int64_t AuditConfig::samples_for(CheckKind kind) const
{
    const auto it = samples.find(kind);
    return it == samples.end() ? default_samples : it->second;
}

const std::vector<CheckKind>& audited_kinds()
{
    static const std::vector<CheckKind> kinds = [] {
        std::vector<CheckKind> v;
        for (CheckKind k : all_check_kinds())
            if (k != CheckKind::semi_abelian) v.push_back(k);
        return v;
    }();
    return kinds;
}

std::string to_string(ZooVerdict v)
{
    switch (v) {
    case ZooVerdict::abelian_consistent: return "abelian-consistent";
    case ZooVerdict::quasi_abelian_consistent: return "quasi-abelian-consistent";
    case ZooVerdict::semi_abelian_consistent: return "semi-abelian-consistent";
    case ZooVerdict::left_only: return "left-only";
    case ZooVerdict::right_only: return "right-only";
    case ZooVerdict::preabelian_only: return "preabelian-only";
    case ZooVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::optional<ZooVerdict> parse_zoo_verdict(std::string_view name)
{
    for (ZooVerdict v : {ZooVerdict::abelian_consistent, ZooVerdict::quasi_abelian_consistent,
                         ZooVerdict::semi_abelian_consistent, ZooVerdict::left_only,
                         ZooVerdict::right_only, ZooVerdict::preabelian_only, ZooVerdict::inconclusive})
        if (to_string(v) == name) return v;
    return std::nullopt;
}

ZooVerdict decide_verdict(const std::map<CheckKind, Tally>& tallies, std::int64_t min_nonvacuous)
{
    std::int64_t total = 0;
    for (const auto& [kind, t] : tallies) total += t.total();
    if (total == 0) return ZooVerdict::inconclusive;

    const bool right_fail = any_fail(tallies, false);
    const bool left_fail = any_fail(tallies, true);
    if (right_fail && left_fail) return ZooVerdict::preabelian_only;
    if (right_fail) return ZooVerdict::left_only;
    if (left_fail) return ZooVerdict::right_only;

    for (CheckKind k : all_check_kinds())
        if ((is_condition(k) || k == CheckKind::strict) && tally_of(tallies, k).nonvacuous() < min_nonvacuous)
            return ZooVerdict::inconclusive;

    const Tally sk = tally_of(tallies, CheckKind::semistable_kernel);
    const Tally sc = tally_of(tallies, CheckKind::semistable_cokernel);
    if (sk.fail + sc.fail > 0) return ZooVerdict::semi_abelian_consistent;

    const Tally strict = tally_of(tallies, CheckKind::strict);
    if (strict.nonvacuous() > 0 && strict.fail == 0) return ZooVerdict::abelian_consistent;
    if (sk.nonvacuous() > 0 && sc.nonvacuous() > 0) return ZooVerdict::quasi_abelian_consistent;
    return ZooVerdict::semi_abelian_consistent;
}

bool has_law_violation(const std::map<CheckKind, Tally>& tallies)
{
    if (tally_of(tallies, CheckKind::lemma2).fail > 0) return true;
    if (tally_of(tallies, CheckKind::corollary3_kernels).fail > 0 &&
        tally_of(tallies, CheckKind::right_vi).fail == 0)
        return true;
    return tally_of(tallies, CheckKind::corollary3_cokernels).fail > 0 &&
           tally_of(tallies, CheckKind::left_vi).fail == 0;
}

int exit_code(const AuditReport& report)
{
    if (has_law_violation(report.tallies)) return 2;
    if (report.verdict == ZooVerdict::inconclusive) return 3;
    return is_positive(report.verdict) ? 0 : 2;
}

std::optional<Instance> generate_instance(const CategoryPtr& cat, CheckKind kind, Index dim_bound,
                                          std::uint64_t seed, std::int64_t probe_samples)
{
    Rng rng(seed);
    if (is_left(kind)) {
        const CategoryPtr op = opposite(cat);
        const auto right = generate_right(Gen{*op, rng, dim_bound}, dual(kind), probe_samples);
        if (!right) return std::nullopt;
        return transport(dual(kind), *right);
    }
    return generate_right(Gen{*cat, rng, dim_bound}, kind, probe_samples);
}

WitnessSize witness_size(const Instance& in)
{
    WitnessSize s;
    for (const Object& o : distinct_objects(in)) s.dimension += o.dim;
    for (const auto& [name, m] : in.morphisms)
        for (Index col = 0; col < m.matrix.cols(); ++col)
            for (Index row = 0; row < m.matrix.rows(); ++row) {
                const Rational& q = m.matrix(row, col);
                if (q == 0) continue;
                s.magnitude += entry_magnitude(q);
                ++s.nonzeros;
            }
    return s;
}

CheckResult shrink(const CategoryPtr& cat, const CheckResult& failing, std::int64_t budget)
{
    CheckResult best = failing;
    WitnessSize best_size = witness_size(best.instance);
    bool improved = true;
    while (improved && budget > 0) {
        improved = false;
        for (const Instance& c : candidates(best.instance)) {
            if (budget-- <= 0) break;
            const WitnessSize size = witness_size(c);
            if (!(size < best_size)) continue;
            CheckResult r;
            if (!still_fails(cat, failing.kind, c, r)) continue;
            best = std::move(r);
            best_size = size;
            improved = true;
            break;
        }
    }
    return best;
}

AuditReport run_audit(const AuditConfig& config)
{
    const CategoryPtr cat = make_backend(config.backend);

    struct Job {
        CheckKind kind;
        std::int64_t index;
    };
    std::vector<Job> jobs;
    for (CheckKind kind : audited_kinds())
        for (std::int64_t k = 0; k < config.samples_for(kind); ++k) jobs.push_back({kind, k});

    std::vector<std::optional<CheckResult>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                const Job& job = jobs[i];
                const std::uint64_t seed =
                    derive_seed(config.seed, kind_seed(job.kind), static_cast<std::uint64_t>(job.index));
                const auto inst =
                    generate_instance(cat, job.kind, config.dim_bound, seed, config.probe_samples);
                if (inst) results[i] = run_check(cat, job.kind, *inst);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n_workers = std::max(1, config.workers);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    AuditReport report;
    std::map<CheckKind, std::int64_t> kept;
    for (CheckKind kind : audited_kinds())
        if (config.samples_for(kind) > 0) report.tallies[kind] = Tally{};
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Tally& t = report.tallies[jobs[i].kind];
        if (!results[i]) {
            ++t.exhausted;
            continue;
        }
        switch (results[i]->verdict) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::vacuous: ++t.vacuous; break;
        case Verdict::fail:
            ++t.fail;
            if (kept[jobs[i].kind]++ < config.max_witnesses)
                report.witnesses.push_back(shrink(cat, *results[i], config.shrink_budget));
            break;
        }
    }
    report.verdict = decide_verdict(report.tallies, config.min_nonvacuous);
    report.caveats = caveats_for(report.tallies, report.verdict);
    return report;
}

} // namespace preab
