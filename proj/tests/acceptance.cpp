// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "preab/audit.hpp"
#include "preab/backends.hpp"
#include "preab/cli.hpp"
#include "preab/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace preab;

namespace {

const std::vector<std::string> kBackends{"VectQ", "SubVect", "FiltVect_3", "LatZ"};
constexpr Index kDim = 6;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    int failures = 0;

    void require(bool cond, const std::string& what)
    {
        if (cond) return;
        if (failures++ < 5) detail << " [" << what << "]";
        ok = false;
    }
};

// FNV-1a, so seeds do not depend on the standard library's std::hash.
std::uint64_t stream(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

bool iso_factor(const Category& cat, const Cone& cone, const Morphism& other)
{
    const auto u = cone.factor(other);
    return u && is_iso(cat, *u);
}

// 1. kernels, cokernels, factorization, decomposition.
void law_suite(Outcome& o)
{
    for (const auto& name : kBackends) {
        const auto cat = make_backend(name);
        Rng rng(derive_seed(1, stream(name)));
        for (int t = 0; t < 500; ++t) {
            const Object a = cat->random_object(rng, kDim), b = cat->random_object(rng, kDim);
            const Morphism f = cat->random_morphism(rng, a, b);
            const Cone k = cat->kernel(f), c = cat->cokernel(f);
            o.require(cat->is_zero(cat->compose(f, k.leg)), name + ": f∘ker f != 0");
            o.require(cat->is_zero(cat->compose(c.leg, f)), name + ": cok f∘f != 0");
            for (int s = 0; s < 3; ++s) {
                const Object tk = cat->random_object(rng, 4);
                const Morphism u = cat->random_morphism(rng, tk, k.apex);
                const auto back = k.factor(cat->compose(k.leg, u));
                o.require(back && *back == u, name + ": kernel factorization not unique");

                const Object tc = cat->random_object(rng, 4);
                const Morphism v = cat->random_morphism(rng, c.apex, tc);
                const auto fwd = c.factor(cat->compose(v, c.leg));
                o.require(fwd && *fwd == v, name + ": cokernel factorization not unique");
            }
            const Decomposition d = decompose(*cat, f);
            o.require(cat->compose(d.im, cat->compose(d.fbar, d.coim)) == f,
                      name + ": decomposition does not recompose");
        }
    }
    o.detail << " 4 backends x 500 morphisms, 3 test maps per universal property";
}

// 2. pullbacks and pushouts.
void lemma1_suite(Outcome& o)
{
    std::int64_t mono = 0, kern = 0, epi = 0, cok = 0;
    for (const auto& name : kBackends) {
        const auto cat = make_backend(name);
        Rng rng(derive_seed(2, stream(name)));
        for (int t = 0; t < 300; ++t) {
            // Pullback of f: A -> B along t: D -> B.
            {
                const Object a = cat->random_object(rng, 4), b = cat->random_object(rng, 4);
                Morphism f = cat->random_morphism(rng, a, b);
                const int shape = rng.uniform(0, 2);
                if (shape == 1) f = cat->kernel(f).leg;
                if (shape == 2) {
                    const Decomposition d = decompose(*cat, f);
                    f = cat->compose(d.im, d.fbar);
                }
                const Morphism tt = cat->random_morphism(rng, cat->random_object(rng, 4), f.cod);
                const Square sq = pullback(*cat, f, tt);
                o.require(is_pullback(*cat, sq), name + ": constructed pullback fails its property");
                o.require(iso_factor(*cat, cat->kernel(f), cat->compose(sq.alpha, cat->kernel(sq.g).leg)),
                          name + ": ker f != p_E∘ker p_G");
                if (is_mono(*cat, f)) {
                    ++mono;
                    o.require(is_mono(*cat, sq.g), name + ": mono did not pull back");
                }
                if (is_kernel(*cat, f)) {
                    ++kern;
                    o.require(is_kernel(*cat, sq.g), name + ": kernel did not pull back");
                }
            }
            // Pushout of g: C -> D along alpha: C -> A.
            {
                const Object c = cat->random_object(rng, 4), d = cat->random_object(rng, 4);
                Morphism g = cat->random_morphism(rng, c, d);
                const int shape = rng.uniform(0, 2);
                if (shape == 1) g = cat->cokernel(g).leg;
                if (shape == 2) {
                    const Decomposition dec = decompose(*cat, g);
                    g = cat->compose(dec.fbar, dec.coim);
                }
                const Morphism alpha = cat->random_morphism(rng, g.dom, cat->random_object(rng, 4));
                const Square sq = pushout(*cat, alpha, g);
                o.require(is_pushout(*cat, sq), name + ": constructed pushout fails its property");
                o.require(iso_factor(*cat, cat->cokernel(g), cat->compose(cat->cokernel(sq.f).leg, sq.beta)),
                          name + ": cok g != cok s∘s_G");
                if (is_epi(*cat, g)) {
                    ++epi;
                    o.require(is_epi(*cat, sq.f), name + ": epi did not push out");
                }
                if (is_cokernel(*cat, g)) {
                    ++cok;
                    o.require(is_cokernel(*cat, sq.f), name + ": cokernel did not push out");
                }
            }
        }
    }
    o.require(mono >= 100 && kern >= 100 && epi >= 100 && cok >= 100, "too few hypothesis hits");
    o.detail << " 4 x 300 pullbacks and pushouts; hypothesis hits mono=" << mono << " kernel=" << kern
             << " epi=" << epi << " cokernel=" << cok;
}

Verdict check_generated(const CategoryPtr& cat, CheckKind kind, std::uint64_t seed, Outcome& o)
{
    const auto in = generate_instance(cat, kind, 4, seed);
    o.require(in.has_value(), cat->name() + ": generation exhausted for " + to_string(kind));
    if (!in) return Verdict::vacuous;
    const CheckResult r = run_check(cat, kind, *in);
    o.require(r.verdict != Verdict::fail, cat->name() + ": " + to_string(kind) + " failed: " + r.reason);
    return r.verdict;
}

// 3. Lemma 2 and Corollary 3.
void lemma2_suite(Outcome& o)
{
    std::ostringstream notes;
    for (const auto& name : kBackends) {
        const auto cat = make_backend(name);
        for (std::uint64_t s = 0; s < 300; ++s)
            o.require(check_generated(cat, CheckKind::lemma2, derive_seed(3, stream(name), s), o) ==
                          Verdict::pass,
                      name + ": lemma2 not passing");

        // Composition-stability hypothesis, audited on its own first.
        bool vi_clean = true, vi_dual_clean = true;
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto a = generate_instance(cat, CheckKind::right_vi, 4, derive_seed(31, stream(name), s));
            const auto b = generate_instance(cat, CheckKind::left_vi, 4, derive_seed(32, stream(name), s));
            vi_clean = vi_clean && run_check(cat, CheckKind::right_vi, *a).verdict != Verdict::fail;
            vi_dual_clean = vi_dual_clean && run_check(cat, CheckKind::left_vi, *b).verdict != Verdict::fail;
        }
        int scored = 0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            if (vi_clean)
                scored += check_generated(cat, CheckKind::corollary3_kernels,
                                          derive_seed(33, stream(name), s), o) == Verdict::pass;
            if (vi_dual_clean)
                scored += check_generated(cat, CheckKind::corollary3_cokernels,
                                          derive_seed(34, stream(name), s), o) == Verdict::pass;
        }
        o.require(vi_clean && vi_dual_clean, name + ": (vi) audit not clean, corollary 3 skipped");
        notes << " " << name << "=" << scored;
    }
    o.detail << " 300 lemma2 pairs per backend; corollary3 passes (both sides, of 200):" << notes.str();
}

// 4. coherence on the known quasi-abelian backends.
void coherence_suite(Outcome& o)
{
    std::int64_t min_seen = -1;
    for (const std::string name : {"VectQ", "SubVect", "FiltVect_3"}) {
        AuditConfig c;
        c.backend = name;
        c.seed = 4;
        c.min_nonvacuous = 30;
        for (CheckKind k : audited_kinds()) c.samples[k] = is_condition(k) ? 60 : 0;
        const AuditReport r = run_audit(c);
        for (const auto& [kind, t] : r.tallies) {
            if (!is_condition(kind)) continue;
            o.require(t.fail == 0, name + ": " + to_string(kind) + " has failures");
            if (is_conditional(kind)) {
                o.require(t.nonvacuous() >= 30, name + ": " + to_string(kind) + " below 30 non-vacuous");
                min_seen = min_seen < 0 ? t.nonvacuous() : std::min(min_seen, t.nonvacuous());
            }
        }
    }
    o.detail << " 3 backends x 14 conditions x 60 samples; fewest non-vacuous per conditional condition = "
             << min_seen;
}

// 5. duality exactness.
void duality_suite(Outcome& o)
{
    std::int64_t compared = 0;
    for (const auto& name : kBackends) {
        const auto cat = make_backend(name);
        const auto op = opposite(cat);
        for (CheckKind kind : all_check_kinds()) {
            if (!is_condition(kind)) continue;
            for (std::uint64_t s = 0; s < 200; ++s) {
                const auto in = generate_instance(cat, kind, 3, derive_seed(5, stream(name) + 97 * s,
                                                                            static_cast<std::uint64_t>(kind)));
                if (!in) continue;
                const Verdict here = run_check(cat, kind, *in).verdict;
                const Verdict there = run_check(op, dual(kind), transport(kind, *in)).verdict;
                o.require(here == there, name + ": " + to_string(kind) + " verdict changes under duality");
                if (is_left(kind))
                    o.require(check_left_direct(*cat, kind, *in).verdict == here,
                              name + ": " + to_string(kind) + " direct and dual routes disagree");
                ++compared;
            }
        }
    }
    o.require(compared == 4 * 14 * 200, "some instances were not generated");
    o.detail << " " << compared << " instances compared (4 backends x 14 conditions x 200)";
}

AuditConfig zoo_config(const std::string& backend)
{
    AuditConfig c;
    c.backend = backend;
    c.seed = 6;
    c.default_samples = 60;
    c.min_nonvacuous = 30;
    c.probe_samples = 20;
    return c;
}

// 6. non-strict witnesses and zoo verdicts.
void witness_suite(Outcome& o)
{
    const auto sub = make_backend("SubVect");
    const Object low = make_object(*sub, 2, {zeros<Rational>(2, 0)});
    const Object high = make_object(*sub, 2, {identity<Rational>(2)});
    const MorphismClass w = classify(*sub, make_morphism(*sub, low, high, identity<Rational>(2)));
    o.require(w.mono && w.epi && !w.iso && !w.strict, "SubVect witness misclassified");

    const auto lat = make_backend("LatZ");
    const Object z = make_object(*lat, 1);
    RatMatrix two(1, 1);
    two(0, 0) = 2;
    const MorphismClass x2 = classify(*lat, make_morphism(*lat, z, z, two));
    o.require(x2.mono && x2.epi && !x2.iso && !x2.strict, "LatZ x2 misclassified");

    const auto vect = make_backend("VectQ");
    Rng rng(6);
    int strict = 0;
    for (int t = 0; t < 500; ++t) {
        const Object a = vect->random_object(rng, kDim), b = vect->random_object(rng, kDim);
        strict += is_strict(*vect, vect->random_morphism(rng, a, b));
    }
    o.require(strict == 500, "VectQ has non-strict samples");

    const std::map<std::string, std::vector<ZooVerdict>> expected{
        {"VectQ", {ZooVerdict::abelian_consistent}},
        {"SubVect", {ZooVerdict::quasi_abelian_consistent}},
        {"FiltVect_3", {ZooVerdict::quasi_abelian_consistent}},
        {"LatZ",
         {ZooVerdict::abelian_consistent, ZooVerdict::quasi_abelian_consistent,
          ZooVerdict::semi_abelian_consistent}},
    };
    o.detail << " witnesses ok; VectQ strict " << strict << "/500; zoo:";
    for (const auto& name : kBackends) {
        const AuditReport r = run_audit(zoo_config(name));
        const auto& allowed = expected.at(name);
        o.require(std::find(allowed.begin(), allowed.end(), r.verdict) != allowed.end(),
                  name + " verdict " + to_string(r.verdict));
        if (name == "SubVect" || name == "FiltVect_3")
            o.require(!r.witnesses.empty(), name + ": no non-strict witness recorded");
        o.detail << " " << name << "=" << to_string(r.verdict);
    }
}

bool replays_via_cli(const CheckResult& w)
{
    std::ostringstream out, err;
    const int code = cmd_check(w.backend, to_string(w.kind), emit(to_json(w)), out, err);
    if (code != kExitRefuted) return false;
    return check_result_from_json(Json::parse(out.str())).verdict == w.verdict;
}

// 7. semi-stability probes.
void semistable_suite(Outcome& o)
{
    for (const std::string name : {"SubVect", "FiltVect_3"}) {
        const auto cat = make_backend(name);
        for (std::uint64_t s = 0; s < 4; ++s) {
            const auto in = generate_instance(cat, CheckKind::semistable_kernel, 4, derive_seed(7, stream(name), s));
            const CheckResult r =
                probe_semistable(*cat, in->at("f"), SemistableRole::kernel, 500, derive_seed(71, s), 4);
            o.require(r.verdict != Verdict::fail, name + ": semi-stability counterexample: " + r.reason);
        }
    }

    const auto lat = make_backend("LatZ");
    int lat_found = 0, lat_replayed = 0;
    for (std::uint64_t s = 0; s < 4; ++s) {
        for (auto role : {SemistableRole::kernel, SemistableRole::cokernel}) {
            const CheckKind kind =
                role == SemistableRole::kernel ? CheckKind::semistable_kernel : CheckKind::semistable_cokernel;
            const auto in = generate_instance(lat, kind, 4, derive_seed(72, s));
            const CheckResult r = probe_semistable(*lat, in->at("f"), role, 500, derive_seed(73, s), 4);
            if (r.verdict != Verdict::fail) continue;
            ++lat_found;
            const CheckResult shrunk = shrink(lat, r, 200);
            lat_replayed += replays_via_cli(shrunk);
        }
    }
    o.require(lat_found == lat_replayed, "LatZ counterexample did not replay");
    o.detail << " SubVect/FiltVect_3: 4 kernels x 500 pushouts, clean; LatZ counterexamples found="
             << lat_found << " replayed=" << lat_replayed;
}

// 8. determinism and shrinking.
void determinism_suite(Outcome& o)
{
    int witnesses = 0;
    for (const auto& name : kBackends) {
        AuditConfig c = zoo_config(name);
        c.default_samples = 25;
        c.min_nonvacuous = 10;
        c.workers = 1;
        const AuditReport a = run_audit(c);
        const AuditReport b = run_audit(c);
        c.workers = 4;
        const AuditReport d = run_audit(c);
        const std::string ta = emit(to_json(make_document(c, a)));
        o.require(ta == emit(to_json(make_document(c, b))), name + ": reruns differ");
        o.require(ta == emit(to_json(make_document(c, d))), name + ": worker count changes the report");
        o.require(emit(to_json(document_from_json(Json::parse(ta)))) == ta, name + ": JSON round trip");

        const auto cat = make_backend(name);
        for (const CheckResult& w : a.witnesses) {
            ++witnesses;
            o.require(run_check(cat, w.kind, w.instance).verdict == Verdict::fail,
                      name + ": shrunk witness no longer fails");
            o.require(replays_via_cli(w), name + ": witness does not replay via check");
        }
    }
    o.require(witnesses > 0, "no witnesses to replay");
    o.detail << " 4 backends, workers 1 vs 4, byte-identical; " << witnesses << " shrunk witnesses replayed";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 category law suite", law_suite},
        {"2 pullback/pushout suite", lemma1_suite},
        {"3 lemma2 / corollary3 suite", lemma2_suite},
        {"4 condition coherence", coherence_suite},
        {"5 duality exactness", duality_suite},
        {"6 non-strict witnesses and zoo", witness_suite},
        {"7 semi-stability probe", semistable_suite},
        {"8 determinism and shrinking", determinism_suite},
    };
    int failed = 0;
    for (const auto& [label, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << label << ":" << o.detail.str() << " ("
                  << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
