#include "preab/constructions.hpp"

namespace preab {

Decomposition decompose(const Category& cat, const Morphism& f)
{
    const Cone ker = cat.kernel(f);
    const Cone coim = cat.cokernel(ker.leg);
    const Cone cok = cat.cokernel(f);
    const Cone im = cat.kernel(cok.leg);

    // f kills ker f, so f = f1∘coim; cok∘f1∘coim = 0 and coim is epi, so f1
    // factors through im.
    const auto f1 = coim.factor(f);
    if (!f1) throw LawViolation("decompose: f does not factor through coim f");
    const auto fbar = im.factor(*f1);
    if (!fbar) throw LawViolation("decompose: f∘(coim f)^-1 does not factor through im f");
    return Decomposition{coim.leg, *fbar, im.leg};
}

bool is_mono(const Category& cat, const Morphism& f)
{
    return cat.is_zero_object(cat.kernel(f).apex);
}

bool is_epi(const Category& cat, const Morphism& f)
{
    return cat.is_zero_object(cat.cokernel(f).apex);
}

bool is_iso(const Category& cat, const Morphism& f)
{
    return cat.inverse(f).has_value();
}

bool is_strict(const Category& cat, const Morphism& f)
{
    return is_iso(cat, decompose(cat, f).fbar);
}

bool is_kernel(const Category& cat, const Morphism& f)
{
    return is_mono(cat, f) && is_strict(cat, f);
}

bool is_cokernel(const Category& cat, const Morphism& f)
{
    return is_epi(cat, f) && is_strict(cat, f);
}

MorphismClass classify(const Category& cat, const Morphism& f)
{
    MorphismClass c;
    c.mono = is_mono(cat, f);
    c.epi = is_epi(cat, f);
    c.bimorphism = c.mono && c.epi;
    c.iso = is_iso(cat, f);
    c.strict = is_strict(cat, f);
    c.is_kernel = c.mono && c.strict;
    c.is_cokernel = c.epi && c.strict;
    return c;
}

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::pushout: return "pushout";
    case Provenance::pullback: return "pullback";
    case Provenance::commutative: return "commutative";
    }
    return "commutative";
}

Square make_square(const Category& cat, Morphism g, Morphism alpha, Morphism beta, Morphism f,
                   Provenance provenance)
{
    if (!(g.dom == alpha.dom && g.cod == beta.dom && alpha.cod == f.dom && beta.cod == f.cod))
        throw std::invalid_argument("make_square: endpoints do not form a square");
    if (!(cat.compose(f, alpha) == cat.compose(beta, g)))
        throw std::invalid_argument("make_square: square does not commute");
    return Square{std::move(g), std::move(alpha), std::move(beta), std::move(f), provenance};
}

Square pushout(const Category& cat, const Morphism& alpha, const Morphism& g)
{
    if (!(alpha.dom == g.dom)) throw std::invalid_argument("pushout: domains differ");
    const Biproduct sum = cat.biproduct(alpha.cod, g.cod);
    const Morphism diff = cat.subtract(cat.compose(sum.inj1, alpha), cat.compose(sum.inj2, g));
    const Cone q = cat.cokernel(diff);
    return Square{g, alpha, cat.compose(q.leg, sum.inj2), cat.compose(q.leg, sum.inj1),
                  Provenance::pushout};
}

Square pullback(const Category& cat, const Morphism& f, const Morphism& t)
{
    if (!(f.cod == t.cod)) throw std::invalid_argument("pullback: codomains differ");
    const Biproduct sum = cat.biproduct(f.dom, t.dom);
    const Morphism diff = cat.subtract(cat.compose(f, sum.proj1), cat.compose(t, sum.proj2));
    const Cone k = cat.kernel(diff);
    return Square{cat.compose(sum.proj2, k.leg), cat.compose(sum.proj1, k.leg), t, f,
                  Provenance::pullback};
}

Morphism induced_kernel_map(const Category& cat, const Square& sq)
{
    const Cone ker_g = cat.kernel(sq.g);
    const Cone ker_f = cat.kernel(sq.f);
    const auto hat = ker_f.factor(cat.compose(sq.alpha, ker_g.leg));
    if (!hat) throw LawViolation("induced_kernel_map: alpha∘ker g does not factor through ker f");
    return *hat;
}

Morphism induced_cokernel_map(const Category& cat, const Square& sq)
{
    const Cone cok_g = cat.cokernel(sq.g);
    const Cone cok_f = cat.cokernel(sq.f);
    const auto hat = cok_g.factor(cat.compose(cok_f.leg, sq.beta));
    if (!hat) throw LawViolation("induced_cokernel_map: cok f∘beta does not factor through cok g");
    return *hat;
}

bool is_pullback(const Category& cat, const Square& sq)
{
    const Biproduct sum = cat.biproduct(sq.f.dom, sq.beta.dom);
    const Morphism diff = cat.subtract(cat.compose(sq.f, sum.proj1), cat.compose(sq.beta, sum.proj2));
    const Cone k = cat.kernel(diff);
    const auto comparison =
        k.factor(cat.add(cat.compose(sum.inj1, sq.alpha), cat.compose(sum.inj2, sq.g)));
    if (!comparison) throw LawViolation("is_pullback: square does not map into the pullback");
    return is_iso(cat, *comparison);
}

bool is_pushout(const Category& cat, const Square& sq)
{
    const Biproduct sum = cat.biproduct(sq.alpha.cod, sq.g.cod);
    const Morphism diff = cat.subtract(cat.compose(sum.inj1, sq.alpha), cat.compose(sum.inj2, sq.g));
    const Cone q = cat.cokernel(diff);
    const auto comparison =
        q.factor(cat.add(cat.compose(sq.f, sum.proj1), cat.compose(sq.beta, sum.proj2)));
    if (!comparison) throw LawViolation("is_pushout: pushout does not map into the square");
    return is_iso(cat, *comparison);
}

} // namespace preab
