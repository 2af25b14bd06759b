#include "preab/backends.hpp"
#include "preab/constructions.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace preab;
using preab::test::mat;

namespace {

Object vect(const Category& cat, Index n) { return make_object(cat, n); }

bool iso_via(const Category& cat, const Cone& cone, const Morphism& other_leg)
{
    auto u = cone.factor(other_leg);
    return u && is_iso(cat, *u);
}

} // namespace

TEST_CASE("kernel and cokernel of trivial maps")
{
    const auto cat = make_backend("VectQ");
    const Object e = vect(*cat, 3), f = vect(*cat, 2);

    CHECK(cat->is_zero_object(cat->kernel(cat->identity(e)).apex));
    CHECK(cat->is_zero_object(cat->cokernel(cat->identity(e)).apex));

    const Cone k = cat->kernel(cat->zero(e, f));
    CHECK(k.apex.dim == 3);
    CHECK(is_iso(*cat, k.leg));
    const Cone c = cat->cokernel(cat->zero(e, f));
    CHECK(c.apex.dim == 2);
    CHECK(is_iso(*cat, c.leg));
}

TEST_CASE("SubVect kernel intersects with the subspace")
{
    const auto cat = make_backend("SubVect");
    const Object src = test::subvect_object(*cat, 2, mat({{1}, {0}}));  // (Q^2, span e1)
    const Object dst = test::subvect_object(*cat, 1, mat({{1}}));       // (Q^1, Q^1)
    const Morphism f = make_morphism(*cat, src, dst, mat({{1, 0}}));

    const Cone k = cat->kernel(f);
    // Apex (span e2, span e2 ∩ span e1) = (Q^1, 0).
    CHECK(k.apex.dim == 1);
    CHECK(k.apex.layers[0].is_zero());
    CHECK(equal(k.leg.matrix, mat({{0}, {1}})));
    CHECK(cat->is_zero(cat->compose(f, k.leg)));
}

TEST_CASE("LatZ cokernel of x2 divides by the saturation")
{
    const auto cat = make_backend("LatZ");
    const Object z = vect(*cat, 1);
    const Morphism twice = make_morphism(*cat, z, z, mat({{2}}));
    CHECK(cat->cokernel(twice).apex.dim == 0);
}

TEST_CASE("kernel factorization is exact and unique")
{
    const auto cat = make_backend("VectQ");
    const Object a = vect(*cat, 3), b = vect(*cat, 1), t = vect(*cat, 2);
    const Morphism f = make_morphism(*cat, a, b, mat({{1, 1, 0}}));
    const Cone k = cat->kernel(f);
    const Morphism x = make_morphism(*cat, t, a, mat({{1, 0}, {-1, 0}, {0, 5}}));
    const auto u = k.factor(x);
    REQUIRE(u);
    CHECK(cat->compose(k.leg, *u) == x);

    const Morphism bad = make_morphism(*cat, t, a, mat({{1, 0}, {0, 0}, {0, 0}}));
    CHECK_FALSE(k.factor(bad));
}

TEST_CASE("decompose")
{
    SUBCASE("identity")
    {
        const auto cat = make_backend("SubVect");
        const Object a = test::subvect_object(*cat, 2, mat({{1}, {1}}));
        const Decomposition d = decompose(*cat, cat->identity(a));
        CHECK(is_iso(*cat, d.coim));
        CHECK(is_iso(*cat, d.im));
        CHECK(is_iso(*cat, d.fbar));
        CHECK(cat->compose(d.im, cat->compose(d.fbar, d.coim)) == cat->identity(a));
    }
    SUBCASE("zero")
    {
        const auto cat = make_backend("VectQ");
        const Decomposition d = decompose(*cat, cat->zero(vect(*cat, 2), vect(*cat, 3)));
        CHECK(d.fbar.dom.dim == 0);
        CHECK(d.fbar.cod.dim == 0);
    }
    SUBCASE("SubVect non-strict witness")
    {
        const auto cat = make_backend("SubVect");
        const Object v0 = test::subvect_object(*cat, 2, zeros<Rational>(2, 0));
        const Object vv = test::subvect_object(*cat, 2, identity<Rational>(2));
        const Morphism f = make_morphism(*cat, v0, vv, identity<Rational>(2));
        const Decomposition d = decompose(*cat, f);
        // Coim = (V, 0) and Im = (V, V) via the formulas K = (ker F, ker F ∩ X1)
        // and Im = (F X0, F X0 ∩ Y1). Representative-dependent: compares objects.
        CHECK(d.coim.cod == v0);
        CHECK(d.im.dom == vv);
        CHECK(equal(d.fbar.matrix, identity<Rational>(2)));
        CHECK(cat->compose(d.im, cat->compose(d.fbar, d.coim)) == f);
    }
}

TEST_CASE("classify")
{
    SUBCASE("identity")
    {
        const auto cat = make_backend("FiltVect_3");
        Rng rng(5);
        const Object a = cat->random_object(rng, 3);
        const MorphismClass c = classify(*cat, cat->identity(a));
        CHECK(c.mono);
        CHECK(c.epi);
        CHECK(c.bimorphism);
        CHECK(c.iso);
        CHECK(c.strict);
        CHECK(c.is_kernel);
        CHECK(c.is_cokernel);
    }
    SUBCASE("SubVect (V,0) -> (V,V)")
    {
        const auto cat = make_backend("SubVect");
        const Object v0 = test::subvect_object(*cat, 1, zeros<Rational>(1, 0));
        const Object vv = test::subvect_object(*cat, 1, identity<Rational>(1));
        const MorphismClass c = classify(*cat, make_morphism(*cat, v0, vv, mat({{1}})));
        CHECK(c.mono);
        CHECK(c.epi);
        CHECK(c.bimorphism);
        CHECK_FALSE(c.iso);
        CHECK_FALSE(c.strict);
        CHECK_FALSE(c.is_kernel);
        CHECK_FALSE(c.is_cokernel);
    }
    SUBCASE("LatZ x2")
    {
        const auto cat = make_backend("LatZ");
        const Object z = vect(*cat, 1);
        const MorphismClass c = classify(*cat, make_morphism(*cat, z, z, mat({{2}})));
        CHECK(c.bimorphism);
        CHECK_FALSE(c.iso);
        CHECK_FALSE(c.strict);
    }
}

TEST_CASE("pushout")
{
    const auto cat = make_backend("VectQ");
    const Object c2 = vect(*cat, 2), one = vect(*cat, 1);

    SUBCASE("along the identity")
    {
        const Morphism g = make_morphism(*cat, c2, one, mat({{1, 2}}));
        const Square sq = pushout(*cat, cat->identity(c2), g);
        CHECK(sq.provenance == Provenance::pushout);
        CHECK(is_iso(*cat, sq.beta));
        CHECK(cat->compose(sq.beta, g) == sq.f);
    }
    SUBCASE("along C -> 0 gives the cokernel of g")
    {
        const Morphism g = make_morphism(*cat, c2, vect(*cat, 3), mat({{1, 0}, {0, 1}, {1, 1}}));
        const Square sq = pushout(*cat, cat->zero(c2, cat->zero_object()), g);
        CHECK(iso_via(*cat, cat->cokernel(g), sq.beta));
    }
    SUBCASE("two surjections Q^2 -> Q^1")
    {
        // dim P = dim A + dim D - rank(alpha; -g), computed by hand.
        const Morphism p1 = make_morphism(*cat, c2, one, mat({{1, 0}}));
        const Morphism p2 = make_morphism(*cat, c2, one, mat({{0, 1}}));
        CHECK(pushout(*cat, p1, p2).f.cod.dim == 0);  // rank [[1,0],[0,-1]] = 2
        CHECK(pushout(*cat, p1, p1).f.cod.dim == 1);  // rank [[1,0],[-1,0]] = 1
    }
    CHECK_THROWS_AS(pushout(*cat, cat->identity(c2), cat->identity(one)), std::invalid_argument);
}

TEST_CASE("pullback")
{
    SUBCASE("along the identity and along 0 -> F")
    {
        const auto cat = make_backend("VectQ");
        const Object a = vect(*cat, 3), b = vect(*cat, 2);
        const Morphism f = make_morphism(*cat, a, b, mat({{1, 0, 1}, {0, 1, 1}}));
        const Square sq = pullback(*cat, f, cat->identity(b));
        CHECK(is_iso(*cat, sq.alpha));
        CHECK(cat->compose(f, sq.alpha) == sq.g);

        const Square sq0 = pullback(*cat, f, cat->zero(cat->zero_object(), b));
        CHECK(iso_via(*cat, cat->kernel(f), sq0.alpha));
    }
    SUBCASE("SubVect pullback of two inclusions is the intersection")
    {
        const auto cat = make_backend("SubVect");
        const Object b = test::subvect_object(*cat, 3, mat({{1, 0}, {0, 1}, {0, 0}}));
        const Object a = test::subvect_object(*cat, 2, identity<Rational>(2));
        const Object d = test::subvect_object(*cat, 2, mat({{1}, {0}}));
        const Morphism f = make_morphism(*cat, a, b, mat({{1, 0}, {0, 1}, {0, 0}}));
        const Morphism t = make_morphism(*cat, d, b, mat({{0, 0}, {1, 0}, {0, 1}}));
        const Square sq = pullback(*cat, f, t);

        const RatSubspace meet = intersect(image_basis(f.matrix), image_basis(t.matrix));
        const RatSubspace layer_meet = intersect(pushforward(f.matrix, a.layers[0]),
                                                 pushforward(t.matrix, d.layers[0]));
        CHECK(sq.g.dom.dim == meet.dim());
        CHECK(sq.g.dom.layers[0].dim() == layer_meet.dim());
        CHECK(is_pullback(*cat, sq));
    }
}

TEST_CASE("induced maps on kernels and cokernels")
{
    const auto cat = make_backend("VectQ");
    const Object q2 = vect(*cat, 2);
    const Morphism f = make_morphism(*cat, q2, q2, mat({{1, 0}, {0, 0}}));
    const Morphism scale = make_morphism(*cat, q2, q2, mat({{1, 0}, {0, 2}}));

    SUBCASE("identity square")
    {
        const Square sq = make_square(*cat, f, cat->identity(q2), cat->identity(q2), f);
        CHECK(is_iso(*cat, induced_kernel_map(*cat, sq)));
        CHECK(equal(induced_kernel_map(*cat, sq).matrix, identity<Rational>(1)));
        CHECK(equal(induced_cokernel_map(*cat, sq).matrix, identity<Rational>(1)));
    }
    SUBCASE("shared kernel line scaled by 2")
    {
        const Square sq = make_square(*cat, f, scale, scale, f);
        // ker f = span e2 and alpha e2 = 2 e2; cok f reads the e2 coordinate.
        CHECK(equal(induced_kernel_map(*cat, sq).matrix, mat({{2}})));
        CHECK(equal(induced_cokernel_map(*cat, sq).matrix, mat({{2}})));
        const Morphism hat = induced_kernel_map(*cat, sq);
        CHECK(cat->compose(cat->kernel(f).leg, hat) ==
              cat->compose(sq.alpha, cat->kernel(sq.g).leg));
        // Deterministic payload on recomputation.
        CHECK(induced_kernel_map(*cat, sq) == hat);
    }
    SUBCASE("g mono")
    {
        const Morphism g = cat->identity(q2);
        const Square sq = make_square(*cat, g, f, f, cat->identity(q2));
        CHECK(induced_kernel_map(*cat, sq).dom.dim == 0);
    }
    const Morphism swap = make_morphism(*cat, q2, q2, mat({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(make_square(*cat, f, swap, cat->identity(q2), f), std::invalid_argument);
}

TEST_CASE("is_pullback / is_pushout")
{
    const auto cat = make_backend("VectQ");
    const Object q1 = vect(*cat, 1), zero = cat->zero_object();

    // C = Q^1 over a zero cospan is not a pullback.
    const Square zeros_sq = make_square(*cat, cat->zero(q1, zero), cat->zero(q1, zero),
                                        cat->identity(zero), cat->identity(zero));
    CHECK_FALSE(is_pullback(*cat, zeros_sq));

    Rng rng(3);
    const Object a = vect(*cat, 3), b = vect(*cat, 2);
    const Morphism f = cat->random_morphism(rng, a, b);
    const Morphism t = cat->random_morphism(rng, vect(*cat, 2), b);
    CHECK(is_pullback(*cat, pullback(*cat, f, t)));

    // Pushout along a kernel in an abelian category is also a pullback.
    const Morphism g = cat->kernel(make_morphism(*cat, a, b, mat({{1, 1, 0}, {0, 0, 0}}))).leg;
    const Square po = pushout(*cat, cat->random_morphism(rng, g.dom, vect(*cat, 2)), g);
    CHECK(is_pushout(*cat, po));
    CHECK(is_pullback(*cat, po));
}

TEST_CASE("opposite category")
{
    const auto base = make_backend("SubVect");
    const auto op = opposite(base);
    const auto opop = opposite(op);
    Rng rng(11);

    for (int trial = 0; trial < 40; ++trial) {
        const Object a = base->random_object(rng, 3), b = base->random_object(rng, 3);
        const Morphism f = base->random_morphism(rng, a, b);
        const Morphism fop = flip(f);

        // kernel in op = cokernel in base, leg reversed
        const Cone kop = op->kernel(fop);
        const Cone cok = base->cokernel(f);
        CHECK(kop.apex == cok.apex);
        CHECK(kop.leg == flip(cok.leg));

        const MorphismClass c = classify(*base, f);
        const MorphismClass cop = classify(*op, fop);
        CHECK(cop.mono == c.epi);
        CHECK(cop.epi == c.mono);
        CHECK(cop.is_kernel == c.is_cokernel);
        CHECK(cop.is_cokernel == c.is_kernel);
        CHECK(cop.strict == c.strict);
        CHECK(cop.iso == c.iso);

        // op(op(C)) behaves like C.
        CHECK(classify(*opop, f) == c);
        CHECK(opop->kernel(f).leg == base->kernel(f).leg);
        CHECK(opop->cokernel(f).leg == base->cokernel(f).leg);
        const Decomposition d = decompose(*base, f), dd = decompose(*opop, f);
        CHECK(d.fbar == dd.fbar);
        CHECK(d.im == dd.im);
        CHECK(d.coim == dd.coim);
    }
    CHECK(op->name() == "op(SubVect)");
    CHECK(make_backend("op(op(LatZ))")->name() == "op(op(LatZ))");
}
