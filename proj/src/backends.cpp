#include "preab/backends.hpp"

#include "preab/lattice.hpp"

#include <charconv>

namespace preab {

// ---------------------------------------------------------------------------
// MatrixCategory

void MatrixCategory::check_shape(const Morphism& f) const
{
    if (f.matrix.rows() != f.cod.dim || f.matrix.cols() != f.dom.dim)
        throw ConstraintViolation(name() + ": matrix shape does not match endpoints");
}

Morphism MatrixCategory::compose(const Morphism& g, const Morphism& f) const
{
    if (!(f.cod == g.dom)) throw std::invalid_argument(name() + ": compose of non-composable pair");
    return Morphism{f.dom, g.cod, g.matrix * f.matrix};
}

Morphism MatrixCategory::identity(const Object& a) const
{
    return Morphism{a, a, preab::identity<Rational>(a.dim)};
}

Morphism MatrixCategory::zero(const Object& a, const Object& b) const
{
    return Morphism{a, b, zeros<Rational>(b.dim, a.dim)};
}

Morphism MatrixCategory::add(const Morphism& f, const Morphism& g) const
{
    if (!(f.dom == g.dom && f.cod == g.cod))
        throw std::invalid_argument(name() + ": add of morphisms with different endpoints");
    return Morphism{f.dom, f.cod, f.matrix + g.matrix};
}

Morphism MatrixCategory::negate(const Morphism& f) const
{
    return Morphism{f.dom, f.cod, -f.matrix};
}

Object MatrixCategory::zero_object() const
{
    Object z;
    z.dim = 0;
    z.layers.assign(static_cast<std::size_t>(layer_count()), RatSubspace::zero(0));
    return z;
}

Biproduct MatrixCategory::biproduct(const Object& a, const Object& b) const
{
    Object s;
    s.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.layers.size(); ++i) {
        RatMatrix block = zeros<Rational>(s.dim, a.layers[i].dim() + b.layers[i].dim());
        block.topLeftCorner(a.dim, a.layers[i].dim()) = a.layers[i].basis();
        block.bottomRightCorner(b.dim, b.layers[i].dim()) = b.layers[i].basis();
        s.layers.push_back(RatSubspace::span(block));
    }
    RatMatrix i1 = zeros<Rational>(s.dim, a.dim), i2 = zeros<Rational>(s.dim, b.dim);
    i1.topRows(a.dim) = preab::identity<Rational>(a.dim);
    i2.bottomRows(b.dim) = preab::identity<Rational>(b.dim);
    return Biproduct{s,
                     Morphism{a, s, i1},
                     Morphism{b, s, i2},
                     Morphism{s, a, i1.transpose()},
                     Morphism{s, b, i2.transpose()}};
}

// ---------------------------------------------------------------------------
// Shared sampling helpers

namespace {

Rational small_coefficient(Rng& rng)
{
    // Zero-heavy so that rank drops are common.
    static constexpr int table[] = {0, 0, 0, 1, -1, 1, -1, 2, -2, 3};
    return Rational(table[rng.uniform(0, 9)]);
}

RatMatrix random_small_matrix(Rng& rng, Index rows, Index cols)
{
    RatMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = small_coefficient(rng);
    return m;
}

RatMatrix identity_like(Index rows, Index cols)
{
    RatMatrix m = zeros<Rational>(rows, cols);
    for (Index i = 0; i < std::min(rows, cols); ++i) m(i, i) = Rational(1);
    return m;
}

} // namespace

// ---------------------------------------------------------------------------
// FilteredVect

FilteredVect::FilteredVect(int flag_length) : flag_length_(flag_length)
{
    if (flag_length < 0) throw std::invalid_argument("FilteredVect: negative flag length");
}

std::string FilteredVect::name() const
{
    if (flag_length_ == 0) return "VectQ";
    if (flag_length_ == 1) return "SubVect";
    return "FiltVect_" + std::to_string(flag_length_);
}

void FilteredVect::validate(const Object& a) const
{
    if (a.dim < 0) throw ConstraintViolation(name() + ": negative dimension");
    if (static_cast<int>(a.layers.size()) != flag_length_)
        throw ConstraintViolation(name() + ": expected " + std::to_string(flag_length_) + " layers");
    for (std::size_t i = 0; i < a.layers.size(); ++i) {
        if (a.layers[i].ambient_dim() != a.dim)
            throw ConstraintViolation(name() + ": layer ambient dimension mismatch");
        if (i > 0 && !a.layers[i].contains(a.layers[i - 1]))
            throw ConstraintViolation(name() + ": layers are not nested");
    }
}

void FilteredVect::validate(const Morphism& f) const
{
    validate(f.dom);
    validate(f.cod);
    check_shape(f);
    for (std::size_t i = 0; i < f.dom.layers.size(); ++i)
        if (!f.cod.layers[i].contains(pushforward(f.matrix, f.dom.layers[i])))
            throw ConstraintViolation(name() + ": map does not preserve layer " + std::to_string(i + 1));
}

Cone FilteredVect::kernel(const Morphism& f) const
{
    const RatMatrix k = kernel_basis(f.matrix).basis();
    Object apex;
    apex.dim = k.cols();
    for (const auto& layer : f.dom.layers) apex.layers.push_back(preimage(k, layer));
    Morphism leg{apex, f.dom, k};

    auto factor = [this, f, leg](const Morphism& x) -> std::optional<Morphism> {
        if (!(x.cod == f.dom) || !preab::is_zero(f.matrix * x.matrix)) return std::nullopt;
        auto u = solve_right(leg.matrix, x.matrix);
        if (!u) return std::nullopt;
        Morphism m{x.dom, leg.dom, std::move(*u)};
        if (!valid(m)) return std::nullopt;
        return m;
    };
    return Cone{apex, std::move(leg), std::move(factor)};
}

Cone FilteredVect::cokernel(const Morphism& f) const
{
    const RatMatrix q = quotient_map(image_basis(f.matrix));
    Object apex;
    apex.dim = q.rows();
    for (const auto& layer : f.cod.layers) apex.layers.push_back(pushforward(q, layer));
    Morphism leg{f.cod, apex, q};

    auto factor = [this, f, leg](const Morphism& y) -> std::optional<Morphism> {
        if (!(y.dom == f.cod) || !preab::is_zero(y.matrix * f.matrix)) return std::nullopt;
        auto u = solve_left(leg.matrix, y.matrix);
        if (!u) return std::nullopt;
        Morphism m{leg.cod, y.cod, std::move(*u)};
        if (!valid(m)) return std::nullopt;
        return m;
    };
    return Cone{apex, std::move(leg), std::move(factor)};
}

std::optional<Morphism> FilteredVect::inverse(const Morphism& f) const
{
    auto inv = preab::inverse(f.matrix);
    if (!inv) return std::nullopt;
    Morphism g{f.cod, f.dom, std::move(*inv)};
    if (!valid(g)) return std::nullopt;
    return g;
}

Object FilteredVect::random_object(Rng& rng, Index size_bound) const
{
    Object a;
    a.dim = rng.uniform(0, size_bound);
    RatSubspace current = RatSubspace::zero(a.dim);
    for (int i = 0; i < flag_length_; ++i) {
        switch (rng.uniform(0, 3)) {
        case 0: break;
        case 1: current = RatSubspace::full(a.dim); break;
        default: {
            const Index count = rng.uniform(1, std::max<Index>(1, a.dim));
            current = sum(current, RatSubspace::span(random_small_matrix(rng, a.dim, count)));
        }
        }
        a.layers.push_back(current);
    }
    return a;
}

Morphism FilteredVect::uniform_morphism(Rng& rng, const Object& a, const Object& b) const
{
    // Basis of Q^a adapted to the flag; each basis vector is sent to a random
    // element of the matching layer of b, so the result preserves the flag.
    RatMatrix basis(a.dim, a.dim);
    RatMatrix images(b.dim, a.dim);
    RatSubspace spanned = RatSubspace::zero(a.dim);
    Index filled = 0;
    auto extend = [&](const RatMatrix& candidates, const RatSubspace* target) {
        for (Index c = 0; c < candidates.cols() && filled < a.dim; ++c) {
            if (spanned.contains_vectors(candidates.col(c))) continue;
            basis.col(filled) = candidates.col(c);
            if (target)
                images.col(filled) =
                    target->basis() * random_small_matrix(rng, target->dim(), 1);
            else
                images.col(filled) = random_small_matrix(rng, b.dim, 1);
            spanned = RatSubspace::span(basis.leftCols(filled + 1));
            ++filled;
        }
    };
    for (std::size_t i = 0; i < a.layers.size(); ++i) extend(a.layers[i].basis(), &b.layers[i]);
    extend(preab::identity<Rational>(a.dim), nullptr);
    const auto inv = preab::inverse(basis);
    return Morphism{a, b, images * *inv};
}

Morphism FilteredVect::random_morphism(Rng& rng, const Object& a, const Object& b) const
{
    if (rng.chance(20)) {
        switch (rng.uniform(0, 3)) {
        case 0: return zero(a, b);
        case 1: {
            Morphism m{a, b, identity_like(b.dim, a.dim)};
            if (valid(m)) return m;
            break;
        }
        default: {
            // Factor through a small intermediate object to force rank drops.
            const Object mid = random_object(rng, std::max<Index>(0, std::min(a.dim, b.dim) - 1));
            return compose(uniform_morphism(rng, mid, b), uniform_morphism(rng, a, mid));
        }
        }
    }
    return uniform_morphism(rng, a, b);
}

// ---------------------------------------------------------------------------
// LatZ

void LatZ::validate(const Object& a) const
{
    if (a.dim < 0) throw ConstraintViolation("LatZ: negative rank");
    if (!a.layers.empty()) throw ConstraintViolation("LatZ: objects carry no layers");
}

void LatZ::validate(const Morphism& f) const
{
    validate(f.dom);
    validate(f.cod);
    check_shape(f);
    if (!is_integral(f.matrix)) throw ConstraintViolation("LatZ: non-integer matrix entry");
}

Cone LatZ::kernel(const Morphism& f) const
{
    const RatMatrix k = to_rational(integer_kernel(to_integer(f.matrix)));
    Object apex;
    apex.dim = k.cols();
    Morphism leg{apex, f.dom, k};

    auto factor = [f, leg](const Morphism& x) -> std::optional<Morphism> {
        if (!(x.cod == f.dom) || !preab::is_zero(f.matrix * x.matrix)) return std::nullopt;
        auto u = solve_right(leg.matrix, x.matrix);
        if (!u || !is_integral(*u)) return std::nullopt;
        return Morphism{x.dom, leg.dom, std::move(*u)};
    };
    return Cone{apex, std::move(leg), std::move(factor)};
}

Cone LatZ::cokernel(const Morphism& f) const
{
    // Dividing by the saturation of the image keeps the quotient free.
    const RatMatrix q = to_rational(lattice_quotient_map(to_integer(f.matrix)));
    Object apex;
    apex.dim = q.rows();
    Morphism leg{f.cod, apex, q};

    auto factor = [f, leg](const Morphism& y) -> std::optional<Morphism> {
        if (!(y.dom == f.cod) || !preab::is_zero(y.matrix * f.matrix)) return std::nullopt;
        auto u = solve_left(leg.matrix, y.matrix);
        if (!u || !is_integral(*u)) return std::nullopt;
        return Morphism{leg.cod, y.cod, std::move(*u)};
    };
    return Cone{apex, std::move(leg), std::move(factor)};
}

std::optional<Morphism> LatZ::inverse(const Morphism& f) const
{
    auto inv = preab::inverse(f.matrix);
    if (!inv || !is_integral(*inv)) return std::nullopt;
    return Morphism{f.cod, f.dom, std::move(*inv)};
}

Object LatZ::random_object(Rng& rng, Index size_bound) const
{
    Object a;
    a.dim = rng.uniform(0, size_bound);
    return a;
}

Morphism LatZ::uniform_morphism(Rng& rng, const Object& a, const Object& b) const
{
    return Morphism{a, b, random_small_matrix(rng, b.dim, a.dim)};
}

Morphism LatZ::random_morphism(Rng& rng, const Object& a, const Object& b) const
{
    if (rng.chance(20)) {
        switch (rng.uniform(0, 3)) {
        case 0: return zero(a, b);
        case 1: return Morphism{a, b, identity_like(b.dim, a.dim)};
        case 2: return Morphism{a, b, identity_like(b.dim, a.dim) * Rational(rng.uniform(2, 3))};
        default: {
            const Object mid = random_object(rng, std::max<Index>(0, std::min(a.dim, b.dim) - 1));
            return compose(uniform_morphism(rng, mid, b), uniform_morphism(rng, a, mid));
        }
        }
    }
    return uniform_morphism(rng, a, b);
}

// ---------------------------------------------------------------------------
// Registry

CategoryPtr make_backend(std::string_view name)
{
    if (name == "VectQ") return std::make_shared<FilteredVect>(0);
    if (name == "SubVect") return std::make_shared<FilteredVect>(1);
    if (name == "LatZ") return std::make_shared<LatZ>();
    constexpr std::string_view filt = "FiltVect_";
    if (name.starts_with(filt)) {
        const std::string_view digits = name.substr(filt.size());
        int n = -1;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && end == digits.data() + digits.size() && n >= 0 && n <= 16)
            return std::make_shared<FilteredVect>(n);
    }
    if (name.starts_with("op(") && name.ends_with(")"))
        return opposite(make_backend(name.substr(3, name.size() - 4)));
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

std::vector<std::string> standard_backends()
{
    return {"VectQ", "SubVect", "FiltVect_3", "LatZ"};
}

Object make_object(const Category& cat, Index dim, const std::vector<RatMatrix>& layer_generators)
{
    Object a;
    a.dim = dim;
    for (const auto& gens : layer_generators) {
        if (gens.rows() != dim) throw ConstraintViolation(cat.name() + ": layer generator shape mismatch");
        a.layers.push_back(RatSubspace::span(gens));
    }
    cat.validate(a);
    return a;
}

Morphism make_morphism(const Category& cat, Object dom, Object cod, RatMatrix matrix)
{
    Morphism f{std::move(dom), std::move(cod), std::move(matrix)};
    cat.validate(f);
    return f;
}

} // namespace preab
