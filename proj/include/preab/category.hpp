#pragma once

// The preabelian category interface. Backends supply composition, the
// additive structure, biproducts, kernels, cokernels and iso detection; every
// derived construction (see constructions.hpp) is written against this
// interface only, so it runs unchanged in an opposite category.

#include "preab/linalg.hpp"
#include "preab/random.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preab {

/// Raised when a payload violates a backend's structure (subspace/flag
/// preservation, integrality, shape).
class ConstraintViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Object of a concrete category: an ambient dimension plus an increasing
/// chain of canonical subspaces. The chain is empty for VectQ and LatZ.
struct Object {
    Index dim = 0;
    std::vector<RatSubspace> layers;

    friend bool operator==(const Object&, const Object&) = default;
};

/// A morphism as plain data. How `matrix` is read is up to the category that
/// produced the morphism: backends store the cod x dom matrix, an opposite
/// category stores the underlying morphism of its base.
struct Morphism {
    Object dom;
    Object cod;
    RatMatrix matrix;

    friend bool operator==(const Morphism& a, const Morphism& b)
    {
        return a.dom == b.dom && a.cod == b.cod && equal(a.matrix, b.matrix);
    }
};

/// Swaps the endpoints, keeping the payload. This is how a morphism of a
/// category is viewed in its opposite and back.
inline Morphism flip(const Morphism& m)
{
    return Morphism{m.cod, m.dom, m.matrix};
}

/// Universal (co)kernel: the apex, the leg, and the mediating-morphism
/// search. For a kernel of f, factor(x) returns the unique u with
/// leg∘u = x when f∘x = 0 and nullopt otherwise; dually for cokernels
/// (u∘leg = x when x∘f = 0).
struct Cone {
    Object apex;
    Morphism leg;
    std::function<std::optional<Morphism>(const Morphism&)> factor;
};

struct Biproduct {
    Object object;
    Morphism inj1, inj2, proj1, proj2;
};

class Category {
public:
    virtual ~Category() = default;

    virtual std::string name() const = 0;

    /// Throw ConstraintViolation when the payload is not valid here.
    virtual void validate(const Object& a) const = 0;
    virtual void validate(const Morphism& f) const = 0;

    /// g∘f.
    virtual Morphism compose(const Morphism& g, const Morphism& f) const = 0;
    virtual Morphism identity(const Object& a) const = 0;
    virtual Morphism zero(const Object& a, const Object& b) const = 0;
    virtual Morphism add(const Morphism& f, const Morphism& g) const = 0;
    virtual Morphism negate(const Morphism& f) const = 0;
    virtual Object zero_object() const = 0;
    virtual Biproduct biproduct(const Object& a, const Object& b) const = 0;

    virtual Cone kernel(const Morphism& f) const = 0;
    virtual Cone cokernel(const Morphism& f) const = 0;

    /// Two-sided inverse inside the category, if one exists.
    virtual std::optional<Morphism> inverse(const Morphism& f) const = 0;

    virtual Object random_object(Rng& rng, Index size_bound) const = 0;
    virtual Morphism random_morphism(Rng& rng, const Object& a, const Object& b) const = 0;

    bool valid(const Morphism& f) const;
    bool valid(const Object& a) const;

    Morphism subtract(const Morphism& f, const Morphism& g) const { return add(f, negate(g)); }
    bool is_zero_object(const Object& a) const;
    bool is_zero(const Morphism& f) const { return f == zero(f.dom, f.cod); }
    bool composable(const Morphism& g, const Morphism& f) const { return f.cod == g.dom; }
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Formal dual: morphisms reversed, kernels and cokernels exchanged.
/// Wrapping twice gives a category that behaves exactly like the original.
class Opposite final : public Category {
public:
    explicit Opposite(CategoryPtr base) : base_(std::move(base)) {}

    const CategoryPtr& base() const { return base_; }

    std::string name() const override { return "op(" + base_->name() + ")"; }
    void validate(const Object& a) const override { base_->validate(a); }
    void validate(const Morphism& f) const override { base_->validate(flip(f)); }

    Morphism compose(const Morphism& g, const Morphism& f) const override
    {
        return flip(base_->compose(flip(f), flip(g)));
    }
    Morphism identity(const Object& a) const override { return flip(base_->identity(a)); }
    Morphism zero(const Object& a, const Object& b) const override
    {
        return flip(base_->zero(b, a));
    }
    Morphism add(const Morphism& f, const Morphism& g) const override
    {
        return flip(base_->add(flip(f), flip(g)));
    }
    Morphism negate(const Morphism& f) const override { return flip(base_->negate(flip(f))); }
    Object zero_object() const override { return base_->zero_object(); }
    Biproduct biproduct(const Object& a, const Object& b) const override;

    Cone kernel(const Morphism& f) const override { return dualize(base_->cokernel(flip(f))); }
    Cone cokernel(const Morphism& f) const override { return dualize(base_->kernel(flip(f))); }

    std::optional<Morphism> inverse(const Morphism& f) const override
    {
        auto inv = base_->inverse(flip(f));
        if (!inv) return std::nullopt;
        return flip(*inv);
    }

    Object random_object(Rng& rng, Index size_bound) const override
    {
        return base_->random_object(rng, size_bound);
    }
    Morphism random_morphism(Rng& rng, const Object& a, const Object& b) const override
    {
        return flip(base_->random_morphism(rng, b, a));
    }

private:
    static Cone dualize(Cone c);

    CategoryPtr base_;
};

CategoryPtr opposite(CategoryPtr c);

} // namespace preab
