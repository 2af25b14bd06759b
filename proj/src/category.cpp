#include "preab/category.hpp"

namespace preab {

bool Category::valid(const Morphism& f) const
{
    try {
        validate(f);
        return true;
    } catch (const ConstraintViolation&) {
        return false;
    }
}

bool Category::valid(const Object& a) const
{
    try {
        validate(a);
        return true;
    } catch (const ConstraintViolation&) {
        return false;
    }
}

bool Category::is_zero_object(const Object& a) const
{
    return identity(a) == zero(a, a);
}

Biproduct Opposite::biproduct(const Object& a, const Object& b) const
{
    const Biproduct p = base_->biproduct(a, b);
    return Biproduct{p.object, flip(p.proj1), flip(p.proj2), flip(p.inj1), flip(p.inj2)};
}

Cone Opposite::dualize(Cone c)
{
    auto factor = [inner = std::move(c.factor)](const Morphism& x) -> std::optional<Morphism> {
        auto u = inner(flip(x));
        if (!u) return std::nullopt;
        return flip(*u);
    };
    return Cone{std::move(c.apex), flip(c.leg), std::move(factor)};
}

CategoryPtr opposite(CategoryPtr c)
{
    return std::make_shared<Opposite>(std::move(c));
}

} // namespace preab
