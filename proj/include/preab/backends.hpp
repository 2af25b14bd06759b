#pragma once

// Registered concrete categories.
//
//   VectQ       finite-dimensional Q-vector spaces (abelian baseline)
//   SubVect     pairs X1 ⊆ Q^d with maps F satisfying F(X1) ⊆ Y1
//   FiltVect_n  length-n flags V1 ⊆ ... ⊆ Vn ⊆ Q^d, layerwise preserving maps
//   LatZ        free abelian groups Z^r with integer matrices
//
// The first three are one family: a flag of length 0, 1 or n.

#include "preab/category.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace preab {

/// Matrix-backed categories: a morphism a -> b stores its b.dim x a.dim matrix.
class MatrixCategory : public Category {
public:
    Morphism compose(const Morphism& g, const Morphism& f) const override;
    Morphism identity(const Object& a) const override;
    Morphism zero(const Object& a, const Object& b) const override;
    Morphism add(const Morphism& f, const Morphism& g) const override;
    Morphism negate(const Morphism& f) const override;
    Object zero_object() const override;
    Biproduct biproduct(const Object& a, const Object& b) const override;

protected:
    /// Number of layers carried by every object.
    virtual int layer_count() const = 0;
    void check_shape(const Morphism& f) const;
};

class FilteredVect final : public MatrixCategory {
public:
    explicit FilteredVect(int flag_length);

    int flag_length() const { return flag_length_; }

    std::string name() const override;
    void validate(const Object& a) const override;
    void validate(const Morphism& f) const override;
    Cone kernel(const Morphism& f) const override;
    Cone cokernel(const Morphism& f) const override;
    std::optional<Morphism> inverse(const Morphism& f) const override;
    Object random_object(Rng& rng, Index size_bound) const override;
    Morphism random_morphism(Rng& rng, const Object& a, const Object& b) const override;

private:
    int layer_count() const override { return flag_length_; }
    Morphism uniform_morphism(Rng& rng, const Object& a, const Object& b) const;

    int flag_length_;
};

class LatZ final : public MatrixCategory {
public:
    std::string name() const override { return "LatZ"; }
    void validate(const Object& a) const override;
    void validate(const Morphism& f) const override;
    Cone kernel(const Morphism& f) const override;
    Cone cokernel(const Morphism& f) const override;
    std::optional<Morphism> inverse(const Morphism& f) const override;
    Object random_object(Rng& rng, Index size_bound) const override;
    Morphism random_morphism(Rng& rng, const Object& a, const Object& b) const override;

private:
    int layer_count() const override { return 0; }
    Morphism uniform_morphism(Rng& rng, const Object& a, const Object& b) const;
};

/// "VectQ", "SubVect", "FiltVect_<n>", "LatZ", or "op(<name>)".
/// Throws std::invalid_argument for unknown names.
CategoryPtr make_backend(std::string_view name);

/// The four backends the audits run on.
std::vector<std::string> standard_backends();

/// Object from layer generators (columns); canonicalizes each layer and
/// validates the result. Throws ConstraintViolation.
Object make_object(const Category& cat, Index dim, const std::vector<RatMatrix>& layer_generators = {});

/// Throws ConstraintViolation when `matrix` is not a morphism dom -> cod.
Morphism make_morphism(const Category& cat, Object dom, Object cod, RatMatrix matrix);

} // namespace preab
