#pragma once

// Integer lattice helpers: column Hermite normal form, integral kernels and
// saturation. Used by the lattice category, where cokernels must divide by a
// saturated sublattice to stay torsion-free.

#include "preab/scalar.hpp"

#include <vector>

namespace preab {

struct HermiteForm {
    IntMatrix h;     ///< column Hermite normal form of the input, same shape
    IntMatrix u;     ///< unimodular, input * u == h
    Index rank = 0;  ///< nonzero columns of h are exactly the first `rank`
    std::vector<Index> pivot_rows;
};

/// Lower column-echelon Hermite form: pivots positive, entries left of a
/// pivot reduced into [0, pivot).
HermiteForm column_hermite(const IntMatrix& m);

/// Z-basis (columns, in Hermite form) of {x in Z^n : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// A sublattice of Z^n given by a basis in column Hermite normal form.
class IntLattice {
public:
    IntLattice() = default;

    /// Lattice generated by the columns of `generators`.
    static IntLattice span(const IntMatrix& generators);
    static IntLattice full(Index n);

    Index ambient_dim() const { return ambient_; }
    Index rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntLattice& other) const;

    friend bool operator==(const IntLattice& a, const IntLattice& b)
    {
        return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
    }

private:
    Index ambient_ = 0;
    IntMatrix basis_ = zeros<Integer>(0, 0);
};

/// span_Q(l) ∩ Z^n.
IntLattice saturate(const IntLattice& l);

/// Surjection Z^n -> Z^(n-r) whose kernel is the saturation of the lattice
/// generated by the columns of `generators`.
IntMatrix lattice_quotient_map(const IntMatrix& generators);

} // namespace preab
