#pragma once

// Universal constructions derived from kernels, cokernels and biproducts:
// the canonical decomposition f = im f ∘ fbar ∘ coim f, morphism
// classification, pullbacks and pushouts, and the maps induced on kernels and
// cokernels by a commutative square.

#include "preab/category.hpp"

#include <stdexcept>
#include <string>

namespace preab {

/// A universal property that must hold in any preabelian category failed.
/// Checkers turn this into a failing verdict with a witness.
class LawViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Decomposition {
    Morphism coim;  ///< cokernel of ker f
    Morphism fbar;  ///< Coim f -> Im f
    Morphism im;    ///< kernel of cok f
};

Decomposition decompose(const Category& cat, const Morphism& f);

struct MorphismClass {
    bool mono = false;
    bool epi = false;
    bool bimorphism = false;
    bool iso = false;
    bool strict = false;
    bool is_kernel = false;
    bool is_cokernel = false;

    friend bool operator==(const MorphismClass&, const MorphismClass&) = default;
};

MorphismClass classify(const Category& cat, const Morphism& f);

bool is_mono(const Category& cat, const Morphism& f);
bool is_epi(const Category& cat, const Morphism& f);
bool is_iso(const Category& cat, const Morphism& f);
bool is_strict(const Category& cat, const Morphism& f);
/// Mono and strict, i.e. f arises as the kernel of something.
bool is_kernel(const Category& cat, const Morphism& f);
bool is_cokernel(const Category& cat, const Morphism& f);

enum class Provenance { pushout, pullback, commutative };

std::string to_string(Provenance p);

/// The square
///
///     C --g--> D
///     |alpha   |beta
///     v        v
///     A --f--> B
///
/// with f∘alpha = beta∘g.
struct Square {
    Morphism g;
    Morphism alpha;
    Morphism beta;
    Morphism f;
    Provenance provenance = Provenance::commutative;
};

/// Validates endpoints and commutativity; throws std::invalid_argument.
Square make_square(const Category& cat, Morphism g, Morphism alpha, Morphism beta, Morphism f,
                   Provenance provenance = Provenance::commutative);

/// Pushout of the span A <-alpha- C -g-> D, built as the cokernel of
/// (alpha, -g): C -> A ⊕ D.
Square pushout(const Category& cat, const Morphism& alpha, const Morphism& g);

/// Pullback of the cospan A -f-> B <-t- D, built as the kernel of
/// [f, -t]: A ⊕ D -> B.
Square pullback(const Category& cat, const Morphism& f, const Morphism& t);

/// The unique α̂ : Ker g -> Ker f with (ker f)∘α̂ = alpha∘(ker g).
Morphism induced_kernel_map(const Category& cat, const Square& sq);

/// The unique β̂ : Cok g -> Cok f with (cok f)∘beta = β̂∘(cok g).
Morphism induced_cokernel_map(const Category& cat, const Square& sq);

/// Comparison C -> (pullback of f, beta) is an isomorphism.
bool is_pullback(const Category& cat, const Square& sq);

/// Comparison (pushout of alpha, g) -> B is an isomorphism.
bool is_pushout(const Category& cat, const Square& sq);

} // namespace preab
