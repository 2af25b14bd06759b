#pragma once

// Exact linear algebra over a field. All routines are templates on the scalar
// type and accept any Eigen expression; the library instantiates them with
// Rational.

#include "preab/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace preab {

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot columns are
/// appended to `pivots` when given.
template <typename Derived>
Matrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m,
                                      std::vector<Index>* pivots = nullptr)
{
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> r = m;
    Index lead = 0;
    for (Index col = 0; col < r.cols() && lead < r.rows(); ++col) {
        Index pivot = lead;
        while (pivot < r.rows() && r(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != lead) r.row(pivot).swap(r.row(lead));
        const Scalar inv = Scalar(1) / r(lead, col);
        for (Index j = col; j < r.cols(); ++j) r(lead, j) *= inv;
        for (Index i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col) == Scalar(0)) continue;
            const Scalar factor = r(i, col);
            for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return r;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    std::vector<Index> pivots;
    rref(m, &pivots);
    return static_cast<Index>(pivots.size());
}

/// A linear subspace of Scalar^n, stored as a basis in reduced column echelon
/// form. The representation is unique, so equality is plain comparison.
template <typename Scalar>
class Subspace {
public:
    Subspace() = default;

    /// Span of the columns of `generators`.
    template <typename Derived>
    static Subspace span(const Eigen::MatrixBase<Derived>& generators)
    {
        Subspace s;
        s.ambient_ = generators.rows();
        std::vector<Index> pivots;
        const Matrix<Scalar> reduced = rref(generators.transpose(), &pivots);
        const auto k = static_cast<Index>(pivots.size());
        s.basis_ = reduced.topRows(k).transpose();
        s.pivot_rows_ = std::move(pivots);
        return s;
    }

    static Subspace zero(Index n) { return span(zeros<Scalar>(n, 0)); }
    static Subspace full(Index n) { return span(identity<Scalar>(n)); }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    const Matrix<Scalar>& basis() const { return basis_; }

    /// Coordinates (in Scalar^n) that carry a pivot of the echelon basis.
    const std::vector<Index>& pivot_rows() const { return pivot_rows_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    template <typename Derived>
    bool contains_vectors(const Eigen::MatrixBase<Derived>& vectors) const
    {
        if (vectors.rows() != ambient_)
            throw std::invalid_argument("Subspace::contains_vectors: dimension mismatch");
        if (vectors.cols() == 0) return true;
        Matrix<Scalar> joined(ambient_, dim() + vectors.cols());
        joined << basis_, vectors;
        return rank(joined) == dim();
    }

    bool contains(const Subspace& other) const
    {
        if (other.ambient_ != ambient_)
            throw std::invalid_argument("Subspace::contains: dimension mismatch");
        return contains_vectors(other.basis_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
    }

private:
    Index ambient_ = 0;
    Matrix<Scalar> basis_ = zeros<Scalar>(0, 0);
    std::vector<Index> pivot_rows_;
};

using RatSubspace = Subspace<Rational>;

/// Nullspace of `m` as a subspace of Scalar^cols(m).
template <typename Derived>
Subspace<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    std::vector<Index> pivots;
    const Matrix<Scalar> r = rref(m, &pivots);
    const Index n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    Matrix<Scalar> gens = zeros<Scalar>(n, n - static_cast<Index>(pivots.size()));
    Index g = 0;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        gens(free, g) = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            gens(pivots[i], g) = -r(static_cast<Index>(i), free);
        ++g;
    }
    return Subspace<Scalar>::span(gens);
}

/// Column space of `m` as a subspace of Scalar^rows(m).
template <typename Derived>
Subspace<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m)
{
    return Subspace<typename Derived::Scalar>::span(m);
}

/// Some X with a*X = b, free variables set to zero; nullopt if inconsistent.
template <typename DA, typename DB>
std::optional<Matrix<typename DA::Scalar>> solve_right(const Eigen::MatrixBase<DA>& a,
                                                       const Eigen::MatrixBase<DB>& b)
{
    using Scalar = typename DA::Scalar;
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_right: row count mismatch");
    const Index n = a.cols();
    Matrix<Scalar> aug(a.rows(), n + b.cols());
    aug << a, b;
    std::vector<Index> pivots;
    const Matrix<Scalar> r = rref(aug, &pivots);
    Matrix<Scalar> x = zeros<Scalar>(n, b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= n) return std::nullopt;  // pivot in the augmented block
        x.row(pivots[i]) = r.row(static_cast<Index>(i)).tail(b.cols());
    }
    return x;
}

/// Some X with X*a = b; nullopt if none exists.
template <typename DA, typename DB>
std::optional<Matrix<typename DA::Scalar>> solve_left(const Eigen::MatrixBase<DA>& a,
                                                      const Eigen::MatrixBase<DB>& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("solve_left: column count mismatch");
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return Matrix<typename DA::Scalar>(xt->transpose());
}

template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_right(m, identity<Scalar>(m.rows()));
}

template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& s, const Subspace<Scalar>& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("intersect: dimension mismatch");
    // (u, v) with S u = T v; the intersection is spanned by the S u.
    Matrix<Scalar> joined(s.ambient_dim(), s.dim() + t.dim());
    joined << s.basis(), -t.basis();
    const Subspace<Scalar> rel = kernel_basis(joined);
    return Subspace<Scalar>::span(s.basis() * rel.basis().topRows(s.dim()));
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& s, const Subspace<Scalar>& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("sum: dimension mismatch");
    Matrix<Scalar> joined(s.ambient_dim(), s.dim() + t.dim());
    joined << s.basis(), t.basis();
    return Subspace<Scalar>::span(joined);
}

/// Image of `s` under the linear map `f`.
template <typename Derived>
Subspace<typename Derived::Scalar> pushforward(const Eigen::MatrixBase<Derived>& f,
                                               const Subspace<typename Derived::Scalar>& s)
{
    if (f.cols() != s.ambient_dim())
        throw std::invalid_argument("pushforward: dimension mismatch");
    return Subspace<typename Derived::Scalar>::span(f * s.basis());
}

/// {x : f x in t}.
template <typename Derived>
Subspace<typename Derived::Scalar> preimage(const Eigen::MatrixBase<Derived>& f,
                                            const Subspace<typename Derived::Scalar>& t)
{
    using Scalar = typename Derived::Scalar;
    if (f.rows() != t.ambient_dim())
        throw std::invalid_argument("preimage: dimension mismatch");
    Matrix<Scalar> joined(f.rows(), f.cols() + t.dim());
    joined << f, -t.basis();
    const Subspace<Scalar> rel = kernel_basis(joined);
    return Subspace<Scalar>::span(rel.basis().topRows(f.cols()));
}

/// Unit vectors on the non-pivot coordinates of `s`; together with the basis
/// of `s` they form a basis of the ambient space.
template <typename Scalar>
Matrix<Scalar> complement_basis(const Subspace<Scalar>& s)
{
    const Index n = s.ambient_dim();
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (Index p : s.pivot_rows()) pivot[static_cast<std::size_t>(p)] = true;
    Matrix<Scalar> c = zeros<Scalar>(n, n - s.dim());
    Index k = 0;
    for (Index i = 0; i < n; ++i)
        if (!pivot[static_cast<std::size_t>(i)]) c(i, k++) = Scalar(1);
    return c;
}

/// The surjection Scalar^n -> Scalar^(n - dim s) with kernel exactly `s`,
/// reading off coordinates along complement_basis(s).
template <typename Scalar>
Matrix<Scalar> quotient_map(const Subspace<Scalar>& s)
{
    const Index n = s.ambient_dim();
    Matrix<Scalar> adapted(n, n);
    adapted << s.basis(), complement_basis(s);
    const auto inv = inverse(adapted);
    if (!inv) throw std::logic_error("quotient_map: adapted basis is singular");
    return inv->bottomRows(n - s.dim());
}

} // namespace preab
