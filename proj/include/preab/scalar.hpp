#pragma once

// Exact scalar types and dense matrix aliases. Everything in the library is
// built on these; there is no floating point anywhere.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace preab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Canonical "p/q" form; q is always printed, q > 0.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", with an optional leading sign. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact equality that also compares shapes (Eigen's operator== asserts on
/// mismatched sizes).
template <typename A, typename B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

template <typename Scalar>
Matrix<Scalar> identity(Index n)
{
    return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> zeros(Index rows, Index cols)
{
    return Matrix<Scalar>::Zero(rows, cols);
}

bool is_integral(const RatMatrix& m);

/// Throws std::invalid_argument if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// Floor division for integers (boost truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b);

} // namespace preab
