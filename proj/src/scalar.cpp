#include "preab/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace preab {

std::string to_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(Integer{std::string(num)}, d);
    return negative ? Rational(-q) : q;
}

bool is_integral(const RatMatrix& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (denominator(m(i, j)) != 1) return false;
    return true;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) {
            if (denominator(m(i, j)) != 1)
                throw std::invalid_argument("to_integer: non-integral entry " + to_string(m(i, j)));
            out(i, j) = numerator(m(i, j));
        }
    return out;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rational(m(i, j));
    return out;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

} // namespace preab
