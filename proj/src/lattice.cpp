#include "preab/lattice.hpp"

#include <stdexcept>
#include <tuple>

namespace preab {

namespace {

// g = a*x + b*y, g >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

} // namespace

HermiteForm column_hermite(const IntMatrix& m)
{
    HermiteForm out;
    out.h = m;
    out.u = identity<Integer>(m.cols());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const Index n = m.cols();
    Index r = 0;

    for (Index row = 0; row < m.rows() && r < n; ++row) {
        for (Index j = r + 1; j < n; ++j) {
            if (h(row, j) == 0) continue;
            const Integer a = h(row, r);
            const Integer b = h(row, j);
            const auto [g, x, y] = extended_gcd(a, b);
            const Integer ag = a / g;
            const Integer bg = b / g;
            // [col_r col_j] <- [col_r col_j] * [[x, -bg], [y, ag]], det = 1
            const IntMatrix hr = h.col(r), hj = h.col(j);
            h.col(r) = hr * x + hj * y;
            h.col(j) = hr * Integer(-bg) + hj * ag;
            const IntMatrix ur = u.col(r), uj = u.col(j);
            u.col(r) = ur * x + uj * y;
            u.col(j) = ur * Integer(-bg) + uj * ag;
        }
        if (h(row, r) == 0) continue;
        if (h(row, r) < 0) {
            h.col(r) = -h.col(r);
            u.col(r) = -u.col(r);
        }
        for (Index k = 0; k < r; ++k) {
            const Integer q = floor_div(h(row, k), h(row, r));
            if (q == 0) continue;
            h.col(k) -= h.col(r) * q;
            u.col(k) -= u.col(r) * q;
        }
        out.pivot_rows.push_back(row);
        ++r;
    }
    out.rank = r;
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    const HermiteForm hf = column_hermite(m);
    const IntMatrix gens = hf.u.rightCols(m.cols() - hf.rank);
    return IntLattice::span(gens).basis();
}

IntLattice IntLattice::span(const IntMatrix& generators)
{
    IntLattice l;
    l.ambient_ = generators.rows();
    const HermiteForm hf = column_hermite(generators);
    l.basis_ = hf.h.leftCols(hf.rank);
    return l;
}

IntLattice IntLattice::full(Index n)
{
    return span(identity<Integer>(n));
}

bool IntLattice::contains(const IntLattice& other) const
{
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("IntLattice::contains: dimension mismatch");
    IntMatrix joined(ambient_, rank() + other.rank());
    joined << basis_, other.basis_;
    return span(joined) == *this;
}

IntLattice saturate(const IntLattice& l)
{
    // The integral kernel of any integer matrix is saturated, and the
    // annihilator of the annihilator recovers span_Q(l) ∩ Z^n.
    const IntMatrix annihilator = integer_kernel(l.basis().transpose());
    return IntLattice::span(integer_kernel(annihilator.transpose()));
}

IntMatrix lattice_quotient_map(const IntMatrix& generators)
{
    return integer_kernel(generators.transpose()).transpose();
}

} // namespace preab
