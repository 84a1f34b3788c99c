#pragma once

#include <random>
#include <vector>

#include "c32/matrix.hpp"
#include "c32/poly.hpp"

namespace c32::testing {

/// Random rational in [-range, range] with denominator in 1 .. 4.
inline Rational random_rational(std::mt19937& rng, long range = 5)
{
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

/// Random polynomial with up to `terms` terms over `vars`, each exponent <= max_exp.
inline MultiPoly random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int terms = 5, unsigned max_exp = 2)
{
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    std::vector<Term> out;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (VarId v : vars) {
            m.set_exponent(v, ex(rng));
        }
        out.push_back({m, random_rational(rng)});
    }
    return MultiPoly::from_terms(std::move(out));
}

/// Fully generic 3x3 matrices x and y in x11 .. x33 and y11 .. y33 (not traceless).
inline Matrix3 full_generic(bool is_y)
{
    Matrix3 m;
    for (int r = 1; r <= 3; ++r) {
        for (int c = 1; c <= 3; ++c) {
            m(r - 1, c - 1) = MultiPoly::variable(is_y ? vars::y(r, c) : vars::x(r, c));
        }
    }
    return m;
}

}  // namespace c32::testing
