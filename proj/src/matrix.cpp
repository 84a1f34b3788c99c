#include "c32/matrix.hpp"

#include <stdexcept>

namespace c32 {

Matrix3 Matrix3::identity()
{
    return from_ints({1, 0, 0, 0, 1, 0, 0, 0, 1});
}

Matrix3 Matrix3::from_ints(const std::array<long, 9>& row_major)
{
    Matrix3 m;
    for (int i = 0; i < 9; ++i) {
        m.entries_[i] = MultiPoly(row_major[i]);
    }
    return m;
}

MultiPoly Matrix3::trace() const
{
    return entries_[0] + entries_[4] + entries_[8];
}

bool Matrix3::is_zero() const
{
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b)
{
    Matrix3 r;
    for (int i = 0; i < 9; ++i) {
        r.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return r;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b)
{
    Matrix3 r;
    for (int i = 0; i < 9; ++i) {
        r.entries_[i] = a.entries_[i] - b.entries_[i];
    }
    return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b)
{
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            MultiPoly sum;
            for (int k = 0; k < 3; ++k) {
                const MultiPoly& lhs = a(i, k);
                const MultiPoly& rhs = b(k, j);
                if (!lhs.is_zero() && !rhs.is_zero()) {
                    sum += lhs * rhs;
                }
            }
            r(i, j) = std::move(sum);
        }
    }
    return r;
}

Matrix3 operator*(const MultiPoly& c, const Matrix3& m)
{
    Matrix3 r;
    for (int i = 0; i < 9; ++i) {
        r.entries_[i] = c * m.entries_[i];
    }
    return r;
}

Matrix3 Matrix3::subst(const Substitution& assignment) const
{
    Matrix3 r;
    for (int i = 0; i < 9; ++i) {
        r.entries_[i] = c32::subst(entries_[i], assignment);
    }
    return r;
}

namespace {

constexpr std::array<VarId, 8> kTracelessY = {vars::y(1, 1), vars::y(1, 2), vars::y(1, 3), vars::y(2, 1),
                                              vars::y(2, 2), vars::y(2, 3), vars::y(3, 1), vars::y(3, 2)};
constexpr std::array<VarId, 8> kTracelessX = {vars::x(1, 1), vars::x(1, 2), vars::x(1, 3), vars::x(2, 1),
                                              vars::x(2, 2), vars::x(2, 3), vars::x(3, 1), vars::x(3, 2)};
constexpr std::array<VarId, 2> kDiagonalX = {vars::x1, vars::x2};

template <typename VarOf>
Matrix3 traceless_from(VarOf var)
{
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != 2 || j != 2) {
                m(i, j) = MultiPoly::variable(var(i + 1, j + 1));
            }
        }
    }
    m(2, 2) = -(m(0, 0) + m(1, 1));
    return m;
}

}  // namespace

Matrix3 generic_traceless_y()
{
    return traceless_from(vars::y);
}

Matrix3 generic_traceless_x()
{
    return traceless_from(vars::x);
}

Matrix3 diagonal_traceless_x()
{
    Matrix3 m;
    m(0, 0) = MultiPoly::variable(vars::x1);
    m(1, 1) = MultiPoly::variable(vars::x2);
    m(2, 2) = -(m(0, 0) + m(1, 1));
    return m;
}

Matrix3 generic_z()
{
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = MultiPoly::variable(vars::z(i + 1, j + 1));
        }
    }
    return m;
}

std::span<const VarId> traceless_y_vars()
{
    return kTracelessY;
}

std::span<const VarId> traceless_x_vars()
{
    return kTracelessX;
}

std::span<const VarId> diagonal_x_vars()
{
    return kDiagonalX;
}

MultiPoly trace_word(std::span<const Matrix3* const> word)
{
    if (word.empty()) {
        throw std::invalid_argument("trace_word: empty word");
    }
    if (word.size() == 1) {
        return word[0]->trace();
    }
    // Only the diagonal of the last product is needed.
    Matrix3 prefix = *word[0];
    for (std::size_t i = 1; i + 1 < word.size(); ++i) {
        prefix = prefix * *word[i];
    }
    const Matrix3& last = *word.back();
    MultiPoly tr;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            if (!prefix(i, k).is_zero() && !last(k, i).is_zero()) {
                tr += prefix(i, k) * last(k, i);
            }
        }
    }
    return tr;
}

ElementarySymmetric newton_elementary(const MultiPoly& p1, const MultiPoly& p2, const MultiPoly& p3)
{
    ElementarySymmetric e;
    e.e1 = p1;
    e.e2 = Rational(1, 2) * (p1 * p1 - p2);
    e.e3 = Rational(1, 6) * (2 * p3 - 3 * p1 * p2 + pow(p1, 3));
    return e;
}

Matrix3 cayley_hamilton_residual(const Matrix3& z)
{
    const Matrix3 z2 = z * z;
    const Matrix3 z3 = z2 * z;
    const auto e = newton_elementary(z.trace(), z2.trace(), z3.trace());
    return z3 - e.e1 * z2 + e.e2 * z - e.e3 * Matrix3::identity();
}

MultiPoly ch_traceless_identity(const Matrix3& z)
{
    if (!z.trace().is_zero()) {
        throw std::invalid_argument("ch_traceless_identity: matrix is not traceless");
    }
    const Matrix3 z2 = z * z;
    const MultiPoly tr2 = z2.trace();
    return (z2 * z2).trace() - Rational(1, 2) * tr2 * tr2;
}

}  // namespace c32
