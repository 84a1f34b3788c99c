#pragma once

#include <array>
#include <span>
#include <string>

#include "c32/poly.hpp"

namespace c32 {

/// 3x3 matrix with polynomial entries. Rows and columns are 0-based here.
class Matrix3 {
public:
    Matrix3() = default;

    static Matrix3 identity();
    /// Integer matrix given in row-major order.
    static Matrix3 from_ints(const std::array<long, 9>& row_major);

    [[nodiscard]] const MultiPoly& operator()(int row, int col) const { return entries_[index(row, col)]; }
    [[nodiscard]] MultiPoly& operator()(int row, int col) { return entries_[index(row, col)]; }

    [[nodiscard]] MultiPoly trace() const;
    [[nodiscard]] bool is_zero() const;

    friend Matrix3 operator+(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator-(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator*(const MultiPoly& c, const Matrix3& m);
    friend bool operator==(const Matrix3&, const Matrix3&) = default;

    /// Entry-wise substitution.
    [[nodiscard]] Matrix3 subst(const Substitution& assignment) const;

private:
    static constexpr int index(int row, int col) { return 3 * row + col; }
    std::array<MultiPoly, 9> entries_;
};

/// Traceless y: free entries y11 .. y32, entry (3,3) = -(y11 + y22).
Matrix3 generic_traceless_y();
/// Traceless x with free entries x11 .. x32 and entry (3,3) = -(x11 + x22).
Matrix3 generic_traceless_x();
/// diag(x1, x2, -(x1 + x2)).
Matrix3 diagonal_traceless_x();
/// Fully generic matrix in z11 .. z33.
Matrix3 generic_z();

/// The eight free entries of generic_traceless_y(), in row-major order.
std::span<const VarId> traceless_y_vars();
/// The eight free entries of generic_traceless_x(), in row-major order.
std::span<const VarId> traceless_x_vars();
/// {x1, x2}.
std::span<const VarId> diagonal_x_vars();

/// Trace of the ordered product of `word`. Throws std::invalid_argument on an empty word.
MultiPoly trace_word(std::span<const Matrix3* const> word);

struct ElementarySymmetric {
    MultiPoly e1;
    MultiPoly e2;
    MultiPoly e3;
};

/// e1, e2, e3 of three (virtual) eigenvalues from the power sums p1, p2, p3.
ElementarySymmetric newton_elementary(const MultiPoly& p1, const MultiPoly& p2, const MultiPoly& p3);

/// z^3 - e1 z^2 + e2 z - e3 I with the e_i taken from the traces of z, z^2, z^3.
Matrix3 cayley_hamilton_residual(const Matrix3& z);

/// tr(z^4) - tr(z^2)^2 / 2. Throws std::invalid_argument unless tr(z) is zero.
MultiPoly ch_traceless_identity(const Matrix3& z);

}  // namespace c32
