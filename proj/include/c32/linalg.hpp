#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "c32/rational.hpp"

namespace c32 {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Rows of the form  coeffs · unknowns = rhs.
class LinearSystem {
public:
    explicit LinearSystem(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    /// Throws std::invalid_argument if the row width does not match the labels.
    void add_row(RationalVector coeffs, Rational rhs);

    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::size_t width() const { return labels_.size(); }
    [[nodiscard]] std::size_t rows() const { return coeffs_.size(); }
    [[nodiscard]] const RationalMatrix& coefficients() const { return coeffs_; }
    [[nodiscard]] const RationalVector& rhs() const { return rhs_; }

    /// One line per row, "a*label + ... = rhs".
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<std::string> labels_;
    RationalMatrix coeffs_;
    RationalVector rhs_;
};

enum class SolveStatus { inconsistent, unique, parametric };

std::string to_string(SolveStatus s);

struct Solution {
    SolveStatus status = SolveStatus::inconsistent;
    /// Free unknowns set to zero. Empty when inconsistent.
    RationalVector particular;
    /// One vector per free column, with a 1 in that column.
    RationalMatrix null_basis;
    std::vector<std::size_t> pivot_columns;
    std::vector<std::size_t> free_columns;
    /// Reduced row echelon form of [A | b], zero rows dropped.
    RationalMatrix rref;
};

/// Exact solve. Forward elimination is fraction-free (Bareiss) over integers after
/// clearing row denominators; pivots are the first nonzero entry in column order.
Solution solve_exact(const LinearSystem& system);

/// Reduced row echelon form of `rows` (all of equal width), zero rows dropped.
RationalMatrix reduced_row_echelon(const RationalMatrix& rows);

std::size_t rank(const RationalMatrix& rows);

/// Basis of { v : rows · v = 0 } for a matrix with `columns` columns.
RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns);

}  // namespace c32
