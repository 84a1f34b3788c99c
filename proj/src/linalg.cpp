#include "c32/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace c32 {

void LinearSystem::add_row(RationalVector coeffs, Rational rhs)
{
    if (coeffs.size() != labels_.size()) {
        throw std::invalid_argument("LinearSystem: row width " + std::to_string(coeffs.size()) + " != "
                                    + std::to_string(labels_.size()));
    }
    coeffs_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
}

std::string LinearSystem::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        bool first = true;
        for (std::size_t c = 0; c < labels_.size(); ++c) {
            const Rational& a = coeffs_[r][c];
            if (a.is_zero()) {
                continue;
            }
            if (first) {
                os << (a.sign() < 0 ? "-" : "");
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
            }
            first = false;
            if (!abs(a).is_one()) {
                os << abs(a) << '*';
            }
            os << labels_[c];
        }
        if (first) {
            os << '0';
        }
        os << " = " << rhs_[r] << '\n';
    }
    return os.str();
}

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::inconsistent:
        return "inconsistent";
    case SolveStatus::unique:
        return "unique";
    case SolveStatus::parametric:
        return "parametric";
    }
    return "unknown";
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const RationalMatrix& rows)
{
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        mpz_class l = 1;
        for (const auto& a : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.gmp().get_den_mpz_t());
        }
        std::vector<mpz_class> ints;
        ints.reserve(row.size());
        for (const auto& a : row) {
            ints.push_back(a.gmp().get_num() * (l / a.gmp().get_den()));
        }
        out.push_back(std::move(ints));
    }
    return out;
}

/// Bareiss fraction-free forward elimination to row echelon form. Every
/// intermediate entry is a minor of the input, so each division is exact.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[r], m[p]);
        const mpz_class& pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = pivot * m[i][j] - m[i][c] * m[r][j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                    throw std::logic_error("bareiss_echelon: inexact division");
                }
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

struct Echelon {
    RationalMatrix rref;
    std::vector<std::size_t> pivots;
};

Echelon rref_with_pivots(const RationalMatrix& rows)
{
    IntMatrix ints = clear_denominators(rows);
    Echelon e;
    e.pivots = bareiss_echelon(ints);
    for (const auto& row : ints) {
        RationalVector q;
        q.reserve(row.size());
        for (const auto& a : row) {
            q.emplace_back(a);
        }
        e.rref.push_back(std::move(q));
    }
    // Normalize pivots to 1 and clear above, bottom-up.
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        auto& row = e.rref[k];
        const Rational inv = Rational(1) / row[e.pivots[k]];
        for (auto& a : row) {
            a *= inv;
        }
        for (std::size_t i = 0; i < k; ++i) {
            const Rational factor = e.rref[i][e.pivots[k]];
            if (factor.is_zero()) {
                continue;
            }
            for (std::size_t j = e.pivots[k]; j < row.size(); ++j) {
                e.rref[i][j] -= factor * row[j];
            }
        }
    }
    return e;
}

RationalMatrix null_basis_from(const Echelon& e, std::size_t columns, std::vector<std::size_t>* free_out)
{
    std::vector<bool> is_pivot(columns, false);
    for (std::size_t p : e.pivots) {
        if (p < columns) {
            is_pivot[p] = true;
        }
    }
    RationalMatrix basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        if (free_out != nullptr) {
            free_out->push_back(f);
        }
        RationalVector v(columns, Rational(0));
        v[f] = Rational(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            if (e.pivots[k] < columns) {
                v[e.pivots[k]] = -e.rref[k][f];
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RationalMatrix reduced_row_echelon(const RationalMatrix& rows)
{
    return rref_with_pivots(rows).rref;
}

std::size_t rank(const RationalMatrix& rows)
{
    IntMatrix ints = clear_denominators(rows);
    return bareiss_echelon(ints).size();
}

RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns)
{
    for (const auto& row : rows) {
        if (row.size() != columns) {
            throw std::invalid_argument("null_space: ragged matrix");
        }
    }
    return null_basis_from(rref_with_pivots(rows), columns, nullptr);
}

Solution solve_exact(const LinearSystem& system)
{
    const std::size_t n = system.width();
    RationalMatrix augmented;
    augmented.reserve(system.rows());
    for (std::size_t r = 0; r < system.rows(); ++r) {
        RationalVector row = system.coefficients()[r];
        row.push_back(system.rhs()[r]);
        augmented.push_back(std::move(row));
    }

    Solution s;
    if (augmented.empty()) {
        s.status = n == 0 ? SolveStatus::unique : SolveStatus::parametric;
        s.particular.assign(n, Rational(0));
        for (std::size_t f = 0; f < n; ++f) {
            RationalVector v(n, Rational(0));
            v[f] = Rational(1);
            s.null_basis.push_back(std::move(v));
            s.free_columns.push_back(f);
        }
        return s;
    }

    Echelon e = rref_with_pivots(augmented);
    s.rref = e.rref;
    if (!e.pivots.empty() && e.pivots.back() == n) {
        s.status = SolveStatus::inconsistent;
        e.pivots.pop_back();
        s.pivot_columns = e.pivots;
        return s;
    }
    s.pivot_columns = e.pivots;
    s.particular.assign(n, Rational(0));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        s.particular[e.pivots[k]] = e.rref[k][n];
    }
    s.null_basis = null_basis_from(e, n, &s.free_columns);
    s.status = s.null_basis.empty() ? SolveStatus::unique : SolveStatus::parametric;
    return s;
}

}  // namespace c32
