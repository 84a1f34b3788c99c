#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "c32/rational.hpp"

namespace c32 {

/// Label (first, second) of the irreducible polynomial GL2-module, first >= second >= 0.
struct Partition2 {
    unsigned first = 0;
    unsigned second = 0;

    Partition2() = default;
    /// Throws std::invalid_argument if first < second.
    Partition2(unsigned first, unsigned second);

    [[nodiscard]] unsigned size() const { return first + second; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition2&, const Partition2&) = default;
    friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

inline constexpr unsigned kDefaultSeriesBound = 16;

/// Power series in t1, t2 truncated above total degree `bound`.
class TruncatedSeries {
public:
    using Key = std::pair<unsigned, unsigned>;

    explicit TruncatedSeries(unsigned bound = kDefaultSeriesBound) : bound_(bound) {}

    static TruncatedSeries one(unsigned bound);
    /// c * t1^i t2^j, or zero when i + j exceeds the bound.
    static TruncatedSeries monomial(unsigned i, unsigned j, const Rational& c, unsigned bound);
    /// Sum over k >= 0 of t1^(k*a) t2^(k*b). Throws std::invalid_argument for (0, 0).
    static TruncatedSeries geometric(unsigned a, unsigned b, unsigned bound);

    [[nodiscard]] unsigned bound() const { return bound_; }
    [[nodiscard]] const std::map<Key, Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(unsigned i, unsigned j) const;
    void add(unsigned i, unsigned j, const Rational& c);

    /// Homogeneous component of total degree k.
    [[nodiscard]] TruncatedSeries slice(unsigned k) const;
    /// Same series re-truncated at a lower bound.
    [[nodiscard]] TruncatedSeries truncate(unsigned bound) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

    /// Coefficient-wise equality; bounds must agree.
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// One "(i,j): c" line per nonzero coefficient, sorted by (i, j).
    [[nodiscard]] std::string to_string() const;

private:
    unsigned bound_;
    std::map<Key, Rational> coeffs_;
};

/// Multiplicities of irreducible GL2-modules.
class Decomposition {
public:
    Decomposition() = default;
    Decomposition(std::initializer_list<std::pair<const Partition2, std::uint64_t>> items);

    [[nodiscard]] const std::map<Partition2, std::uint64_t>& multiplicities() const { return mult_; }
    [[nodiscard]] std::uint64_t multiplicity(const Partition2& p) const;
    void add(const Partition2& p, std::uint64_t m);
    /// Keeps only the partitions of the given size.
    [[nodiscard]] Decomposition of_size(unsigned size) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

    /// One "(a,b): m" line per nonzero multiplicity, sorted.
    [[nodiscard]] std::string to_string() const;

private:
    std::map<Partition2, std::uint64_t> mult_;
};

/// S_(a+b,b) = (t1 t2)^b (t1^a + t1^(a-1) t2 + ... + t2^a), truncated.
TruncatedSeries schur(const Partition2& p, unsigned bound);

/// Character of a decomposition: sum of m(p) * schur(p).
TruncatedSeries character(const Decomposition& d, unsigned bound);

struct DenominatorFactor {
    unsigned a = 0;  ///< exponent of t1
    unsigned b = 0;  ///< exponent of t2

    friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// numerator / prod (1 - t1^a t2^b), expanded by series division against the
/// multiplied-out denominator. Throws std::invalid_argument for a (0, 0) factor.
TruncatedSeries expand_rational(const TruncatedSeries& numerator, std::span<const DenominatorFactor> factors,
                                unsigned bound);

/// m(a,b) = c(a,b) - c(a+1,b-1) over the truncated range. Throws
/// std::domain_error if the series is not the character of a polynomial
/// GL2-module (negative or fractional multiplicity, or reconstruction mismatch).
Decomposition extract_multiplicities(const TruncatedSeries& s);

/// Tensor product decomposition by the GL2 Littlewood-Richardson rule.
Decomposition lr_tensor(const Partition2& p, const Partition2& q);

// ------------------------------------------------------ Hilbert series

/// Denominator factors of the Hilbert series of the invariants of two 3x3 matrices.
std::vector<DenominatorFactor> c32_denominator();

/// (1 + t1^3 t2^3) / [(1-t1)(1-t2) q2 q3 (1-t1^2 t2^2)] with the given factors.
TruncatedSeries c32_series(unsigned bound, std::span<const DenominatorFactor> factors);
TruncatedSeries c32_series(unsigned bound);

/// Symmetric algebras on W2(2) = span{tr x^2, tr xy, tr y^2}, W2(3) = span of the
/// four cubic traces, and W2(2,2) = span{v}.
TruncatedSeries sym_w2_series(unsigned bound);
TruncatedSeries sym_w3_series(unsigned bound);
TruncatedSeries sym_w22_series(unsigned bound);

/// The algebra S generated by the eight elements of degree <= 4 (product of the three above).
TruncatedSeries s_algebra_series(unsigned bound);

/// Free module over S[tr X, tr Y] with basis {1, w}, built from generator degrees.
TruncatedSeries free_module_series(unsigned bound);

/// Bigraded dimension series of the span of formal trace words of length k.
TruncatedSeries trace_space_series(unsigned k, unsigned bound);

struct ComponentMultiplicity {
    unsigned w2_degree;   ///< degree taken from K[W2(2)]
    unsigned w3_degree;   ///< degree taken from K[W2(3)]
    unsigned w22_degree;  ///< degree taken from K[W2(2,2)]
    std::uint64_t multiplicity;
};

/// Multiplicity of `target` in each tensor component of S of total degree target.size().
std::vector<ComponentMultiplicity> s_component_multiplicities(const Partition2& target);

struct SeriesIdentityCheck {
    bool series_equal = false;
    /// First (i,j) where the two series differ, if any.
    std::optional<TruncatedSeries::Key> first_mismatch;
    Decomposition s_degree6;
    std::uint64_t m33 = 0;
    std::uint64_t m66 = 0;
    bool s_degree6_matches = false;

    [[nodiscard]] bool passed() const { return series_equal && s_degree6_matches && m33 == 0 && m66 == 8; }
};

/// Compares the invariant-algebra series with the free-module series up to `bound`
/// and checks the degree-6 and degree-12 multiplicities of S. `factors`
/// replaces the invariant-algebra denominator (used for negative controls).
SeriesIdentityCheck verify_series_identity(unsigned bound);
SeriesIdentityCheck verify_series_identity(unsigned bound, std::span<const DenominatorFactor> factors);

}  // namespace c32
