#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c32/rational.hpp"
#include "c32/variables.hpp"

namespace c32 {

/// Exponent vector over the variable registry. Absent variables have exponent 0.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers);

    [[nodiscard]] unsigned exponent(VarId v) const { return exps_[v.index]; }
    void set_exponent(VarId v, unsigned e);
    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] unsigned degree_in(std::span<const VarId> group) const;
    [[nodiscard]] bool is_one() const;

    /// Calls f(VarId, exponent) for each variable with a positive exponent, in index order.
    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (exps_[i] != 0) {
                f(VarId{static_cast<std::uint8_t>(i)}, static_cast<unsigned>(exps_[i]));
            }
        }
    }

    /// "x1^2*y11"; "1" for the empty monomial.
    [[nodiscard]] std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical term order: graded lexicographic, lowest VarId strongest.
    /// Returns true when `a` is printed before `b`.
    friend bool graded_lex_before(const Monomial& a, const Monomial& b);

    [[nodiscard]] std::size_t hash() const;
    [[nodiscard]] const std::array<std::uint8_t, kMaxVars>& raw() const { return exps_; }

private:
    std::array<std::uint8_t, kMaxVars> exps_{};
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are unique, nonzero, and kept in canonical (graded lex) order, so two
/// polynomials are equal exactly when their term vectors are equal.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(VarId v);
    static MultiPoly term(const Rational& coeff, const Monomial& m);
    /// Builds from arbitrary (possibly repeated or zero) terms.
    static MultiPoly from_terms(std::vector<Term> terms);
    /// Inverse of to_string(). Throws std::invalid_argument on malformed input.
    static MultiPoly parse(std::string_view text);

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Maximum total degree; 0 for constants and for zero.
    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] Rational coeff_of(const Monomial& m) const;
    /// Constant term.
    [[nodiscard]] Rational constant_term() const { return coeff_of(Monomial{}); }

    [[nodiscard]] std::string to_string() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }
    template <std::integral I>
    friend MultiPoly operator*(I c, const MultiPoly& p) { return Rational(static_cast<long>(c)) * p; }
    template <std::integral I>
    friend MultiPoly operator*(const MultiPoly& p, I c) { return Rational(static_cast<long>(c)) * p; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Keeps only the terms whose monomial satisfies `keep`.
    [[nodiscard]] MultiPoly filter(const std::function<bool(const Monomial&)>& keep) const;

private:
    std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Formal partial derivative.
MultiPoly diff(const MultiPoly& p, VarId v);

using Substitution = std::map<VarId, MultiPoly>;

/// Simultaneous substitution. Variables absent from `assignment` pass through unchanged.
MultiPoly subst(const MultiPoly& p, const Substitution& assignment);

/// Sum of `images[v] * dp/dv` over the listed variables: the derivation of the
/// polynomial ring determined by its values on generators.
MultiPoly apply_derivation(const MultiPoly& p, const Substitution& images);

/// Bidegree of `p` with respect to two disjoint variable groups, if `p` is
/// nonzero and bihomogeneous.
std::optional<std::pair<unsigned, unsigned>> bidegree(const MultiPoly& p, std::span<const VarId> first,
                                                      std::span<const VarId> second);

}  // namespace c32
