#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "c32/rational.hpp"

namespace c32 {

/// Least rotation of a nonempty word over {X, Y} (X < Y).
/// Throws std::invalid_argument on an empty word or a letter outside {X, Y}.
std::string canonical_rotation(std::string_view word);

/// A cyclic class of words over {X, Y}, stored as its least rotation.
class TraceWord {
public:
    explicit TraceWord(std::string_view word) : letters_(canonical_rotation(word)) {}

    [[nodiscard]] const std::string& letters() const { return letters_; }
    [[nodiscard]] std::size_t length() const { return letters_.size(); }
    [[nodiscard]] unsigned x_degree() const;
    [[nodiscard]] unsigned y_degree() const;
    /// "tr(XXY)".
    [[nodiscard]] std::string to_string() const { return "tr(" + letters_ + ")"; }

    friend bool operator==(const TraceWord&, const TraceWord&) = default;
    friend auto operator<=>(const TraceWord&, const TraceWord&) = default;

private:
    std::string letters_;
};

/// All necklaces of length k, sorted. Requires k >= 1.
std::vector<TraceWord> enumerate_basis(std::size_t k);
/// Necklaces with the given numbers of X and Y letters, sorted.
std::vector<TraceWord> enumerate_basis(unsigned x_degree, unsigned y_degree);

/// A commutative product of trace words, kept sorted. Empty means 1.
using TraceProduct = std::vector<TraceWord>;

/// Formal linear combination of products of trace words.
class FormalTraceCombo {
public:
    FormalTraceCombo() = default;
    explicit FormalTraceCombo(const TraceWord& w, Rational coeff = Rational(1));
    FormalTraceCombo(TraceProduct product, Rational coeff);

    /// Parses "2*tr(XXY) - tr(XY)*tr(X)"; rotations are canonicalized.
    static FormalTraceCombo parse(std::string_view text);

    [[nodiscard]] const std::map<TraceProduct, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff_of(const TraceProduct& p) const;

    void add(const TraceProduct& product, const Rational& coeff);
    FormalTraceCombo& operator+=(const FormalTraceCombo& o);
    friend FormalTraceCombo operator+(FormalTraceCombo a, const FormalTraceCombo& b) { return a += b; }
    friend FormalTraceCombo operator-(FormalTraceCombo a, const FormalTraceCombo& b);
    friend FormalTraceCombo operator*(const Rational& c, const FormalTraceCombo& a);
    friend FormalTraceCombo operator*(const FormalTraceCombo& a, const FormalTraceCombo& b);
    friend bool operator==(const FormalTraceCombo&, const FormalTraceCombo&) = default;

    /// Exactpoly grammar with trace words as atoms, terms in sorted key order.
    [[nodiscard]] std::string to_string() const;

private:
    std::map<TraceProduct, Rational> terms_;
};

/// Partial linearization in Y evaluated at Z = X: every occurrence of Y is
/// replaced by X one at a time and the results summed, extended to products
/// as a derivation.
FormalTraceCombo linearize(const FormalTraceCombo& c);

struct HwvSearch {
    /// Candidate single trace words of the requested bidegree.
    std::vector<TraceWord> candidates;
    /// Images of the candidates under linearize, in candidate order.
    std::vector<FormalTraceCombo> images;
    /// Null-space basis, first nonzero coordinate normalized to 1.
    std::vector<FormalTraceCombo> basis;
};

/// Combinations of single trace words of bidegree (x_degree, y_degree)
/// annihilated by linearize.
HwvSearch hwv_solve(unsigned x_degree, unsigned y_degree);

}  // namespace c32
