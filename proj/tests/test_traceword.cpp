#include <doctest.h>

#include <set>
#include <stdexcept>

#include "c32/invariants.hpp"
#include "c32/trace_word.hpp"
#include "oracles.hpp"

using namespace c32;
using namespace c32::oracle;

TEST_CASE("canonical rotation")
{
    CHECK(canonical_rotation("YXX") == "XXY");
    CHECK(canonical_rotation("YYXXYX") == "XXYXYY");
    CHECK(canonical_rotation("XYXY") == "XYXY");
    CHECK_THROWS_AS(canonical_rotation(""), std::invalid_argument);
    CHECK_THROWS_AS(canonical_rotation("XZ"), std::invalid_argument);
    CHECK(TraceWord("YXY") == TraceWord("YYX"));
    CHECK(TraceWord("XYY").to_string() == "tr(XYY)");
}

TEST_CASE("necklace counts match the counting formula and brute force")
{
    CHECK(enumerate_basis(2).size() == 3);
    CHECK(enumerate_basis(3).size() == 4);
    CHECK(enumerate_basis(4).size() == 6);
    CHECK(enumerate_basis(6).size() == 14);
    for (unsigned k = 1; k <= 12; ++k) {
        const auto basis = enumerate_basis(k);
        CHECK(basis.size() == necklace_count(k));
        std::set<std::string> got;
        for (const auto& w : basis) {
            got.insert(w.letters());
        }
        CHECK(got == brute_necklaces(k));
    }
    CHECK_THROWS(enumerate_basis(std::size_t{0}));
}

TEST_CASE("bidegree slices of the necklace basis")
{
    const auto b33 = enumerate_basis(3, 3);
    REQUIRE(b33.size() == 4);
    CHECK(b33[0].to_string() == "tr(XXXYYY)");
    CHECK(b33[3].to_string() == "tr(XYXYXY)");
    CHECK(enumerate_basis(2, 2).size() == 2);
    CHECK(enumerate_basis(4, 2).size() == 3);
    CHECK(enumerate_basis(5, 1).size() == 1);
    std::size_t total = 0;
    for (unsigned i = 0; i <= 6; ++i) {
        total += enumerate_basis(i, 6 - i).size();
    }
    CHECK(total == 14);
}

TEST_CASE("formal combinations parse and print")
{
    const auto c = FormalTraceCombo::parse("2*tr(XXY) - tr(YX)*tr(X) + 1/2*tr(YXX)");
    CHECK(c.coeff_of({TraceWord("XXY")}) == Rational(5, 2));
    CHECK(c.coeff_of({TraceWord("X"), TraceWord("XY")}) == Rational(-1));
    CHECK(FormalTraceCombo::parse(c.to_string()) == c);
    CHECK((c - c).is_zero());
    const auto sq = FormalTraceCombo(TraceWord("X")) * FormalTraceCombo(TraceWord("X"));
    CHECK(sq.coeff_of({TraceWord("X"), TraceWord("X")}) == Rational(1));
}

TEST_CASE("linearization on single words")
{
    CHECK(linearize(FormalTraceCombo(TraceWord("XXYY"))) == FormalTraceCombo::parse("2*tr(XXXY)"));
    CHECK(linearize(FormalTraceCombo(TraceWord("XXX"))).is_zero());
    CHECK(linearize(FormalTraceCombo(TraceWord("XYXYXY"))) == FormalTraceCombo::parse("3*tr(XXXYXY)"));
    // Leibniz on products
    const auto p = FormalTraceCombo::parse("tr(Y)*tr(XY)");
    CHECK(linearize(p) == FormalTraceCombo::parse("tr(X)*tr(XY) + tr(Y)*tr(XX)"));
}

TEST_CASE("formal linearization commutes with the evaluated derivation")
{
    const InvariantContext ctx;
    for (unsigned k = 1; k <= 6; ++k) {
        for (const auto& w : all_words(k)) {
            const FormalTraceCombo c{TraceWord(w)};
            CHECK(ctx.evaluate(linearize(c)) == delta(ctx, ctx.tr(w)));
        }
    }
    const auto prod = FormalTraceCombo::parse("tr(XYY)*tr(YY) - 3*tr(XXYY)*tr(Y)");
    CHECK(ctx.evaluate(linearize(prod)) == delta(ctx, ctx.evaluate(prod)));
}

TEST_CASE("highest weight vectors")
{
    const auto s33 = hwv_solve(3, 3);
    CHECK(s33.candidates.size() == 4);
    REQUIRE(s33.basis.size() == 1);
    // proportional to tr(X^2 Y^2 X Y) - tr(Y^2 X^2 Y X)
    const auto w = FormalTraceCombo::parse("tr(XXYYXY) - tr(YYXXYX)");
    CHECK(s33.basis.front() == Rational(-1) * w);
    CHECK(linearize(w).is_zero());

    const auto s22 = hwv_solve(2, 2);
    REQUIRE(s22.basis.size() == 1);
    CHECK(s22.basis.front() == FormalTraceCombo::parse("tr(XXYY) - tr(XYXY)"));

    // only powers of x survive in bidegree (k, 0)
    CHECK(hwv_solve(4, 0).basis.size() == 1);
    CHECK(hwv_solve(2, 1).basis.empty());
}
