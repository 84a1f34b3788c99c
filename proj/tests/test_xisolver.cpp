#include <doctest.h>

#include "c32/xi_pipeline.hpp"

using namespace c32;

namespace {

// sum coeffs * xi + constant = 0 with coefficients listed in family order.
XiEquation eq(std::array<Rational, kFamilySize> coeffs, Rational constant)
{
    XiEquation e;
    e.coeffs = coeffs;
    e.constant = constant;
    return e;
}

const XiPipelineResult& pipeline()
{
    static const XiPipelineResult r = [] {
        const InvariantContext ctx;
        return xi_pipeline(ctx, true);
    }();
    return r;
}

}  // namespace

TEST_CASE("equation helpers")
{
    const XiEquation a = eq({2, 0, 0, 0, 0, 0, 0, 4}, 6);
    const XiEquation b = eq({-1, 0, 0, 0, 0, 0, 0, -2}, -3);
    CHECK(a.same_as(b));
    CHECK(a.normalized().coeffs[0] == Rational(1));
    CHECK(a.to_string() == "6 + 2*xi1 + 4*xi7 = 0");
    CHECK(eq({}, 0).is_trivial());
    CHECK(eq({}, 0).to_string() == "0 = 0");
    const auto dedup = deduplicate({a, b, eq({}, 0), eq({0, 1, 0, 0, 0, 0, 0, 0}, 1)});
    CHECK(dedup.size() == 2);
}

TEST_CASE("step 1: cyclic permutation")
{
    const auto& s1 = pipeline().step1;
    REQUIRE(s1.size() == 2);
    // 4 - 360 xi3'' = 0 and -3 - (2160 xi3'' + 81 xi6) = 0, exactly as stated
    CHECK(s1[0].coeffs == eq({0, 0, 0, -360, 0, 0, 0, 0}, 4).coeffs);
    CHECK(s1[0].constant == Rational(4));
    CHECK(s1[1].coeffs == eq({0, 0, 0, -2160, 0, 0, -81, 0}, -3).coeffs);
    CHECK(s1[1].constant == Rational(-3));
}

TEST_CASE("step 2: diagonal pair")
{
    const auto& r = pipeline();
    REQUIRE(r.step2.size() == 1);
    CHECK(r.step2.front().same_as(eq({27, 0, -9, 36, 0, 0, -3, 0}, 0)));
    // 27 xi1 - 9 xi3' = -7/5
    CHECK(r.step2_reduced.same_as(eq({27, 0, -9, 0, 0, 0, 0, 0}, Rational(7, 5))));
}

TEST_CASE("step 3: the seven displayed coefficients")
{
    const auto& d = pipeline().step3_display;
    REQUIRE(d.size() == 7);
    const RationalMatrix expected = {
        {64, 16, -8, 72, 4, -2, 0, 1},
        {192, 0, -56, 144, -12, -8, -12, -6},
        {384, 0, -136, 504, 12, 2, -48, 15},
        {448, -32, -176, 864, -8, 16, -72, -20},
        {384, 0, -136, 504, 12, 2, -48, 15},
        {192, 0, -56, 144, -12, -8, -12, -6},
        {64, 16, -8, 72, 4, -2, 0, 1},
    };
    CHECK(d == expected);
    CHECK(pipeline().step3.size() == 4);
}

TEST_CASE("after step 3 the solution is a two-parameter family")
{
    const Solution& s = pipeline().after_step3;
    REQUIRE(s.status == SolveStatus::parametric);
    CHECK(s.free_columns == std::vector<std::size_t>{4, 7});
    // xi_p = rref[k][8] - sum_f rref[k][f] xi_f
    const auto value = [&](std::size_t col) {
        for (std::size_t k = 0; k < s.pivot_columns.size(); ++k) {
            if (s.pivot_columns[k] == col) {
                return std::array<Rational, 3>{s.rref[k][8], -s.rref[k][4], -s.rref[k][7]};
            }
        }
        FAIL("column is not a pivot");
        return std::array<Rational, 3>{};
    };
    CHECK(value(0) == std::array<Rational, 3>{Rational(-1, 54), Rational(1, 2), Rational(3, 4)});
    CHECK(value(1) == std::array<Rational, 3>{Rational(1, 54), Rational(-3, 2), Rational(-7, 4)});
    CHECK(value(2) == std::array<Rational, 3>{Rational(1, 10), Rational(3, 2), Rational(9, 4)});
    CHECK(value(5) == std::array<Rational, 3>{Rational(-4, 9), 0, Rational(3, 2)});
    CHECK(value(3) == std::array<Rational, 3>{Rational(1, 90), 0, 0});
    CHECK(value(6) == std::array<Rational, 3>{Rational(-1, 3), 0, 0});
}

TEST_CASE("step 4: generic y")
{
    const auto& r = pipeline();
    REQUIRE(r.step4_reduced.size() == 2);
    CHECK(r.step4_reduced[0].same_as(eq({0, 0, 0, 0, -27, 0, 0, Rational(-81, 2)}, 3)));
    CHECK(r.step4_reduced[1].same_as(eq({0, 0, 0, 0, 36, 0, 0, 90}, Rational(4, 3))));
}

TEST_CASE("final solution and closing the loop")
{
    const auto& r = pipeline();
    CHECK(r.xi == published_xi());
    const InvariantContext ctx;
    CHECK(relation_polynomial(ctx, r.xi).is_zero());
    CHECK(r.discovery_rank == 8);
    CHECK(r.discovery_equations >= 8);
    CHECK(r.transcript.back() == "solution: xi1=1/27 xi2=-2/9 xi3p=4/15 xi3pp=1/90 xi4=1/3 xi5=-2/3 xi6=-1/3 xi7=-4/27");
}

TEST_CASE("substitution helpers")
{
    LinearSystem sys(std::vector<std::string>(xi_labels().begin(), xi_labels().end()));
    sys.add_row({1, 0, 0, 0, 0, 0, 0, 0}, 2);      // xi1 = 2
    sys.add_row({0, 1, 0, 0, 0, 0, 0, 1}, 3);      // xi2 + xi7 = 3
    const Solution s = solve_exact(sys);
    const XiEquation e = eq({1, 1, 0, 0, 0, 0, 0, 0}, 0);
    const XiEquation det = substitute_determined(e, s);
    CHECK(det.coeffs == eq({0, 1, 0, 0, 0, 0, 0, 0}, 0).coeffs);
    CHECK(det.constant == Rational(2));
    const XiEquation gen = substitute_general(e, s);
    CHECK(gen.coeffs == eq({0, 0, 0, 0, 0, 0, 0, -1}, 0).coeffs);
    CHECK(gen.constant == Rational(5));
}
