#include <doctest.h>

#include <random>
#include <stdexcept>

#include "c32/linalg.hpp"
#include "test_support.hpp"
#include "oracles.hpp"

using namespace c32;
using oracle::cofactor_det;
using oracle::cofactor_solve;

namespace {

LinearSystem make_system(const RationalMatrix& a, const RationalVector& b)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.front().size(); ++i) {
        labels.push_back("u" + std::to_string(i + 1));
    }
    LinearSystem sys(labels);
    for (std::size_t r = 0; r < a.size(); ++r) {
        sys.add_row(a[r], b[r]);
    }
    return sys;
}

}  // namespace

TEST_CASE("solver agrees with the cofactor inverse on random invertible systems")
{
    std::mt19937 rng(4242);
    for (std::size_t n = 1; n <= 6; ++n) {
        int done = 0;
        while (done < 8) {
            RationalMatrix a(n, RationalVector(n));
            RationalVector b(n);
            for (auto& row : a) {
                for (auto& v : row) {
                    v = testing::random_rational(rng, 6);
                }
            }
            for (auto& v : b) {
                v = testing::random_rational(rng, 6);
            }
            if (cofactor_det(a).is_zero()) {
                continue;
            }
            const Solution s = solve_exact(make_system(a, b));
            REQUIRE(s.status == SolveStatus::unique);
            CHECK(s.particular == cofactor_solve(a, b));
            CHECK(s.null_basis.empty());
            ++done;
        }
    }
}

TEST_CASE("highest weight system for bidegree (3,3)")
{
    // 2e1 + e2 + e3 = 0, e1 + e2 + e3 + 3e4 = 0, e2 + e3 = 0
    LinearSystem sys({"eta1", "eta2", "eta3", "eta4"});
    sys.add_row({2, 1, 1, 0}, 0);
    sys.add_row({1, 1, 1, 3}, 0);
    sys.add_row({0, 1, 1, 0}, 0);
    const Solution s = solve_exact(sys);
    REQUIRE(s.status == SolveStatus::parametric);
    REQUIRE(s.null_basis.size() == 1);
    const auto& v = s.null_basis.front();
    CHECK(v[0].is_zero());
    CHECK(v[3].is_zero());
    CHECK(v[2] == -v[1]);
    CHECK_FALSE(v[1].is_zero());
}

TEST_CASE("trivial systems")
{
    LinearSystem id({"a", "b", "c"});
    id.add_row({1, 0, 0}, 0);
    id.add_row({0, 1, 0}, 0);
    id.add_row({0, 0, 1}, 0);
    const Solution s = solve_exact(id);
    CHECK(s.status == SolveStatus::unique);
    CHECK(s.particular == RationalVector{0, 0, 0});

    LinearSystem bad({"a"});
    bad.add_row({0}, 1);
    CHECK(solve_exact(bad).status == SolveStatus::inconsistent);

    LinearSystem clash({"a", "b"});
    clash.add_row({1, 1}, 1);
    clash.add_row({2, 2}, 3);
    CHECK(solve_exact(clash).status == SolveStatus::inconsistent);

    CHECK_THROWS_AS(id.add_row({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("parametric solutions satisfy the system")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        // 3 x 5 with a dependent row
        RationalMatrix a(2, RationalVector(5));
        for (auto& row : a) {
            for (auto& v : row) {
                v = testing::random_rational(rng);
            }
        }
        RationalVector third(5);
        for (std::size_t c = 0; c < 5; ++c) {
            third[c] = a[0][c] * Rational(2) - a[1][c];
        }
        a.push_back(third);
        RationalVector b = {Rational(1), Rational(-2)};
        b.push_back(b[0] * Rational(2) - b[1]);
        const Solution s = solve_exact(make_system(a, b));
        REQUIRE(s.status != SolveStatus::inconsistent);
        CHECK(s.pivot_columns.size() + s.free_columns.size() == 5);
        CHECK(rank(a) == s.pivot_columns.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
            Rational lhs;
            for (std::size_t c = 0; c < 5; ++c) {
                lhs += a[r][c] * s.particular[c];
            }
            CHECK(lhs == b[r]);
            for (const auto& nv : s.null_basis) {
                Rational z;
                for (std::size_t c = 0; c < 5; ++c) {
                    z += a[r][c] * nv[c];
                }
                CHECK(z.is_zero());
            }
        }
        CHECK(null_space(a, 5).size() == s.null_basis.size());
    }
}

TEST_CASE("reduced row echelon form")
{
    const RationalMatrix m = {{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
    const RationalMatrix r = reduced_row_echelon(m);
    CHECK(r == RationalMatrix{{1, 0, -1}, {0, 1, 2}});
    CHECK(rank(m) == 2);
}

TEST_CASE("system text form")
{
    LinearSystem sys({"a", "b"});
    sys.add_row({Rational(1, 2), -3}, Rational(7));
    CHECK(sys.to_string().find("= 7") != std::string::npos);
    CHECK(to_string(SolveStatus::parametric) == "parametric");
}
