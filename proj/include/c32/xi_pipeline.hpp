#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "c32/invariants.hpp"
#include "c32/linalg.hpp"
#include "c32/matrix.hpp"
#include "c32/poly.hpp"

namespace c32 {

/// sum_i coeffs[i] * xi_i + constant = 0, unknowns in family order.
struct XiEquation {
    XiVector coeffs{};
    Rational constant;
    /// Where the equation came from, e.g. "step 1, coefficient of x1^6".
    std::string source;

    [[nodiscard]] bool is_trivial() const;
    /// Scaled so that the first nonzero unknown coefficient is 1 (or the constant, if none).
    [[nodiscard]] XiEquation normalized() const;
    /// Same equation up to a nonzero scalar.
    [[nodiscard]] bool same_as(const XiEquation& o) const;
    /// "4 - 360*xi3pp = 0".
    [[nodiscard]] std::string to_string() const;
};

/// For each monomial m, the coefficient of m in w^2 - sum xi_i w_i.
std::vector<XiEquation> coefficient_equations(const MultiPoly& w, const Family& family,
                                              std::span<const Monomial> monomials, const std::string& step);

/// Merges equations equal after normalization and drops 0 = 0.
std::vector<XiEquation> deduplicate(const std::vector<XiEquation>& eqs);

LinearSystem to_system(const std::vector<XiEquation>& eqs);

/// Substitutes the unknowns fixed by `solution` (pivots whose row has no free
/// entries) into `eq`.
XiEquation substitute_determined(const XiEquation& eq, const Solution& solution);

/// Substitutes the general solution (particular + free parameters) into `eq`;
/// the result only involves the free unknowns.
XiEquation substitute_general(const XiEquation& eq, const Solution& solution);

/// Raised when an evaluation step yields an inconsistent system.
class PipelineError : public std::runtime_error {
public:
    PipelineError(const std::string& step, const std::string& what)
        : std::runtime_error(step + ": " + what), step_(step)
    {
    }
    [[nodiscard]] const std::string& step() const { return step_; }

private:
    std::string step_;
};

/// Evaluation matrices used by the pipeline.
Matrix3 circulant_y();           ///< rows (0 1 0), (0 0 1), (1 0 0)
Matrix3 step2_x();               ///< diag(1, -1, 0)
Matrix3 step2_y();               ///< diag(0, 1, -1)
Matrix3 symmetric_y();           ///< rows (0 1 0), (1 0 0), (0 0 0)

struct XiPipelineResult {
    std::vector<XiEquation> step1;             ///< x1^6 and x1^4 x2^2 with circulant y
    std::vector<XiEquation> step2;             ///< constant coefficient with the diagonal pair
    XiEquation step2_reduced;                  ///< step 2 after substituting step 1
    RationalMatrix step3_display;              ///< family coefficients of x1^i x2^(6-i), i = 6 .. 0
    std::vector<XiEquation> step3;             ///< deduplicated step-3 equations
    Solution after_step3;                      ///< general solution of steps 1-3
    std::vector<XiEquation> step4;             ///< the two named coefficients with generic y
    std::vector<XiEquation> step4_reduced;     ///< step 4 in the free unknowns only
    std::size_t discovery_equations = 0;       ///< distinct step-4 equations when discovering
    std::size_t discovery_rank = 0;
    XiVector xi{};
    std::vector<std::string> transcript;
};

/// Recovers the eight coefficients of the relation by evaluating it at the
/// four specializations. `generic` must have diagonal traceless x and generic
/// traceless y. With `discover`, every monomial of the generic evaluation is
/// also turned into an equation and checked against the solution.
XiPipelineResult xi_pipeline(const InvariantContext& generic, bool discover = false);

}  // namespace c32
