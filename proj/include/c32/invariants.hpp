#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "c32/matrix.hpp"
#include "c32/poly.hpp"
#include "c32/trace_word.hpp"

namespace c32 {

/// A pair of traceless matrices (x, y) and a cache of trace-word evaluations
/// keyed by the least rotation of the word.
///
/// Letters 'X' and 'Y' in words refer to x and y. Lookups are thread-safe.
class InvariantContext {
public:
    /// x diagonal traceless, y generic traceless.
    InvariantContext();
    InvariantContext(Matrix3 x, Matrix3 y);

    /// x generic traceless in x11 .. x32, y generic traceless.
    static InvariantContext generic();

    [[nodiscard]] const Matrix3& x() const { return x_; }
    [[nodiscard]] const Matrix3& y() const { return y_; }

    /// Evaluated trace of a word over {X, Y}.
    [[nodiscard]] MultiPoly tr(std::string_view word) const;
    [[nodiscard]] MultiPoly evaluate(const FormalTraceCombo& combo) const;

    /// True when y is literally generic_traceless_y(), so that delta applies.
    [[nodiscard]] bool y_is_generic() const { return y_is_generic_; }
    /// Variables of x that occur in its entries.
    [[nodiscard]] std::vector<VarId> x_vars() const;

    [[nodiscard]] std::size_t cache_size() const;

private:
    Matrix3 x_;
    Matrix3 y_;
    bool y_is_generic_ = false;
    mutable std::mutex mutex_;
    mutable std::map<std::string, MultiPoly, std::less<>> cache_;
};

/// Order used for every 8-element family below: w1, w2, w3', w3'', w4, w5, w6, w7.
inline constexpr std::size_t kFamilySize = 8;
using XiVector = std::array<Rational, kFamilySize>;
using Family = std::array<MultiPoly, kFamilySize>;

/// "xi1", "xi2", "xi3p", "xi3pp", "xi4", "xi5", "xi6", "xi7".
const std::array<std::string, kFamilySize>& xi_labels();
/// "w1", "w2", "w3p", "w3pp", "w4", "w5", "w6", "w7".
const std::array<std::string, kFamilySize>& family_labels();

/// (1/27, -2/9, 4/15, 1/90, 1/3, -2/3, -1/3, -4/27).
XiVector published_xi();

/// tr(x^2 y^2) - tr(xyxy).
MultiPoly build_v(const InvariantContext& ctx);
/// tr(x^2 y^2 xy) - tr(y^2 x^2 yx).
MultiPoly build_w(const InvariantContext& ctx);
/// tr(x^2) tr(y^2) - tr(xy)^2.
MultiPoly build_u(const InvariantContext& ctx);

/// The 3x3 determinant shared by w5 and w3'.
MultiPoly cubic_determinant(const InvariantContext& ctx);

MultiPoly build_w1(const InvariantContext& ctx);
MultiPoly build_w2(const InvariantContext& ctx);
MultiPoly build_w3p(const InvariantContext& ctx);
/// Expanded form of w3'' as a polynomial in the traces.
MultiPoly build_w3pp_explicit(const InvariantContext& ctx);
MultiPoly build_w4(const InvariantContext& ctx);
MultiPoly build_w5(const InvariantContext& ctx);
MultiPoly build_w6(const InvariantContext& ctx);
MultiPoly build_w7(const InvariantContext& ctx);

Family build_family(const InvariantContext& ctx);

/// The derivation sending x to 0 and y to x, applied through the free entries
/// of the generic traceless y. Throws std::logic_error unless ctx.y_is_generic().
MultiPoly delta(const InvariantContext& ctx, const MultiPoly& p);

/// (1/144) * sum_i (-1)^i delta^i(tr(y^2)^3) delta^(6-i)(tr(y^3)^2).
MultiPoly build_w3pp_via_delta(const InvariantContext& ctx);

struct TraceExpansionResiduals {
    MultiPoly residual_xxyy;  ///< tr(x^2y^2) minus its expression through v and the traces.
    MultiPoly residual_xxyyxy;  ///< tr(x^2y^2xy) minus its expression through w, v and the traces.
};

TraceExpansionResiduals verify_trace_expansions(const InvariantContext& ctx);

/// w^2 - sum xi_i w_i.
MultiPoly relation_polynomial(const InvariantContext& ctx, const XiVector& xi);
MultiPoly relation_polynomial(const MultiPoly& w, const Family& family, const XiVector& xi);

}  // namespace c32
