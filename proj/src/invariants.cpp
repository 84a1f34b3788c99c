#include "c32/invariants.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace c32 {

InvariantContext::InvariantContext() : InvariantContext(diagonal_traceless_x(), generic_traceless_y()) {}

InvariantContext::InvariantContext(Matrix3 x, Matrix3 y)
    : x_(std::move(x)), y_(std::move(y)), y_is_generic_(y_ == generic_traceless_y())
{
}

InvariantContext InvariantContext::generic()
{
    return InvariantContext(generic_traceless_x(), generic_traceless_y());
}

MultiPoly InvariantContext::tr(std::string_view word) const
{
    const std::string key = canonical_rotation(word);
    {
        std::lock_guard lock(mutex_);
        if (const auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }
    std::vector<const Matrix3*> factors;
    factors.reserve(key.size());
    for (char ch : key) {
        factors.push_back(ch == 'X' ? &x_ : &y_);
    }
    MultiPoly value = trace_word(factors);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
}

MultiPoly InvariantContext::evaluate(const FormalTraceCombo& combo) const
{
    MultiPoly sum;
    for (const auto& [product, coeff] : combo.terms()) {
        MultiPoly term(coeff);
        for (const auto& w : product) {
            term *= tr(w.letters());
        }
        sum += term;
    }
    return sum;
}

std::vector<VarId> InvariantContext::x_vars() const
{
    std::set<VarId> seen;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (const auto& t : x_(i, j).terms()) {
                t.monomial.for_each([&](VarId v, unsigned) { seen.insert(v); });
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::size_t InvariantContext::cache_size() const
{
    std::lock_guard lock(mutex_);
    return cache_.size();
}

const std::array<std::string, kFamilySize>& xi_labels()
{
    static const std::array<std::string, kFamilySize> labels = {"xi1", "xi2", "xi3p", "xi3pp",
                                                                "xi4", "xi5", "xi6",  "xi7"};
    return labels;
}

const std::array<std::string, kFamilySize>& family_labels()
{
    static const std::array<std::string, kFamilySize> labels = {"w1", "w2", "w3p", "w3pp", "w4", "w5", "w6", "w7"};
    return labels;
}

XiVector published_xi()
{
    return {Rational(1, 27), Rational(-2, 9), Rational(4, 15), Rational(1, 90),
            Rational(1, 3),  Rational(-2, 3), Rational(-1, 3), Rational(-4, 27)};
}

namespace {

MultiPoly det2(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d)
{
    return a * d - b * c;
}

MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m)
{
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
         + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

}  // namespace

MultiPoly build_v(const InvariantContext& ctx)
{
    return ctx.tr("XXYY") - ctx.tr("XYXY");
}

MultiPoly build_w(const InvariantContext& ctx)
{
    return ctx.tr("XXYYXY") - ctx.tr("YYXXYX");
}

MultiPoly build_u(const InvariantContext& ctx)
{
    return det2(ctx.tr("XX"), ctx.tr("XY"), ctx.tr("XY"), ctx.tr("YY"));
}

MultiPoly cubic_determinant(const InvariantContext& ctx)
{
    return det3({{{ctx.tr("XX"), ctx.tr("XY"), ctx.tr("YY")},
                  {ctx.tr("XXX"), ctx.tr("XXY"), ctx.tr("XYY")},
                  {ctx.tr("XXY"), ctx.tr("XYY"), ctx.tr("YYY")}}});
}

MultiPoly build_w1(const InvariantContext& ctx)
{
    return pow(build_u(ctx), 3);
}

MultiPoly build_w2(const InvariantContext& ctx)
{
    return pow(build_u(ctx), 2) * build_v(ctx);
}

MultiPoly build_w3p(const InvariantContext& ctx)
{
    return build_u(ctx) * cubic_determinant(ctx);
}

MultiPoly build_w3pp_explicit(const InvariantContext& ctx)
{
    const MultiPoly x2 = ctx.tr("XX");
    const MultiPoly xy = ctx.tr("XY");
    const MultiPoly y2 = ctx.tr("YY");
    const MultiPoly x3 = ctx.tr("XXX");
    const MultiPoly x2y = ctx.tr("XXY");
    const MultiPoly xy2 = ctx.tr("XYY");
    const MultiPoly y3 = ctx.tr("YYY");

    MultiPoly r = 5 * (pow(y2, 3) * pow(x3, 2) + pow(x2, 3) * pow(y3, 2));
    r -= 30 * (pow(y2, 2) * xy * x2y * x3 + pow(x2, 2) * xy * y3 * xy2);
    r += 3 * ((4 * y2 * pow(xy, 2) + pow(y2, 2) * x2) * (3 * pow(x2y, 2) + 2 * xy2 * x3)
              + (4 * pow(xy, 2) * x2 + pow(x2, 2) * y2) * (3 * pow(xy2, 2) + 2 * x2y * y3));
    r -= 2 * (2 * pow(xy, 3) + 3 * x2 * xy * y2) * (9 * xy2 * x2y + x3 * y3);
    return r;
}

MultiPoly build_w4(const InvariantContext& ctx)
{
    return build_u(ctx) * pow(build_v(ctx), 2);
}

MultiPoly build_w5(const InvariantContext& ctx)
{
    return build_v(ctx) * cubic_determinant(ctx);
}

MultiPoly build_w6(const InvariantContext& ctx)
{
    const MultiPoly x3 = ctx.tr("XXX");
    const MultiPoly x2y = ctx.tr("XXY");
    const MultiPoly xy2 = ctx.tr("XYY");
    const MultiPoly y3 = ctx.tr("YYY");
    return pow(det2(x3, xy2, x2y, y3), 2) - 4 * det2(y3, xy2, xy2, x2y) * det2(x3, x2y, x2y, xy2);
}

MultiPoly build_w7(const InvariantContext& ctx)
{
    return pow(build_v(ctx), 3);
}

Family build_family(const InvariantContext& ctx)
{
    // Shared factors are computed once.
    const MultiPoly u = build_u(ctx);
    const MultiPoly v = build_v(ctx);
    const MultiPoly d = cubic_determinant(ctx);
    const MultiPoly u2 = u * u;
    const MultiPoly v2 = v * v;
    return {u2 * u, u2 * v, u * d, build_w3pp_explicit(ctx), u * v2, v * d, build_w6(ctx), v2 * v};
}

MultiPoly delta(const InvariantContext& ctx, const MultiPoly& p)
{
    if (!ctx.y_is_generic()) {
        throw std::logic_error("delta: y must be the generic traceless matrix");
    }
    Substitution images;
    for (VarId v : traceless_y_vars()) {
        const int idx = v.index - vars::y(1, 1).index;
        images.emplace(v, ctx.x()(idx / 3, idx % 3));
    }
    return apply_derivation(p, images);
}

MultiPoly build_w3pp_via_delta(const InvariantContext& ctx)
{
    const MultiPoly a = pow(ctx.tr("YY"), 3);
    const MultiPoly b = pow(ctx.tr("YYY"), 2);
    std::array<MultiPoly, 7> da;
    std::array<MultiPoly, 7> db;
    da[0] = a;
    db[0] = b;
    for (std::size_t i = 1; i < 7; ++i) {
        da[i] = delta(ctx, da[i - 1]);
        db[i] = delta(ctx, db[i - 1]);
    }
    MultiPoly sum;
    for (std::size_t i = 0; i <= 6; ++i) {
        const MultiPoly term = da[i] * db[6 - i];
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return Rational(1, 144) * sum;
}

TraceExpansionResiduals verify_trace_expansions(const InvariantContext& ctx)
{
    const MultiPoly x2 = ctx.tr("XX");
    const MultiPoly xy = ctx.tr("XY");
    const MultiPoly y2 = ctx.tr("YY");
    const MultiPoly v = build_v(ctx);
    const MultiPoly w = build_w(ctx);

    TraceExpansionResiduals r;
    r.residual_xxyy = ctx.tr("XXYY") - (Rational(1, 3) * v + Rational(1, 6) * x2 * y2 + Rational(1, 3) * xy * xy);
    r.residual_xxyyxy = ctx.tr("XXYYXY")
                - (Rational(1, 2) * w + Rational(1, 6) * xy * v + Rational(1, 12) * x2 * xy * y2
                   + Rational(1, 6) * pow(xy, 3) - Rational(1, 6) * ctx.tr("XXX") * ctx.tr("YYY")
                   + Rational(1, 2) * ctx.tr("XXY") * ctx.tr("XYY"));
    return r;
}

MultiPoly relation_polynomial(const MultiPoly& w, const Family& family, const XiVector& xi)
{
    MultiPoly f = w * w;
    for (std::size_t i = 0; i < kFamilySize; ++i) {
        if (!xi[i].is_zero()) {
            f -= xi[i] * family[i];
        }
    }
    return f;
}

MultiPoly relation_polynomial(const InvariantContext& ctx, const XiVector& xi)
{
    return relation_polynomial(build_w(ctx), build_family(ctx), xi);
}

}  // namespace c32
