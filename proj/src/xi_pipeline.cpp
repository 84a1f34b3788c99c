#include "c32/xi_pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace c32 {

bool XiEquation::is_trivial() const
{
    return constant.is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

XiEquation XiEquation::normalized() const
{
    XiEquation out = *this;
    const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
    const Rational pivot = lead != coeffs.end() ? *lead : constant;
    if (pivot.is_zero()) {
        return out;
    }
    const Rational inv = Rational(1) / pivot;
    for (auto& c : out.coeffs) {
        c *= inv;
    }
    out.constant *= inv;
    return out;
}

bool XiEquation::same_as(const XiEquation& o) const
{
    const XiEquation a = normalized();
    const XiEquation b = o.normalized();
    return a.coeffs == b.coeffs && a.constant == b.constant;
}

std::string XiEquation::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& label) {
        if (c.is_zero()) {
            return;
        }
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        if (label.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << label;
        } else {
            os << mag << '*' << label;
        }
    };
    emit(constant, "");
    for (std::size_t i = 0; i < kFamilySize; ++i) {
        emit(coeffs[i], xi_labels()[i]);
    }
    if (first) {
        os << '0';
    }
    os << " = 0";
    return os.str();
}

std::vector<XiEquation> coefficient_equations(const MultiPoly& w, const Family& family,
                                              std::span<const Monomial> monomials, const std::string& step)
{
    const MultiPoly w2 = w * w;
    std::vector<XiEquation> out;
    for (const auto& m : monomials) {
        XiEquation eq;
        eq.constant = w2.coeff_of(m);
        for (std::size_t i = 0; i < kFamilySize; ++i) {
            eq.coeffs[i] = -family[i].coeff_of(m);
        }
        eq.source = step + ", coefficient of " + m.to_string();
        out.push_back(std::move(eq));
    }
    return out;
}

std::vector<XiEquation> deduplicate(const std::vector<XiEquation>& eqs)
{
    std::vector<XiEquation> out;
    for (const auto& eq : eqs) {
        if (eq.is_trivial()) {
            continue;
        }
        const bool seen = std::any_of(out.begin(), out.end(), [&](const XiEquation& o) { return o.same_as(eq); });
        if (!seen) {
            out.push_back(eq);
        }
    }
    return out;
}

LinearSystem to_system(const std::vector<XiEquation>& eqs)
{
    LinearSystem sys(std::vector<std::string>(xi_labels().begin(), xi_labels().end()));
    for (const auto& eq : eqs) {
        sys.add_row(RationalVector(eq.coeffs.begin(), eq.coeffs.end()), -eq.constant);
    }
    return sys;
}

XiEquation substitute_determined(const XiEquation& eq, const Solution& solution)
{
    XiEquation out = eq;
    const std::size_t n = kFamilySize;
    for (std::size_t k = 0; k < solution.pivot_columns.size(); ++k) {
        const auto& row = solution.rref[k];
        const bool determined = std::all_of(solution.free_columns.begin(), solution.free_columns.end(),
                                            [&](std::size_t f) { return row[f].is_zero(); });
        const std::size_t p = solution.pivot_columns[k];
        if (determined && !out.coeffs[p].is_zero()) {
            out.constant += out.coeffs[p] * row[n];
            out.coeffs[p] = Rational(0);
        }
    }
    return out;
}

XiEquation substitute_general(const XiEquation& eq, const Solution& solution)
{
    XiEquation out = eq;
    const std::size_t n = kFamilySize;
    for (std::size_t k = 0; k < solution.pivot_columns.size(); ++k) {
        const std::size_t p = solution.pivot_columns[k];
        const Rational c = out.coeffs[p];
        if (c.is_zero()) {
            continue;
        }
        // xi_p = rref[k][n] - sum_f rref[k][f] xi_f
        const auto& row = solution.rref[k];
        out.constant += c * row[n];
        for (std::size_t f : solution.free_columns) {
            out.coeffs[f] -= c * row[f];
        }
        out.coeffs[p] = Rational(0);
    }
    return out;
}

Matrix3 circulant_y()
{
    return Matrix3::from_ints({0, 1, 0, 0, 0, 1, 1, 0, 0});
}

Matrix3 step2_x()
{
    return Matrix3::from_ints({1, 0, 0, 0, -1, 0, 0, 0, 0});
}

Matrix3 step2_y()
{
    return Matrix3::from_ints({0, 0, 0, 0, 1, 0, 0, 0, -1});
}

Matrix3 symmetric_y()
{
    return Matrix3::from_ints({0, 1, 0, 1, 0, 0, 0, 0, 0});
}

namespace {

Monomial diag_monomial(unsigned e1, unsigned e2)
{
    Monomial m;
    m.set_exponent(vars::x1, e1);
    m.set_exponent(vars::x2, e2);
    return m;
}

Solution solve_or_throw(const std::vector<XiEquation>& eqs, const std::string& step)
{
    Solution s = solve_exact(to_system(eqs));
    if (s.status == SolveStatus::inconsistent) {
        throw PipelineError(step, "inconsistent system of " + std::to_string(eqs.size()) + " equations");
    }
    return s;
}

std::string nonzero_members(const MultiPoly& w, const Family& family)
{
    std::string out = w.is_zero() ? "" : "w";
    for (std::size_t i = 0; i < kFamilySize; ++i) {
        if (!family[i].is_zero()) {
            out += (out.empty() ? "" : ", ") + family_labels()[i];
        }
    }
    return out.empty() ? "none" : out;
}

void log_equations(std::vector<std::string>& t, const std::vector<XiEquation>& eqs)
{
    for (const auto& eq : eqs) {
        t.push_back("  " + eq.to_string() + "    [" + eq.source + "]");
    }
}

}  // namespace

XiPipelineResult xi_pipeline(const InvariantContext& generic, bool discover)
{
    XiPipelineResult r;
    auto& t = r.transcript;

    // Step 1: x diagonal, y the cyclic permutation matrix.
    {
        const InvariantContext ctx(diagonal_traceless_x(), circulant_y());
        const MultiPoly w = build_w(ctx);
        const Family fam = build_family(ctx);
        const std::array<Monomial, 2> mons = {diag_monomial(6, 0), diag_monomial(4, 2)};
        r.step1 = coefficient_equations(w, fam, mons, "step 1");
        t.push_back("step 1: x = diag(x1, x2, -x1-x2), y = cyclic permutation; nonzero: " + nonzero_members(w, fam));
        log_equations(t, r.step1);
    }
    const Solution s1 = solve_or_throw(r.step1, "step 1");

    // Step 2: constant diagonal pair.
    {
        const InvariantContext ctx(step2_x(), step2_y());
        const MultiPoly w = build_w(ctx);
        const Family fam = build_family(ctx);
        const std::array<Monomial, 1> mons = {Monomial{}};
        r.step2 = coefficient_equations(w, fam, mons, "step 2");
        r.step2_reduced = substitute_determined(r.step2.front(), s1);
        r.step2_reduced.source = "step 2 after step 1";
        t.push_back("step 2: x = diag(1, -1, 0), y = diag(0, 1, -1); nonzero: " + nonzero_members(w, fam));
        log_equations(t, r.step2);
        log_equations(t, {r.step2_reduced});
    }

    // Step 3: x diagonal, y symmetric 0/1.
    {
        const InvariantContext ctx(diagonal_traceless_x(), symmetric_y());
        const MultiPoly w = build_w(ctx);
        const Family fam = build_family(ctx);
        std::vector<Monomial> mons;
        for (unsigned i = 7; i-- > 0;) {
            mons.push_back(diag_monomial(i, 6 - i));
            RationalVector row;
            for (const auto& p : fam) {
                row.push_back(p.coeff_of(mons.back()));
            }
            r.step3_display.push_back(std::move(row));
        }
        r.step3 = deduplicate(coefficient_equations(w, fam, mons, "step 3"));
        t.push_back("step 3: x = diag(x1, x2, -x1-x2), y = symmetric 0/1; nonzero: " + nonzero_members(w, fam));
        log_equations(t, r.step3);
    }
    std::vector<XiEquation> combined = r.step1;
    combined.push_back(r.step2.front());
    combined.insert(combined.end(), r.step3.begin(), r.step3.end());
    r.after_step3 = solve_or_throw(combined, "steps 1-3");
    t.push_back("after step 3: " + to_string(r.after_step3.status) + ", free unknowns:");
    for (std::size_t f : r.after_step3.free_columns) {
        t.back() += " " + xi_labels()[f];
    }

    // Step 4: x diagonal, y generic; two named coefficients.
    const MultiPoly w = build_w(generic);
    const Family fam = build_family(generic);
    {
        const std::array<Monomial, 2> mons = {
            Monomial{{vars::x1, 3}, {vars::x2, 3}, {vars::y(1, 1), 3}, {vars::y(1, 2), 1}, {vars::y(2, 3), 1},
                     {vars::y(3, 1), 1}},
            Monomial{{vars::x1, 1}, {vars::x2, 5}, {vars::y(1, 2), 1}, {vars::y(2, 2), 1}, {vars::y(2, 3), 2},
                     {vars::y(3, 1), 1}, {vars::y(3, 2), 1}},
        };
        r.step4 = coefficient_equations(w, fam, mons, "step 4");
        for (const auto& eq : r.step4) {
            r.step4_reduced.push_back(substitute_general(eq, r.after_step3));
            r.step4_reduced.back().source = eq.source + " after steps 1-3";
        }
        t.push_back("step 4: x = diag(x1, x2, -x1-x2), y generic traceless");
        log_equations(t, r.step4_reduced);
    }
    combined.insert(combined.end(), r.step4.begin(), r.step4.end());
    const Solution final = solve_or_throw(combined, "steps 1-4");
    if (final.status != SolveStatus::unique) {
        throw PipelineError("steps 1-4", "solution is not unique");
    }
    std::copy(final.particular.begin(), final.particular.end(), r.xi.begin());

    if (discover) {
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<Monomial> mons;
        auto collect = [&](const MultiPoly& p) {
            for (const auto& term : p.terms()) {
                const auto& raw = term.monomial.raw();
                if (seen.insert({raw.begin(), raw.end()}).second) {
                    mons.push_back(term.monomial);
                }
            }
        };
        collect(w * w);
        for (const auto& p : fam) {
            collect(p);
        }
        const auto all = deduplicate(coefficient_equations(w, fam, mons, "discovery"));
        r.discovery_equations = all.size();
        const LinearSystem sys = to_system(all);
        r.discovery_rank = rank(sys.coefficients());
        const Solution s = solve_exact(sys);
        if (s.status == SolveStatus::inconsistent) {
            throw PipelineError("discovery", "generic evaluation is inconsistent");
        }
        if (s.status == SolveStatus::unique && !std::equal(s.particular.begin(), s.particular.end(), r.xi.begin())) {
            throw PipelineError("discovery", "generic evaluation disagrees with the staged solution");
        }
        t.push_back("discovery: " + std::to_string(r.discovery_equations) + " distinct equations, rank "
                    + std::to_string(r.discovery_rank) + ", " + to_string(s.status));
    }

    std::string line = "solution:";
    for (std::size_t i = 0; i < kFamilySize; ++i) {
        line += " " + xi_labels()[i] + "=" + r.xi[i].to_string();
    }
    t.push_back(line);
    return r;
}

}  // namespace c32
