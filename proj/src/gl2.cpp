#include "c32/gl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "c32/trace_word.hpp"

namespace c32 {

Partition2::Partition2(unsigned first, unsigned second) : first(first), second(second)
{
    if (first < second) {
        throw std::invalid_argument("Partition2: (" + std::to_string(first) + "," + std::to_string(second)
                                    + ") is not a partition");
    }
}

std::string Partition2::to_string() const
{
    return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

// -------------------------------------------------------- TruncatedSeries

TruncatedSeries TruncatedSeries::one(unsigned bound)
{
    return monomial(0, 0, Rational(1), bound);
}

TruncatedSeries TruncatedSeries::monomial(unsigned i, unsigned j, const Rational& c, unsigned bound)
{
    TruncatedSeries s(bound);
    s.add(i, j, c);
    return s;
}

TruncatedSeries TruncatedSeries::geometric(unsigned a, unsigned b, unsigned bound)
{
    if (a == 0 && b == 0) {
        throw std::invalid_argument("TruncatedSeries::geometric: (0, 0) factor");
    }
    TruncatedSeries s(bound);
    for (unsigned k = 0; k * (a + b) <= bound; ++k) {
        s.add(k * a, k * b, Rational(1));
    }
    return s;
}

Rational TruncatedSeries::coeff(unsigned i, unsigned j) const
{
    const auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add(unsigned i, unsigned j, const Rational& c)
{
    if (i + j > bound_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

TruncatedSeries TruncatedSeries::slice(unsigned k) const
{
    TruncatedSeries s(bound_);
    for (const auto& [key, c] : coeffs_) {
        if (key.first + key.second == k) {
            s.coeffs_.emplace(key, c);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncate(unsigned bound) const
{
    TruncatedSeries s(std::min(bound, bound_));
    for (const auto& [key, c] : coeffs_) {
        s.add(key.first, key.second, c);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    bound_ = std::min(bound_, o.bound_);
    std::erase_if(coeffs_, [this](const auto& kv) { return kv.first.first + kv.first.second > bound_; });
    for (const auto& [key, c] : o.coeffs_) {
        add(key.first, key.second, c);
    }
    return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + Rational(-1) * b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(std::min(a.bound_, b.bound_));
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a)
{
    TruncatedSeries r(a.bound_);
    for (const auto& [k, v] : a.coeffs_) {
        r.add(k.first, k.second, c * v);
    }
    return r;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    for (const auto& [k, c] : coeffs_) {
        os << '(' << k.first << ',' << k.second << "): " << c << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------- Decomposition

Decomposition::Decomposition(std::initializer_list<std::pair<const Partition2, std::uint64_t>> items)
{
    for (const auto& [p, m] : items) {
        add(p, m);
    }
}

std::uint64_t Decomposition::multiplicity(const Partition2& p) const
{
    const auto it = mult_.find(p);
    return it == mult_.end() ? 0 : it->second;
}

void Decomposition::add(const Partition2& p, std::uint64_t m)
{
    if (m != 0) {
        mult_[p] += m;
    }
}

Decomposition Decomposition::of_size(unsigned size) const
{
    Decomposition d;
    for (const auto& [p, m] : mult_) {
        if (p.size() == size) {
            d.add(p, m);
        }
    }
    return d;
}

std::string Decomposition::to_string() const
{
    std::ostringstream os;
    for (const auto& [p, m] : mult_) {
        os << p.to_string() << ": " << m << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------- characters

TruncatedSeries schur(const Partition2& p, unsigned bound)
{
    TruncatedSeries s(bound);
    const unsigned a = p.first - p.second;
    const unsigned b = p.second;
    for (unsigned i = 0; i <= a; ++i) {
        s.add(b + a - i, b + i, Rational(1));
    }
    return s;
}

TruncatedSeries character(const Decomposition& d, unsigned bound)
{
    TruncatedSeries s(bound);
    for (const auto& [p, m] : d.multiplicities()) {
        s += Rational(static_cast<long>(m)) * schur(p, bound);
    }
    return s;
}

TruncatedSeries expand_rational(const TruncatedSeries& numerator, std::span<const DenominatorFactor> factors,
                                unsigned bound)
{
    // Multiply out the denominator D, then solve D * H = numerator degree by degree.
    TruncatedSeries denom = TruncatedSeries::one(bound);
    for (const auto& f : factors) {
        if (f.a == 0 && f.b == 0) {
            throw std::invalid_argument("expand_rational: zero denominator factor (1 - 1)");
        }
        denom = denom * (TruncatedSeries::one(bound) - TruncatedSeries::monomial(f.a, f.b, Rational(1), bound));
    }
    TruncatedSeries h(bound);
    for (unsigned d = 0; d <= bound; ++d) {
        for (unsigned i = 0; i <= d; ++i) {
            const unsigned j = d - i;
            Rational c = numerator.coeff(i, j);
            for (const auto& [k, dc] : denom.coeffs()) {
                if ((k.first == 0 && k.second == 0) || k.first > i || k.second > j) {
                    continue;
                }
                const Rational prev = h.coeff(i - k.first, j - k.second);
                if (!prev.is_zero()) {
                    c -= dc * prev;
                }
            }
            h.add(i, j, c);
        }
    }
    return h;
}

Decomposition extract_multiplicities(const TruncatedSeries& s)
{
    Decomposition d;
    for (unsigned total = 0; total <= s.bound(); ++total) {
        for (unsigned b = 0; 2 * b <= total; ++b) {
            const unsigned a = total - b;
            Rational m = s.coeff(a, b);
            if (b > 0) {
                m -= s.coeff(a + 1, b - 1);
            }
            if (m.sign() < 0 || !m.is_integer()) {
                throw std::domain_error("extract_multiplicities: multiplicity " + m.to_string() + " at ("
                                        + std::to_string(a) + "," + std::to_string(b) + ") is not a natural number");
            }
            if (!m.is_zero()) {
                d.add(Partition2(a, b), m.numerator().get_ui());
            }
        }
    }
    if (character(d, s.bound()) != s) {
        throw std::domain_error("extract_multiplicities: series is not a GL2 character");
    }
    return d;
}

Decomposition lr_tensor(const Partition2& p, const Partition2& q)
{
    // W(a+b, b) (x) W(c+d, d) = sum_{k=0..c} W(a+b+d+k, b+d+c-k) with a >= c.
    unsigned a = p.first - p.second;
    unsigned b = p.second;
    unsigned c = q.first - q.second;
    unsigned d = q.second;
    if (a < c) {
        std::swap(a, c);
        std::swap(b, d);
    }
    Decomposition out;
    for (unsigned k = 0; k <= c; ++k) {
        out.add(Partition2(a + b + d + k, b + d + c - k), 1);
    }
    return out;
}

// ---------------------------------------------------------- Hilbert series

namespace {

TruncatedSeries product_of_geometric(std::initializer_list<DenominatorFactor> gens, unsigned bound)
{
    TruncatedSeries s = TruncatedSeries::one(bound);
    for (const auto& g : gens) {
        s = s * TruncatedSeries::geometric(g.a, g.b, bound);
    }
    return s;
}

constexpr unsigned kSBound = 12;

}  // namespace

std::vector<DenominatorFactor> c32_denominator()
{
    return {{1, 0}, {0, 1},                  // (1 - t1)(1 - t2)
            {2, 0}, {1, 1}, {0, 2},          // q2
            {3, 0}, {2, 1}, {1, 2}, {0, 3},  // q3
            {2, 2}};
}

TruncatedSeries c32_series(unsigned bound, std::span<const DenominatorFactor> factors)
{
    const TruncatedSeries numerator = TruncatedSeries::one(bound) + TruncatedSeries::monomial(3, 3, Rational(1), bound);
    return expand_rational(numerator, factors, bound);
}

TruncatedSeries c32_series(unsigned bound)
{
    const auto factors = c32_denominator();
    return c32_series(bound, factors);
}

TruncatedSeries sym_w2_series(unsigned bound)
{
    return product_of_geometric({{2, 0}, {1, 1}, {0, 2}}, bound);
}

TruncatedSeries sym_w3_series(unsigned bound)
{
    return product_of_geometric({{3, 0}, {2, 1}, {1, 2}, {0, 3}}, bound);
}

TruncatedSeries sym_w22_series(unsigned bound)
{
    return TruncatedSeries::geometric(2, 2, bound);
}

TruncatedSeries s_algebra_series(unsigned bound)
{
    return sym_w2_series(bound) * sym_w3_series(bound) * sym_w22_series(bound);
}

TruncatedSeries free_module_series(unsigned bound)
{
    const TruncatedSeries basis = TruncatedSeries::one(bound) + TruncatedSeries::monomial(3, 3, Rational(1), bound);
    return s_algebra_series(bound) * product_of_geometric({{1, 0}, {0, 1}}, bound) * basis;
}

TruncatedSeries trace_space_series(unsigned k, unsigned bound)
{
    TruncatedSeries s(bound);
    for (const auto& w : enumerate_basis(k)) {
        s.add(w.x_degree(), w.y_degree(), Rational(1));
    }
    return s;
}

std::vector<ComponentMultiplicity> s_component_multiplicities(const Partition2& target)
{
    const unsigned n = target.size();
    const TruncatedSeries w2 = sym_w2_series(n);
    const TruncatedSeries w3 = sym_w3_series(n);
    const TruncatedSeries w22 = sym_w22_series(n);
    std::vector<ComponentMultiplicity> out;
    for (unsigned i = 0; i <= n; i += 2) {
        for (unsigned j = 0; i + j <= n; j += 3) {
            const unsigned k = n - i - j;
            if (k % 4 != 0) {
                continue;
            }
            const TruncatedSeries component = w2.slice(i) * w3.slice(j) * w22.slice(k);
            const std::uint64_t m = extract_multiplicities(component).multiplicity(target);
            if (m != 0) {
                out.push_back({i, j, k, m});
            }
        }
    }
    return out;
}

SeriesIdentityCheck verify_series_identity(unsigned bound, std::span<const DenominatorFactor> factors)
{
    SeriesIdentityCheck check;
    const TruncatedSeries invariants = c32_series(bound, factors);
    const TruncatedSeries free_module = free_module_series(bound);
    check.series_equal = invariants == free_module;
    if (!check.series_equal) {
        for (unsigned d = 0; d <= bound && !check.first_mismatch; ++d) {
            for (unsigned i = 0; i <= d; ++i) {
                if (invariants.coeff(i, d - i) != free_module.coeff(i, d - i)) {
                    check.first_mismatch = TruncatedSeries::Key{i, d - i};
                    break;
                }
            }
        }
    }

    const Decomposition s = extract_multiplicities(s_algebra_series(kSBound));
    check.s_degree6 = s.of_size(6);
    check.m33 = s.multiplicity(Partition2(3, 3));
    check.m66 = s.multiplicity(Partition2(6, 6));
    check.s_degree6_matches = check.s_degree6 == Decomposition{{Partition2(6, 0), 2}, {Partition2(4, 2), 3}};
    return check;
}

SeriesIdentityCheck verify_series_identity(unsigned bound)
{
    const auto factors = c32_denominator();
    return verify_series_identity(bound, factors);
}

}  // namespace c32
