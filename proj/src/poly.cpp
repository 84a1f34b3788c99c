#include "c32/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace c32 {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers)
{
    for (const auto& [v, e] : powers) {
        set_exponent(v, exponent(v) + e);
    }
}

void Monomial::set_exponent(VarId v, unsigned e)
{
    if (v.index >= kMaxVars) {
        throw std::out_of_range("Monomial: variable index out of range");
    }
    if (e > std::numeric_limits<std::uint8_t>::max()) {
        throw std::overflow_error("Monomial: exponent overflow");
    }
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[v.index] + e);
    exps_[v.index] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::degree_in(std::span<const VarId> group) const
{
    unsigned d = 0;
    for (VarId v : group) {
        d += exps_[v.index];
    }
    return d;
}

bool Monomial::is_one() const
{
    return degree_ == 0;
}

std::string Monomial::to_string() const
{
    if (is_one()) {
        return "1";
    }
    std::string out;
    for_each([&](VarId v, unsigned e) {
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(v);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    });
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        if (e > std::numeric_limits<std::uint8_t>::max()) {
            throw std::overflow_error("Monomial: exponent overflow");
        }
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
}

bool graded_lex_before(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_) {
        return a.degree_ > b.degree_;
    }
    return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) > 0;
}

std::size_t Monomial::hash() const
{
    // FNV-1a over 8-byte words.
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < kMaxVars; i += 8) {
        std::uint64_t w = 0;
        std::memcpy(&w, exps_.data() + i, 8);
        h ^= w;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

// --------------------------------------------------------------- MultiPoly

namespace {

bool term_before(const Term& a, const Term& b)
{
    return graded_lex_before(a.monomial, b.monomial);
}

/// Hash-based term accumulator used by every operation that can produce
/// repeated monomials.
class Accumulator {
public:
    explicit Accumulator(std::size_t expected = 0) { map_.reserve(expected); }

    void add(const Monomial& m, const Rational& c)
    {
        auto [it, inserted] = map_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
        }
    }

    void add_product(const Monomial& m, const Rational& a, const Rational& b)
    {
        auto [it, inserted] = map_.try_emplace(m);
        if (inserted) {
            it->second = a * b;
        } else {
            it->second.add_product(a, b);
        }
    }

    std::vector<Term> take()
    {
        std::vector<Term> out;
        out.reserve(map_.size());
        for (auto& [m, c] : map_) {
            if (!c.is_zero()) {
                out.push_back(Term{m, std::move(c)});
            }
        }
        map_.clear();
        std::sort(out.begin(), out.end(), term_before);
        return out;
    }

private:
    std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

}  // namespace

MultiPoly::MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

MultiPoly::MultiPoly(const Rational& constant)
{
    if (!constant.is_zero()) {
        terms_.push_back(Term{Monomial{}, constant});
    }
}

MultiPoly MultiPoly::variable(VarId v)
{
    return term(Rational(1), Monomial{{v, 1}});
}

MultiPoly MultiPoly::term(const Rational& coeff, const Monomial& m)
{
    MultiPoly p;
    if (!coeff.is_zero()) {
        p.terms_.push_back(Term{m, coeff});
    }
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms)
{
    Accumulator acc(terms.size());
    for (const auto& t : terms) {
        acc.add(t.monomial, t.coeff);
    }
    MultiPoly p;
    p.terms_ = acc.take();
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

unsigned MultiPoly::degree() const
{
    // Canonical order puts the highest total degree first.
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Rational MultiPoly::coeff_of(const Monomial& m) const
{
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                     [](const Term& t, const Monomial& key) { return graded_lex_before(t.monomial, key); });
    if (it != terms_.end() && it->monomial == m) {
        return it->coeff;
    }
    return Rational(0);
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        if (m.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string();
            out += '*';
            out += m.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse()
    {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) {
            fail("empty input");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) {
                t.coeff = -t.coeff;
            }
            terms.push_back(std::move(t));
            skip_ws();
        }
        return MultiPoly::from_terms(std::move(terms));
    }

private:
    Term parse_term()
    {
        Term t{Monomial{}, Rational(1)};
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = parse_coefficient();
            need_factor = false;
            if (peek() != '*') {
                return t;
            }
            ++pos_;
            need_factor = true;
        }
        while (need_factor) {
            const std::string_view name = parse_name();
            const auto v = var_by_name(name);
            if (!v) {
                fail("unknown variable '" + std::string(name) + "'");
            }
            unsigned e = 1;
            if (peek() == '^') {
                ++pos_;
                e = parse_unsigned();
                if (e == 0) {
                    fail("zero exponent");
                }
            }
            t.monomial.set_exponent(*v, t.monomial.exponent(*v) + e);
            need_factor = false;
            if (peek() == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        return t;
    }

    Rational parse_coefficient()
    {
        const std::size_t start = pos_;
        digits();
        if (peek() == '/') {
            ++pos_;
            digits();
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    unsigned parse_unsigned()
    {
        const std::size_t start = pos_;
        digits();
        unsigned value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            value = value * 10 + static_cast<unsigned>(text_[i] - '0');
            if (value > 255) {
                fail("exponent too large");
            }
        }
        return value;
    }

    void digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected digits");
        }
    }

    std::string_view parse_name()
    {
        const std::size_t start = pos_;
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
            fail("expected variable name");
        }
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("MultiPoly::parse: " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text)
{
    return PolyParser(text).parse();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (term_before(*a, *b)) {
            merged.push_back(std::move(*a++));
        } else if (term_before(*b, *a)) {
            merged.push_back(*b++);
        } else {
            Rational c = std::move(a->coeff);
            c += b->coeff;
            if (!c.is_zero()) {
                merged.push_back(Term{a->monomial, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    std::move(a, terms_.end(), std::back_inserter(merged));
    std::copy(b, o.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    return *this += -o;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r = a;
    r += b;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r = a;
    r -= b;
    return r;
}

MultiPoly operator-(const MultiPoly& a)
{
    MultiPoly r = a;
    for (auto& t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return MultiPoly{};
    }
    if (a.is_constant()) {
        return a.terms_.front().coeff * b;
    }
    if (b.is_constant()) {
        return b.terms_.front().coeff * a;
    }
    const MultiPoly& outer = a.size() <= b.size() ? a : b;
    const MultiPoly& inner = a.size() <= b.size() ? b : a;
    Accumulator acc(std::min<std::size_t>(outer.size() * inner.size(), 1U << 22));
    for (const auto& s : outer.terms_) {
        for (const auto& t : inner.terms_) {
            acc.add_product(s.monomial * t.monomial, s.coeff, t.coeff);
        }
    }
    MultiPoly r;
    r.terms_ = acc.take();
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p)
{
    MultiPoly r = p;
    r *= c;
    return r;
}

MultiPoly MultiPoly::filter(const std::function<bool(const Monomial&)>& keep) const
{
    MultiPoly r;
    for (const auto& t : terms_) {
        if (keep(t.monomial)) {
            r.terms_.push_back(t);
        }
    }
    return r;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent)
{
    MultiPoly result(1);
    MultiPoly square = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            square *= square;
        }
    }
    return result;
}

MultiPoly diff(const MultiPoly& p, VarId v)
{
    std::vector<Term> out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(v);
        if (e == 0) {
            continue;
        }
        Monomial reduced = m;
        reduced.set_exponent(v, e - 1);
        out.push_back(Term{reduced, c * Rational(static_cast<long>(e))});
    }
    // Lowering one exponent can reorder terms and merge none, but
    // from_terms re-sorts either way.
    return MultiPoly::from_terms(std::move(out));
}

MultiPoly subst(const MultiPoly& p, const Substitution& assignment)
{
    // Powers of each image are cached by (variable, exponent).
    std::map<std::pair<std::uint8_t, unsigned>, MultiPoly> powers;
    auto power_of = [&](VarId v, unsigned e) -> const MultiPoly& {
        auto key = std::make_pair(v.index, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, pow(assignment.at(v), e)).first;
        }
        return it->second;
    };

    Accumulator acc(p.size());
    for (const auto& [m, c] : p.terms()) {
        Monomial kept;
        MultiPoly factor(c);
        m.for_each([&](VarId v, unsigned e) {
            if (assignment.contains(v)) {
                factor *= power_of(v, e);
            } else {
                kept.set_exponent(v, e);
            }
        });
        for (const auto& t : factor.terms()) {
            acc.add(t.monomial * kept, t.coeff);
        }
    }
    return MultiPoly::from_terms(acc.take());
}

MultiPoly apply_derivation(const MultiPoly& p, const Substitution& images)
{
    MultiPoly result;
    for (const auto& [v, image] : images) {
        if (image.is_zero()) {
            continue;
        }
        const MultiPoly d = diff(p, v);
        if (!d.is_zero()) {
            result += image * d;
        }
    }
    return result;
}

std::optional<std::pair<unsigned, unsigned>> bidegree(const MultiPoly& p, std::span<const VarId> first,
                                                      std::span<const VarId> second)
{
    if (p.is_zero()) {
        return std::nullopt;
    }
    std::optional<std::pair<unsigned, unsigned>> result;
    for (const auto& t : p.terms()) {
        const std::pair<unsigned, unsigned> d{t.monomial.degree_in(first), t.monomial.degree_in(second)};
        if (result && *result != d) {
            return std::nullopt;
        }
        result = d;
    }
    return result;
}

}  // namespace c32
