#include "c32/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace c32 {

Rational::Rational(long num, long den) : value_(num, den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    // mpz_class rejects a leading '+'.
    const auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    if (a.is_integer() && b.is_integer() && is_integer()) {
        mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    value_ += t;
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), base.gmp().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.gmp().get_den_mpz_t(), exponent);
    return Rational(mpq_class(n, d));
}

}  // namespace c32
