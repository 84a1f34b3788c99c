#include "c32/trace_word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "c32/linalg.hpp"

namespace c32 {

std::string canonical_rotation(std::string_view word)
{
    if (word.empty()) {
        throw std::invalid_argument("trace word: empty word");
    }
    for (char ch : word) {
        if (ch != 'X' && ch != 'Y') {
            throw std::invalid_argument("trace word: letter outside {X, Y} in '" + std::string(word) + "'");
        }
    }
    // Words are short (length <= 12 in practice); compare all rotations.
    std::string best(word);
    std::string doubled = std::string(word) + std::string(word);
    for (std::size_t r = 1; r < word.size(); ++r) {
        const std::string_view rot(doubled.data() + r, word.size());
        if (rot < best) {
            best.assign(rot);
        }
    }
    return best;
}

unsigned TraceWord::x_degree() const
{
    return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'X'));
}

unsigned TraceWord::y_degree() const
{
    return static_cast<unsigned>(letters_.size()) - x_degree();
}

std::vector<TraceWord> enumerate_basis(std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("enumerate_basis: k must be positive");
    }
    if (k > 24) {
        throw std::invalid_argument("enumerate_basis: k too large");
    }
    std::set<std::string> seen;
    std::string word(k, 'X');
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        for (std::size_t i = 0; i < k; ++i) {
            word[i] = ((mask >> (k - 1 - i)) & 1U) != 0 ? 'Y' : 'X';
        }
        if (canonical_rotation(word) == word) {
            seen.insert(word);
        }
    }
    std::vector<TraceWord> out;
    out.reserve(seen.size());
    for (const auto& w : seen) {
        out.emplace_back(w);
    }
    return out;
}

std::vector<TraceWord> enumerate_basis(unsigned x_degree, unsigned y_degree)
{
    std::vector<TraceWord> out;
    for (auto& w : enumerate_basis(std::size_t{x_degree} + y_degree)) {
        if (w.x_degree() == x_degree) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

// ------------------------------------------------------- FormalTraceCombo

FormalTraceCombo::FormalTraceCombo(const TraceWord& w, Rational coeff)
{
    add(TraceProduct{w}, coeff);
}

FormalTraceCombo::FormalTraceCombo(TraceProduct product, Rational coeff)
{
    add(product, coeff);
}

void FormalTraceCombo::add(const TraceProduct& product, const Rational& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    TraceProduct key = product;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational FormalTraceCombo::coeff_of(const TraceProduct& p) const
{
    TraceProduct key = p;
    std::sort(key.begin(), key.end());
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalTraceCombo& FormalTraceCombo::operator+=(const FormalTraceCombo& o)
{
    for (const auto& [p, c] : o.terms_) {
        add(p, c);
    }
    return *this;
}

FormalTraceCombo operator-(FormalTraceCombo a, const FormalTraceCombo& b)
{
    for (const auto& [p, c] : b.terms_) {
        a.add(p, -c);
    }
    return a;
}

FormalTraceCombo operator*(const Rational& c, const FormalTraceCombo& a)
{
    FormalTraceCombo r;
    for (const auto& [p, k] : a.terms_) {
        r.add(p, c * k);
    }
    return r;
}

FormalTraceCombo operator*(const FormalTraceCombo& a, const FormalTraceCombo& b)
{
    FormalTraceCombo r;
    for (const auto& [p, c] : a.terms_) {
        for (const auto& [q, d] : b.terms_) {
            TraceProduct pq = p;
            pq.insert(pq.end(), q.begin(), q.end());
            r.add(pq, c * d);
        }
    }
    return r;
}

std::string FormalTraceCombo::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        std::string atoms;
        for (const auto& w : p) {
            if (!atoms.empty()) {
                atoms += '*';
            }
            atoms += w.to_string();
        }
        if (atoms.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += atoms;
        } else {
            out += mag.to_string() + "*" + atoms;
        }
    }
    return out;
}

FormalTraceCombo FormalTraceCombo::parse(std::string_view text)
{
    FormalTraceCombo result;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("FormalTraceCombo::parse: " + what + " at offset " + std::to_string(pos));
    };
    skip_ws();
    if (pos == text.size()) {
        fail("empty input");
    }
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        TraceProduct product;
        bool need_atom = true;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
                ++pos;
            }
            coeff = Rational::parse(text.substr(start, pos - start));
            need_atom = pos < text.size() && text[pos] == '*';
            if (need_atom) {
                ++pos;
            }
        }
        while (need_atom) {
            if (text.substr(pos, 3) != "tr(") {
                fail("expected 'tr('");
            }
            pos += 3;
            const std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) {
                fail("unterminated trace");
            }
            product.emplace_back(text.substr(pos, close - pos));
            pos = close + 1;
            need_atom = pos < text.size() && text[pos] == '*';
            if (need_atom) {
                ++pos;
            }
        }
        result.add(product, sign < 0 ? -coeff : coeff);
        skip_ws();
    }
    return result;
}

// ------------------------------------------------------------ linearize

namespace {

FormalTraceCombo linearize_word(const TraceWord& w)
{
    FormalTraceCombo out;
    std::string s = w.letters();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'Y') {
            s[i] = 'X';
            out.add(TraceProduct{TraceWord(s)}, Rational(1));
            s[i] = 'Y';
        }
    }
    return out;
}

}  // namespace

FormalTraceCombo linearize(const FormalTraceCombo& c)
{
    FormalTraceCombo out;
    for (const auto& [product, coeff] : c.terms()) {
        // Leibniz rule over the factors of the product.
        for (std::size_t i = 0; i < product.size(); ++i) {
            TraceProduct rest;
            for (std::size_t j = 0; j < product.size(); ++j) {
                if (j != i) {
                    rest.push_back(product[j]);
                }
            }
            const FormalTraceCombo d = FormalTraceCombo(rest, coeff) * linearize_word(product[i]);
            out += d;
        }
    }
    return out;
}

HwvSearch hwv_solve(unsigned x_degree, unsigned y_degree)
{
    HwvSearch search;
    search.candidates = enumerate_basis(x_degree, y_degree);
    std::set<TraceProduct> image_keys;
    for (const auto& w : search.candidates) {
        search.images.push_back(linearize(FormalTraceCombo(w)));
        for (const auto& [p, c] : search.images.back().terms()) {
            image_keys.insert(p);
        }
    }
    // One equation per image trace word, one unknown per candidate.
    RationalMatrix rows;
    for (const auto& key : image_keys) {
        RationalVector row;
        for (const auto& img : search.images) {
            row.push_back(img.coeff_of(key));
        }
        rows.push_back(std::move(row));
    }
    for (auto& v : null_space(rows, search.candidates.size())) {
        const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& a) { return !a.is_zero(); });
        const Rational scale = Rational(1) / *lead;
        FormalTraceCombo combo;
        for (std::size_t i = 0; i < v.size(); ++i) {
            combo.add(TraceProduct{search.candidates[i]}, v[i] * scale);
        }
        search.basis.push_back(std::move(combo));
    }
    return search;
}

}  // namespace c32
