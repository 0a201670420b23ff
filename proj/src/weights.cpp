#include "superweight/weights.hpp"
#include "superweight/rootsys.hpp"

#include <cctype>
#include <cstdlib>

namespace superweight {

Rational Rational::parse(const std::string& text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("BadRationalLiteral", "expected digits in '" + text + "'");
    long long num = std::stoll(text.substr(start, pos - start));
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == dstart) fail("BadRationalLiteral", "expected denominator in '" + text + "'");
        den = std::stoll(text.substr(dstart, pos - dstart));
    }
    if (pos != text.size()) fail("BadRationalLiteral", "trailing characters in '" + text + "'");
    return Rational(neg ? -num : num, den);
}

bool Weight::is_integral() const {
    for (const auto& c : left)
        if (!c.is_integer()) return false;
    for (const auto& c : right)
        if (!c.is_integer()) return false;
    return true;
}

Weight rho(std::size_t n, std::size_t m) {
    Weight w;
    for (std::size_t i = 0; i < n; ++i) w.left.emplace_back(static_cast<long long>(n - i));
    for (std::size_t j = 0; j < m; ++j) w.right.emplace_back(-static_cast<long long>(j + 1));
    return w;
}

ShiftedWeight shift(const Weight& w) {
    if (!w.is_integral())
        fail("NonIntegralWeight", "cannot shift non-integral weight " + format_weight(w));
    ShiftedWeight s;
    const long long n = static_cast<long long>(w.n());
    for (long long i = 0; i < n; ++i)
        s.a.push_back(w.left[i].as_integer() + (n - i));
    for (long long j = 0; j < static_cast<long long>(w.m()); ++j)
        s.b.push_back((j + 1) - w.right[j].as_integer());
    s.dominant = true;
    for (std::size_t i = 0; i + 1 < s.a.size(); ++i)
        if (s.a[i] <= s.a[i + 1]) s.dominant = false;
    for (std::size_t j = 0; j + 1 < s.b.size(); ++j)
        if (s.b[j] >= s.b[j + 1]) s.dominant = false;
    return s;
}

Weight unshift(const ShiftedWeight& s) {
    if (!s.dominant) fail("NotDominant", "unshift requires dominant marks");
    Weight w;
    const long long n = static_cast<long long>(s.a.size());
    for (long long i = 0; i < n; ++i) w.left.emplace_back(s.a[i] - (n - i));
    for (long long j = 0; j < static_cast<long long>(s.b.size()); ++j)
        w.right.emplace_back((j + 1) - s.b[j]);
    return w;
}

Weight central_shift(const Weight& w, const Rational& c) {
    Weight out = w;
    for (auto& x : out.left) x += c;
    for (auto& x : out.right) x -= c;
    return out;
}

std::optional<Rational> central_shift_between(const Weight& v, const Weight& w) {
    if (!v.same_shape(w)) fail("ShapeMismatch", "central shift needs equal shapes");
    Rational c(0);
    if (!v.left.empty())
        c = w.left[0] - v.left[0];
    else if (!v.right.empty())
        c = v.right[0] - w.right[0];
    if (central_shift(v, c) == w) return c;
    return std::nullopt;
}

Rational c_of(const Weight& w) {
    Rational sum(0);
    for (const auto& x : w.left) sum += x;
    for (const auto& x : w.right) sum += x;
    return sum;
}

Rational pairing(const Weight& w, const Root& r) {
    Rational value(0);
    for (const auto& term : r.terms) {
        if (term.kind == SlotKind::delta) {
            if (term.index < 1 || term.index > w.n())
                fail("IndexOutOfRange", "no delta slot " + std::to_string(term.index));
            value += Rational(term.coeff) * w.delta_coeff(term.index);
        } else {
            if (term.index < 1 || term.index > w.m())
                fail("IndexOutOfRange", "no eps slot " + std::to_string(term.index));
            value -= Rational(term.coeff) * w.eps_coeff(term.index);
        }
    }
    return value;
}

namespace {

std::vector<Rational> parse_coords(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != '^') ++pos;
        std::string item = text.substr(start, pos - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
        Rational value = Rational::parse(item);
        long long repeat = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t rstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == rstart) fail("BadWeightLiteral", "expected repetition count after '^'");
            repeat = std::stoll(text.substr(rstart, pos - rstart));
        }
        for (long long r = 0; r < repeat; ++r) out.push_back(value);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',') fail("BadWeightLiteral", "expected ',' in coordinate list");
            ++pos;
            skip_ws();
            if (pos == text.size()) fail("BadWeightLiteral", "trailing ',' in coordinate list");
        }
    }
    return out;
}

} // namespace

Weight parse_weight(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos || text[first] != '(' || text[last] != ')')
        fail("BadWeightLiteral", "weight must be parenthesized: '" + text + "'");
    std::string body = text.substr(first + 1, last - first - 1);
    std::size_t bar = body.find('|');
    if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
        fail("BadWeightLiteral", "weight needs exactly one '|': '" + text + "'");
    Weight w;
    w.left = parse_coords(body.substr(0, bar));
    w.right = parse_coords(body.substr(bar + 1));
    return w;
}

std::string format_weight(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.left.size(); ++i) {
        if (i) out += ",";
        out += w.left[i].str();
    }
    out += "|";
    for (std::size_t j = 0; j < w.right.size(); ++j) {
        if (j) out += ",";
        out += w.right[j].str();
    }
    out += ")";
    return out;
}

} // namespace superweight
