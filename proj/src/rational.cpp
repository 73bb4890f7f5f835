#include "flaglab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flaglab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view dpart = trim(s.substr(slash + 1));
    if (!dpart.empty() && (dpart[0] == '-' || dpart[0] == '+'))
        throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    Integer den = parse_integer(dpart, text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer common_denominator(const Vector& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

std::vector<Integer> primitive_integer(const Vector& v) {
    Integer l = common_denominator(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& z : out)
        if (z != 0) { sign = sgn(z); break; }
    if (sign < 0) g = -g;
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

}  // namespace flaglab
