#include "flaglab/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace flaglab::chow {

ChowClass ChowClass::one() { return {1, 0, 0, 0, 0, 0}; }
ChowClass ChowClass::H1() { return {0, 1, 0, 0, 0, 0}; }
ChowClass ChowClass::H2() { return {0, 0, 1, 0, 0, 0}; }
ChowClass ChowClass::H() { return {0, 1, 1, 0, 0, 0}; }
ChowClass ChowClass::H1H2() { return {0, 0, 0, 1, 1, 0}; }
ChowClass ChowClass::point() { return {0, 0, 0, 0, 0, 1}; }
ChowClass ChowClass::divisor(const Rational& a, const Rational& b) { return {0, a, b, 0, 0, 0}; }

ChowClass ChowClass::part(int degree) const {
    ChowClass p{};
    switch (degree) {
        case 0: p.c0 = c0; break;
        case 1: p.h1 = h1; p.h2 = h2; break;
        case 2: p.h1sq = h1sq; p.h2sq = h2sq; break;
        case 3: p.pt = pt; break;
        default: throw std::invalid_argument("ChowClass::part: degree out of range");
    }
    return p;
}

bool ChowClass::is_zero() const { return *this == ChowClass{}; }

std::string ChowClass::to_string() const {
    std::ostringstream os;
    os << "[" << c0 << "; " << h1 << ", " << h2 << "; " << h1sq << ", " << h2sq << "; " << pt << "]";
    return os.str();
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    return {a.c0 + b.c0, a.h1 + b.h1, a.h2 + b.h2, a.h1sq + b.h1sq, a.h2sq + b.h2sq, a.pt + b.pt};
}

ChowClass operator-(const ChowClass& a) { return {-a.c0, -a.h1, -a.h2, -a.h1sq, -a.h2sq, -a.pt}; }

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

ChowClass operator*(const Rational& s, const ChowClass& a) {
    return {s * a.c0, s * a.h1, s * a.h2, s * a.h1sq, s * a.h2sq, s * a.pt};
}

// Table used below:
//   h1*h1 = h1^2, h2*h2 = h2^2, h1*h2 = h1^2 + h2^2
//   h1*h1^2 = 0, h1*h2^2 = pt, h2*h1^2 = pt, h2*h2^2 = 0
ChowClass multiply(const ChowClass& a, const ChowClass& b) {
    ChowClass r{};
    r.c0 = a.c0 * b.c0;
    r.h1 = a.c0 * b.h1 + a.h1 * b.c0;
    r.h2 = a.c0 * b.h2 + a.h2 * b.c0;

    Rational mixed = a.h1 * b.h2 + a.h2 * b.h1;
    r.h1sq = a.c0 * b.h1sq + a.h1sq * b.c0 + a.h1 * b.h1 + mixed;
    r.h2sq = a.c0 * b.h2sq + a.h2sq * b.c0 + a.h2 * b.h2 + mixed;

    r.pt = a.c0 * b.pt + a.pt * b.c0
         + a.h1 * b.h2sq + a.h2 * b.h1sq
         + a.h2sq * b.h1 + a.h1sq * b.h2;
    return r;
}

Rational degree(const ChowClass& a) { return a.pt; }

ChernData ChernData::line_bundle(const Rational& a, const Rational& b) {
    return {1, ChowClass::divisor(a, b), ChowClass{}, ChowClass{}};
}

ChernData ChernData::instanton(long k) {
    return {2, ChowClass{}, Rational(k) * ChowClass::H1H2(), ChowClass{}};
}

// c(E ⊗ L) for rank 2 by the splitting principle, D = c1(L):
//   c1' = c1 + 2D,  c2' = c2 + c1 D + D^2,  c3' = c3.
// Degree 3 of prod (1 + x_i + D) over two roots is empty, so nothing new lands
// in c3; the input c3 is carried through.
ChernData twist_chern(const ChernData& c, long a, long b) {
    if (c.rank != 2) throw std::invalid_argument("twist_chern: only rank 2 is supported");
    ChowClass d = ChowClass::divisor(a, b);
    ChernData t;
    t.rank = 2;
    t.c1 = c.c1 + Rational(2) * d;
    t.c2 = c.c2 + c.c1 * d + d * d;
    t.c3 = c.c3;
    return t;
}

Rational euler_char(const ChernData& c) {
    const ChowClass h = ChowClass::H();
    const ChowClass h1h2 = ChowClass::H1H2();
    Rational chi = c.rank;
    chi += Rational(3, 2) * degree(c.c1 * h1h2);
    chi += Rational(1, 2) * degree((c.c1 * c.c1 - Rational(2) * c.c2) * h);
    chi += Rational(1, 6) * degree(c.c1 * c.c1 * c.c1 - Rational(3) * c.c1 * c.c2 + Rational(3) * c.c3);
    return chi;
}

Rational line_bundle_rr(long a, long b) {
    Rational A = a, B = b;
    return 1 + Rational(3, 2) * (A + B) + (A * A + 4 * A * B + B * B) / 2 + (A * A * B + A * B * B) / 2;
}

InstantonNumerology instanton_numerology(long k) {
    if (k < 1) throw std::invalid_argument("instanton_numerology: charge must be >= 1");
    ChernData e = ChernData::instanton(k);
    InstantonNumerology n{};
    n.k = k;
    n.chi_minus_h = euler_char(twist_chern(e, -1, -1));
    n.chi = euler_char(e);
    n.chi_minus_hi = euler_char(twist_chern(e, -1, 0));
    n.chi_plus_hi = euler_char(twist_chern(e, 1, 0));
    n.chi_plus_h = euler_char(twist_chern(e, 1, 1));
    if (euler_char(twist_chern(e, 0, -1)) != n.chi_minus_hi || euler_char(twist_chern(e, 0, 1)) != n.chi_plus_hi)
        throw std::logic_error("instanton_numerology: h1/h2 asymmetry");
    return n;
}

long instanton_ext1(long k) {
    if (k < 1) throw std::invalid_argument("instanton_ext1: charge must be >= 1");
    // E ⊗ E^* for c1 = 0, c3 = 0: rank 4, c1 = 0, c2 = 4 c2(E), c3 = 0.
    ChernData end{4, ChowClass{}, Rational(4 * k) * ChowClass::H1H2(), ChowClass{}};
    Rational chi = euler_char(end);
    Rational ext1 = 1 - chi;
    if (ext1.get_den() != 1) throw std::logic_error("instanton_ext1: non-integral Euler characteristic");
    return ext1.get_num().get_si();
}

}  // namespace flaglab::chow
