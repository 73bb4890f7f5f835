#pragma once

#include "flaglab/rational.hpp"

#include <string>

namespace flaglab::chow {

// Element of A(F) in the basis {1; h1, h2; h1^2, h2^2; pt}, pt = h1^2 h2 = h1 h2^2.
// h1 h2 has no slot of its own: it is h1^2 + h2^2.
struct ChowClass {
    Rational c0;
    Rational h1, h2;
    Rational h1sq, h2sq;
    Rational pt;

    static ChowClass one();
    static ChowClass H1();
    static ChowClass H2();
    static ChowClass H();      // h1 + h2
    static ChowClass H1H2();   // h1^2 + h2^2
    static ChowClass point();
    static ChowClass divisor(const Rational& a, const Rational& b);

    // Homogeneous part of the given degree (0..3).
    ChowClass part(int degree) const;
    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a);
ChowClass operator*(const Rational& s, const ChowClass& a);
ChowClass multiply(const ChowClass& a, const ChowClass& b);
inline ChowClass operator*(const ChowClass& a, const ChowClass& b) { return multiply(a, b); }

Rational degree(const ChowClass& a);

struct ChernData {
    int rank = 0;
    ChowClass c1, c2, c3;

    static ChernData line_bundle(const Rational& a, const Rational& b);
    static ChernData instanton(long k);

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

// Chern data of E(a h1 + b h2) for rank 2. Throws std::invalid_argument otherwise.
ChernData twist_chern(const ChernData& c, long a, long b);

// Hirzebruch-Riemann-Roch on F.
Rational euler_char(const ChernData& c);

// chi(L) for L = O(a h1 + b h2), closed form.
Rational line_bundle_rr(long a, long b);

struct InstantonNumerology {
    long k;
    Rational chi_minus_h;   // chi(E(-h))
    Rational chi;           // chi(E)
    Rational chi_minus_hi;  // chi(E(-h_i)), same for i = 1, 2
    Rational chi_plus_hi;   // chi(E(h_i))
    Rational chi_plus_h;    // chi(E(h))
};

InstantonNumerology instanton_numerology(long k);

// dim Ext^1(E, E) = 1 - chi(E ⊗ E^*) for a simple instanton of charge k with h^2 = 0 and Ext^3 = 0.
long instanton_ext1(long k);

}  // namespace flaglab::chow
