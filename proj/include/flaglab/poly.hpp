#pragma once

#include "flaglab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace flaglab {

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t deg);
    // t - r
    static UniPoly linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;
    UniPoly monic() const;
    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& s, const UniPoly& a);

// Euclidean division; throws std::domain_error when b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Yun: f = c * prod g_i^i with g_i squarefree and pairwise coprime.
// Returns (g_i, i) for non-constant g_i, each g_i monic.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Distinct rational roots, ascending. Exact Sturm isolation; no factoring.
std::vector<Rational> rational_roots(const UniPoly& f);

}  // namespace flaglab
