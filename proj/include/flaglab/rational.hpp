#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flaglab {

// mpq_class canonicalizes on every arithmetic op; values built by hand from
// num/den must go through make_rational so the invariant holds.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q", "p", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Always "num/den", integers included ("3/1").
std::string to_string(const Rational& q);

// Least common multiple of the denominators; 1 for an empty range.
Integer common_denominator(const Vector& v);

// Scale v to a primitive integer vector with the first nonzero entry positive.
// The zero vector is returned unchanged.
std::vector<Integer> primitive_integer(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace flaglab
