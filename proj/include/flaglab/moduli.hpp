#pragma once

#include "flaglab/matrix.hpp"
#include "flaglab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flaglab::moduli {

struct Term {
    std::string name;
    long dim;
};

struct ModuliTable {
    long k = 0;
    long ext1 = 0;
    // Unset for k = 1, where every instanton is special and the components below do not apply.
    bool exceptional = false;
    std::optional<long> dim_MI_s_prime, dim_MI_s_doubleprime, dim_MI_i, component_lower_bound;
    std::vector<Term> s_prime_terms, s_doubleprime_terms, i_terms;
};

// Every entry is recomputed from its decomposition and compared with the closed form;
// std::logic_error on mismatch, std::invalid_argument for k < 1.
ModuliTable dimension_table(long k);

// 2 deg(Y) for an elliptic curve of class (k+3) h1h2; std::invalid_argument for k < 1.
long elliptic_family_dimension(long k);

// h(t) = 1 - 2t exp(pi i (1-t)), the determinant of the path matrix A_t.
struct ComplexValue {
    std::string re, im;
    bool exact = false;
};

struct Enclosure {
    double re_lo, re_hi, im_lo, im_hi;  // rounded outward
    double abs_lo;                       // lower bound of |h|
};

// Rigorous enclosure of h(t) for rational t in [0,1].
Enclosure h_enclosure(const Rational& t);

// h(t) exactly when exp(pi i (1-t)) is a fourth root of unity, i.e. 2t is an integer.
std::optional<std::pair<Rational, Rational>> exact_h(const Rational& t);

// A_t with g(t) = t exp(pi i (1-t)) real, i.e. t in {0, 1}.
Matrix path_matrix(const Rational& t);

struct PathWitness {
    std::vector<Rational> t_samples;
    std::vector<ComplexValue> h_values;
    double min_abs_lower = 0;
    bool nonvanishing = false;        // every enclosure of |h| lies above 1/100
    bool imaginary_nonzero = false;   // Im h excludes 0 for every sample in (0,1)
    bool endpoints_exact = false;     // h(0) = 1 and h(1) = -1 exactly
    bool endpoint_swap_verified = false;

    bool ok() const { return nonvanishing && imaginary_nonzero && endpoints_exact && endpoint_swap_verified; }
};

// Samples t = i/(n-1). std::invalid_argument for n < 2.
PathWitness path_witness(std::size_t n_samples);

}  // namespace flaglab::moduli
