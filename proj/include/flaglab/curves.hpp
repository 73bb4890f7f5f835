#pragma once

#include "flaglab/graded.hpp"
#include "flaglab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flaglab::curves {

// Degree profile of the zero locus of a section of E(h_i); parts sorted, a
// repeated entry may stand for a multiple structure.
struct MultiIndex {
    long k = 0;
    std::vector<long> parts;

    long ell() const;  // number of zero parts (lines)
    std::string to_string() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// Throws std::invalid_argument if the multi-index constraints fail.
void validate(const MultiIndex& m);

std::vector<MultiIndex> enumerate_multi_indices(long k);

enum class ExtensionKind { Primitive, ThickCompleteIntersection };

// A (possibly non-reduced) structure on the smooth rational curve of class
// h_i^2 + a h_j^2. Primitive means primitive of type O_C; thick means
// pi^{-1}(Z) for a plane complete intersection Z of degrees (p, q), lines only.
struct ExtensionSpec {
    int side = 1;  // i
    long a = 0;
    long multiplicity = 1;
    ExtensionKind kind = ExtensionKind::Primitive;
    long p_deg = 1, q_deg = 1;  // thick only; multiplicity must be p*q
};

using Configuration = std::vector<ExtensionSpec>;

// One reduced component per part.
Configuration reduced_configuration(const MultiIndex& m, int side = 1);
// Equal parts merged into one primitive structure of that multiplicity.
Configuration merged_configuration(const MultiIndex& m, int side = 1);

// For a single quasi-primitive component of multiplicity m: alpha >= -1 and
// d_1..d_{m-1} >= 0 describe the graded pieces L_j = O(j alpha + d_j).
struct QuasiParams {
    long alpha = 0;
    std::vector<long> d;
};

// Arithmetic genus; components are disjoint. Throws std::invalid_argument on a
// malformed configuration.
long genus(const Configuration& config, const std::optional<QuasiParams>& quasi = std::nullopt);

// chi(O_Y(-h_j)) summed over components as -mult + 1 - p_a.
long chi_minus_hj(const Configuration& config);

struct NormalCohomology {
    long h0 = 0, h1 = 0;
};

NormalCohomology normal_bundle_cohomology(const Configuration& config);

long hilbert_component_lower_bound(long k);

enum class SpecialClass { SpecialIrreducible, SpecialReducible, NotSpecial };
std::string special_name(SpecialClass c);

// l = 1 is tested first, so k = 1 reports SpecialIrreducible.
SpecialClass classify_special_config(const MultiIndex& m);

enum class Stability { MuStable, ProperlySemistable };

struct SectionBound {
    long value;
    bool is_upper_bound;  // true: h^0(E(h_i)) <= value; false: equality
};

SectionBound section_count(long k, Stability s);

// h^0(I_Y(2h_i)) for the reduced curve of the multi-index: plane conics
// through the projected curves and the projected lines' points.
long ideal_h0_2hi(const MultiIndex& m);

// Multiple structure on the conic x0 = y0 = 0 inside the del Pezzo surface
// x0 theta + y0 zeta + alpha x0 y0 = 0 with theta = l1 y1 + l2 y2, zeta = m1 x1 + m2 x2.
struct ConicDoubleIdeal {
    Vector lambda;  // (l1, l2)
    Vector mu;      // (m1, m2)
    Rational alpha;
    long multiplicity = 2;
};

struct ConicIdealResult {
    std::vector<graded::BigradedForm> generators;  // del Pezzo form first, then (x0, y0)^multiplicity
    bool smooth = false;  // the containing del Pezzo surface is smooth
};

// Throws std::invalid_argument if lambda or mu vanish or multiplicity < 2.
ConicIdealResult double_conic_ideal(const ConicDoubleIdeal& d);

// Whether f lies in the ideal, by linear algebra in f's bidegree.
bool ideal_contains(const std::vector<graded::BigradedForm>& generators, const graded::BigradedForm& f);

enum class LineFamily { Lambda1, Lambda2 };  // lines of class h1^2, resp. h2^2

long line_restriction_degree(long alpha, long beta, LineFamily family);

}  // namespace flaglab::curves
