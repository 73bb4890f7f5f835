#pragma once

#include "flaglab/eigen.hpp"
#include "flaglab/matrix.hpp"
#include "flaglab/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flaglab::delpezzo {

// A hyperplane section sum a_ij x_i y_j = 0 of F. Adding a multiple of the
// identity gives the same surface, so the stored matrix is shifted to det = 0.
struct DelPezzoMatrix {
    Matrix a;
};

enum class Kind { Smooth, A1, A2, ReducibleConicSmooth, ReducibleConicDegenerate };

std::string kind_name(Kind k);

struct DelPezzoClass {
    Kind kind;
    std::vector<EigenFactor> eigen;
    int fiber_count = 0;        // distinct eigenvalues = points in a general fiber of the degree-3 map
    bool boundary_flag = false; // triple eigenvalue with a 2-dimensional eigenspace
    // Reducible only: A - lambda I = u v^T, surface = {u.x = 0} ∪ {v.y = 0}.
    std::optional<Vector> point;  // v, the point every line of the second component passes through
    std::optional<Vector> line;   // u, coefficients of the line u.x = 0
};

// Subtracts the smallest rational eigenvalue. Throws std::domain_error when
// there is none, std::invalid_argument on a non-3x3 input.
DelPezzoMatrix normalize(const Matrix& raw);

// Throws std::invalid_argument if det != 0 or the matrix is zero (the equation
// then vanishes on all of F).
DelPezzoClass classify(const DelPezzoMatrix& m);

// One Galois orbit of points of the blown-up scheme. theta is a root of
// minimal_polynomial and is the value of sep_num/sep_den at the points; each
// coordinate is a polynomial in theta of degree < deg(minimal_polynomial).
struct SchemePoint {
    UniPoly minimal_polynomial;
    int multiplicity = 0;  // length of the scheme at each conjugate point
    std::array<UniPoly, 3> coords;
    std::optional<Vector> rational_point;  // set when the orbit is a single rational point
};

struct PointScheme {
    Vector sep_den, sep_num;  // linear forms used to separate the points
    std::vector<SchemePoint> points;
    // Multiplicities of the geometric points, non-increasing; sums to 3.
    std::vector<int> pattern() const;
};

// Zero scheme of the 2x2 minors of [x ; A^T x], i.e. the points x with A^T x ∥ x.
// Throws std::invalid_argument on a reducible surface (the minors share a factor).
PointScheme blown_up_points(const DelPezzoMatrix& m);

// Multiplicity pattern expected by the eigenvalue classification.
std::vector<int> expected_pattern(Kind k);

enum class SurfaceType { Smooth, A1, A2 };
enum class Side { Pi1, Pi2 };

struct PicRestriction {
    std::vector<std::string> basis;
    std::vector<long> image_h1, image_h2;
    Matrix form;  // intersection form on the basis
    int target_rank() const { return static_cast<int>(basis.size()); }
};

// Smooth: S_(1,d) in |h1 + d h2|; pi2 for any d >= 0, pi1 for d = 0 or 1.
// A1/A2: singular S_(1,1), either side. Throws std::invalid_argument otherwise.
PicRestriction pic_restriction(SurfaceType type, long d, Side side);

}  // namespace flaglab::delpezzo
