#pragma once

#include "flaglab/matrix.hpp"
#include "flaglab/rational.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace flaglab::graded {

// Exponents of x0 x1 x2 y0 y1 y2.
struct Monomial {
    std::array<int, 6> e{};

    int deg_x() const { return e[0] + e[1] + e[2]; }
    int deg_y() const { return e[3] + e[4] + e[5]; }
    bool normal() const { return e[0] == 0 || e[3] == 0; }
    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

Monomial x_var(int i);
Monomial y_var(int i);

// A bihomogeneous form kept in normal form: no monomial divisible by x0 y0.
class BigradedForm {
public:
    BigradedForm(int a = 0, int b = 0);
    // Reduces the given terms to normal form; every monomial must have bidegree (a,b).
    BigradedForm(int a, int b, const std::map<Monomial, Rational>& terms);

    static BigradedForm constant(const Rational& c);
    static BigradedForm monomial(const Monomial& m, const Rational& c = 1);
    // c0 x0 + c1 x1 + c2 x2, resp. in y.
    static BigradedForm linear_x(const Vector& c);
    static BigradedForm linear_y(const Vector& c);

    int a() const { return a_; }
    int b() const { return b_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    Rational evaluate(const Vector& x, const Vector& y) const;
    std::string to_string() const;

    friend bool operator==(const BigradedForm&, const BigradedForm&) = default;

private:
    int a_, b_;
    std::map<Monomial, Rational> terms_;
};

BigradedForm operator+(const BigradedForm& f, const BigradedForm& g);
BigradedForm operator-(const BigradedForm& f, const BigradedForm& g);
BigradedForm operator*(const Rational& s, const BigradedForm& f);
BigradedForm multiply_forms(const BigradedForm& f, const BigradedForm& g);
inline BigradedForm operator*(const BigradedForm& f, const BigradedForm& g) { return multiply_forms(f, g); }

// Applies x0 y0 -> -x1 y1 - x2 y2 until nothing is divisible by x0 y0.
std::map<Monomial, Rational> reduce(const std::map<Monomial, Rational>& terms);

// Normal-form monomial basis of H^0(O_F(a h1 + b h2)), sorted; memoized.
struct Basis {
    int a = 0, b = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    std::size_t size() const { return monomials.size(); }
};

std::shared_ptr<const Basis> basis(int a, int b);
std::size_t basis_size_closed_form(int a, int b);

Vector coordinates(const BigradedForm& f);
BigradedForm from_coordinates(int a, int b, const Vector& v);

// Matrix of multiplication by g from (a,b) into (a+g.a, b+g.b), in the bases above.
Matrix multiplication_matrix(const BigradedForm& g, int a, int b);

struct CohomologyTable {
    std::array<Integer, 4> h{};
    Integer euler() const { return h[0] - h[1] + h[2] - h[3]; }
    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// Input order does not matter: the two factors are swapped by an automorphism of F.
CohomologyTable line_bundle_cohomology(long alpha1, long alpha2);

struct Twist {
    long a, b;
    int multiplicity;
};

struct ResolutionTerm {
    int degree;  // 0 is the O_F (or O_F^m) term that surjects onto the sheaf
    std::vector<Twist> twists;
};

struct ResolutionSpec {
    std::string name;
    std::vector<ResolutionTerm> terms;  // degrees strictly decreasing
};

// sum_d (-1)^d sum chi(O(a,b))^mult.
Rational complex_euler(const ResolutionSpec& r);

enum class Neighborhood {
    Line,                  // reduced line, class h_i^2
    Conic,                 // smooth conic, class h1 h2
    LineThick,             // param = multiplicity m >= 1
    FirstNeighborhood,     // of a curve of class h_i^2 + a h_j^2, param = a >= 1
    LineFirstNeighborhood  // L^(1), the first neighbourhood of a line
};

// side picks i in {1,2}; j is the other index.
ResolutionSpec neighborhood_resolution(Neighborhood kind, long param = 1, int side = 1);

}  // namespace flaglab::graded
