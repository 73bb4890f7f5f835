#include "flaglab/delpezzo.hpp"

#include "flaglab/graded.hpp"
#include "flaglab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace flaglab::delpezzo {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Smooth: return "Smooth";
        case Kind::A1: return "A1";
        case Kind::A2: return "A2";
        case Kind::ReducibleConicSmooth: return "ReducibleConicSmooth";
        case Kind::ReducibleConicDegenerate: return "ReducibleConicDegenerate";
    }
    return "?";
}

namespace {

void require_3x3(const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("del Pezzo matrix must be 3x3");
}

Vector primitive(const Vector& v) {
    auto z = primitive_integer(v);
    return Vector(z.begin(), z.end());
}

}  // namespace

DelPezzoMatrix normalize(const Matrix& raw) {
    require_3x3(raw);
    if (determinant(raw) == 0) return {raw};
    for (const auto& f : eigen_structure(raw)) {
        if (!f.value) continue;
        Matrix a = raw;
        for (int i = 0; i < 3; ++i) a(i, i) -= *f.value;
        return {a};  // rational eigenvalues come first, ascending
    }
    throw std::domain_error("normalize: characteristic polynomial has no rational root");
}

DelPezzoClass classify(const DelPezzoMatrix& m) {
    const Matrix& a = m.a;
    require_3x3(a);
    if (determinant(a) != 0) throw std::invalid_argument("classify: matrix is not normalized (det != 0)");
    if (a.is_zero()) throw std::invalid_argument("classify: zero matrix defines no surface");

    DelPezzoClass c;
    c.eigen = eigen_structure(a);
    c.fiber_count = distinct_eigenvalue_count(c.eigen);

    for (const auto& f : c.eigen) {
        if (!f.value || *f.geometric < 2) continue;
        // A - lambda I has rank 1: factor it as u v^T.
        Matrix b = a;
        for (int i = 0; i < 3; ++i) b(i, i) -= *f.value;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (b(i, j) != 0 && b(pi, pj) == 0) { pi = i; pj = j; }
        Vector u = b.col(pj), v = b.row(pi);
        c.line = primitive(u);
        c.point = primitive(v);
        // v on the line u.x = 0  <=>  trace(u v^T) = 0  <=>  b nilpotent
        bool degenerate = dot(u, v) == 0;
        c.kind = degenerate ? Kind::ReducibleConicDegenerate : Kind::ReducibleConicSmooth;
        c.boundary_flag = degenerate;
        return c;
    }
    switch (c.fiber_count) {
        case 3: c.kind = Kind::Smooth; break;
        case 2: c.kind = Kind::A1; break;
        default: c.kind = Kind::A2; break;
    }
    return c;
}

std::vector<int> expected_pattern(Kind k) {
    switch (k) {
        case Kind::Smooth: return {1, 1, 1};
        case Kind::A1: return {2, 1};
        case Kind::A2: return {3};
        default: return {};
    }
}

std::vector<int> PointScheme::pattern() const {
    std::vector<int> p;
    for (const auto& s : points)
        for (int i = 0; i < s.minimal_polynomial.degree(); ++i) p.push_back(s.multiplicity);
    std::sort(p.rbegin(), p.rend());
    return p;
}

namespace {

using graded::BigradedForm;

// (R/I)_d for the ideal of minors, as a reduction onto non-pivot monomials.
struct Quotient {
    int d;
    Matrix rows;                       // RREF of I_d
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free;     // standard monomials

    Vector reduce(Vector w) const {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Rational f = w[pivots[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * rows(i, j);
        }
        Vector out;
        for (auto j : free) out.push_back(w[j]);
        return out;
    }
};

Quotient quotient(const std::vector<BigradedForm>& gens, int d) {
    std::vector<Vector> vecs;
    for (const auto& g : gens) vecs.push_back(graded::coordinates(g));
    std::size_t n = graded::basis(d, 0)->size();
    Quotient q;
    q.d = d;
    q.rows = rref(Matrix::from_rows(vecs, n), &q.pivots);
    std::vector<bool> is_piv(n, false);
    for (auto p : q.pivots) is_piv[p] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j]) q.free.push_back(j);
    return q;
}

// Multiplication by a linear form (R/I)_2 -> (R/I)_3.
Matrix mult_matrix(const Vector& l, const Quotient& q2, const Quotient& q3) {
    BigradedForm lf = BigradedForm::linear_x(l);
    auto b2 = graded::basis(2, 0);
    Matrix m(q3.free.size(), q2.free.size());
    for (std::size_t j = 0; j < q2.free.size(); ++j) {
        Vector col = q3.reduce(graded::coordinates(lf * BigradedForm::monomial(b2->monomials[q2.free[j]])));
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

Vector moment_form(long t) { return {1, t, t * t}; }

Matrix poly_at(const UniPoly& g, const Matrix& t) {
    const std::size_t n = t.rows();
    Matrix acc(n, n);
    for (int k = g.degree(); k >= 0; --k) {
        acc = acc * t;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += g.coeff(k);
    }
    return acc;
}

// Matrix of t restricted to the invariant subspace spanned by the columns of g.
Matrix restrict_to(const Matrix& t, const Matrix& g) {
    Matrix r(g.cols(), g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        auto c = solve(g, t * g.col(j));
        if (!c) throw std::logic_error("blown_up_points: subspace is not invariant");
        for (std::size_t i = 0; i < g.cols(); ++i) r(i, j) = (*c)[i];
    }
    return r;
}

}  // namespace

PointScheme blown_up_points(const DelPezzoMatrix& m) {
    const Matrix& a = m.a;
    require_3x3(a);
    // rows x and A^T x of the 2x3 matrix whose minors cut out the points
    std::array<BigradedForm, 3> x, ax;
    for (int i = 0; i < 3; ++i) {
        Vector e(3), col(3);
        e[i] = 1;
        for (int j = 0; j < 3; ++j) col[j] = a(j, i);
        x[i] = BigradedForm::linear_x(e);
        ax[i] = BigradedForm::linear_x(col);
    }
    std::vector<BigradedForm> q;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) q.push_back(x[i] * ax[j] - x[j] * ax[i]);
    std::vector<BigradedForm> q3;
    for (int k = 0; k < 3; ++k)
        for (const auto& g : q) q3.push_back(x[k] * g);

    Quotient r2 = quotient(q, 2), r3 = quotient(q3, 3);
    if (r2.free.size() != 3 || r3.free.size() != 3)
        throw std::invalid_argument("blown_up_points: minors do not cut out a length-3 scheme (reducible surface)");

    PointScheme out;
    Matrix m0inv;
    for (long d = 0;; ++d) {
        if (d > 8) throw std::logic_error("blown_up_points: no admissible denominator form");
        Matrix m0 = mult_matrix(moment_form(d), r2, r3);
        if (rank(m0) < 3) continue;
        m0inv = inverse(m0);
        out.sep_den = moment_form(d);
        break;
    }
    // At most two bad choices per pair of points, so 7 candidates suffice.
    Matrix t;
    int best = -1;
    for (long c = 1, tried = 0; tried < 7; ++c) {
        Vector l = moment_form(c);
        if (l == out.sep_den) continue;
        ++tried;
        Matrix cand = m0inv * mult_matrix(l, r2, r3);
        int distinct = distinct_eigenvalue_count(eigen_structure(cand));
        if (distinct > best) {
            best = distinct;
            t = cand;
            out.sep_num = l;
        }
    }

    std::array<Matrix, 3> tx;
    for (int i = 0; i < 3; ++i) {
        Vector e(3);
        e[i] = 1;
        tx[i] = m0inv * mult_matrix(e, r2, r3);
    }

    // On 3x3 the cofactor left after removing rational roots is irreducible.
    for (const auto& f : eigen_structure(t)) {
        const UniPoly& g = f.factor;
        const int mult = f.algebraic;
        UniPoly gm = UniPoly::constant(1);
        for (int i = 0; i < mult; ++i) gm = gm * g;
        Matrix gbasis = Matrix::from_columns(kernel_basis(poly_at(gm, t)).basis_vectors(), 3);
        SchemePoint sp;
        sp.minimal_polynomial = g;
        sp.multiplicity = mult;
        if (g.degree() == 1) {
            Vector p(3);
            for (int i = 0; i < 3; ++i) {
                p[i] = trace(restrict_to(tx[i], gbasis)) / static_cast<long>(gbasis.cols());
                sp.coords[i] = UniPoly::constant(p[i]);
            }
            sp.rational_point = primitive(p);
        } else {
            if (mult != 1) throw std::logic_error("blown_up_points: non-reduced irrational orbit");
            // T is cyclic on this block, so each x_i/l0 is a polynomial in T there.
            Matrix tg = restrict_to(t, gbasis);
            const std::size_t e = tg.rows();
            std::vector<Matrix> powers{Matrix::identity(e)};
            for (std::size_t k = 1; k < e; ++k) powers.push_back(powers.back() * tg);
            Matrix sys(e * e, e);
            for (std::size_t k = 0; k < e; ++k)
                for (std::size_t r = 0; r < e * e; ++r) sys(r, k) = powers[k].entries()[r];
            for (int i = 0; i < 3; ++i) {
                auto coeffs = solve(sys, restrict_to(tx[i], gbasis).entries());
                if (!coeffs) throw std::logic_error("blown_up_points: coordinate is not a polynomial in theta");
                sp.coords[i] = UniPoly(*coeffs);
            }
        }
        out.points.push_back(std::move(sp));
    }
    return out;
}

PicRestriction pic_restriction(SurfaceType type, long d, Side side) {
    PicRestriction p;
    auto swap_sides = [](PicRestriction r) {
        std::swap(r.image_h1, r.image_h2);
        return r;
    };
    switch (type) {
        case SurfaceType::Smooth: {
            if (d < 0) throw std::invalid_argument("pic_restriction: d must be >= 0");
            if (side == Side::Pi2) {
                long q = d * d + d + 1;
                p.basis.push_back("l");
                for (long i = 1; i <= q; ++i) p.basis.push_back("e" + std::to_string(i));
                p.image_h1.assign(q + 1, -1);
                p.image_h1[0] = d + 1;
                p.image_h2.assign(q + 1, 0);
                p.image_h2[0] = 1;
                p.form = Matrix(q + 1, q + 1);
                p.form(0, 0) = 1;
                for (long i = 1; i <= q; ++i) p.form(i, i) = -1;
                return p;
            }
            if (d == 0) {
                p.basis = {"C0", "f"};
                p.image_h1 = {0, 1};
                p.image_h2 = {1, 1};
                p.form = Matrix{{-1, 1}, {1, 0}};
                return p;
            }
            if (d == 1) {
                p.basis = {"l", "e1", "e2", "e3"};
                p.image_h1 = {1, 0, 0, 0};
                p.image_h2 = {2, -1, -1, -1};
                p.form = Matrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
                return p;
            }
            throw std::invalid_argument("pic_restriction: first projection only described for d = 0, 1");
        }
        case SurfaceType::A1:
            p.basis = {"l", "f", "g"};
            p.image_h1 = {2, -2, -1};
            p.image_h2 = {1, 0, 0};
            p.form = Matrix{{1, 0, 0}, {0, Rational(-1, 2), 0}, {0, 0, -1}};
            return side == Side::Pi2 ? p : swap_sides(p);
        case SurfaceType::A2:
            p.basis = {"l", "g"};
            p.image_h1 = {2, -3};
            p.image_h2 = {1, 0};
            p.form = Matrix{{1, 0}, {0, Rational(-1, 3)}};
            return side == Side::Pi2 ? p : swap_sides(p);
    }
    throw std::invalid_argument("pic_restriction: unsupported surface");
}

}  // namespace flaglab::delpezzo
