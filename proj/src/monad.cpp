#include "flaglab/monad.hpp"

#include "flaglab/graded.hpp"
#include "flaglab/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flaglab::monad {

namespace {

Vector cross(const Vector& a, const Vector& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const Vector& a, const Vector& b) { return is_zero(cross(a, b)); }

std::vector<const Matrix*> all_columns(const MonadData& m)
{
    std::vector<const Matrix*> cols;
    for (const auto& c : m.x_columns) cols.push_back(&c);
    for (const auto& c : m.y_columns) cols.push_back(&c);
    return cols;
}

Vector column_at(const MonadData& m, std::size_t c, const Vector& x, const Vector& y)
{
    const std::size_t k = static_cast<std::size_t>(m.k);
    return c < k ? m.x_columns[c] * x : m.y_columns[c - k] * y;
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) { return intersect(u, v).dim(); }

}  // namespace

void check_point(const FlagPoint& p)
{
    if (p.x.size() != 3 || p.y.size() != 3) throw std::invalid_argument("flag point: coordinates must be triples");
    if (is_zero(p.x) || is_zero(p.y)) throw std::invalid_argument("flag point: zero coordinate vector");
    if (dot(p.x, p.y) != 0) throw std::invalid_argument("flag point: x.y != 0");
}

bool non_aligned(const FlagPoint& p, const FlagPoint& q)
{
    return !proportional(p.x, q.x) && !proportional(p.y, q.y);
}

void check_conic(const ConicParam& c)
{
    if (c.x_param.rows() != 3 || c.x_param.cols() != 2 || c.y_param.rows() != 3 || c.y_param.cols() != 2)
        throw std::invalid_argument("conic: parametrizations must be 3x2");
    if (rank(c.x_param) != 2 || rank(c.y_param) != 2) throw std::invalid_argument("conic: constant parametrization");
    // x.y = s^2 (x0.y0) + s t (x0.y1 + x1.y0) + t^2 (x1.y1)
    const Vector x0 = c.x_param.col(0), x1 = c.x_param.col(1), y0 = c.y_param.col(0), y1 = c.y_param.col(1);
    if (dot(x0, y0) != 0 || dot(x1, y1) != 0 || dot(x0, y1) + dot(x1, y0) != 0)
        throw std::invalid_argument("conic: not contained in F");
}

Matrix standard_form(std::size_t n)
{
    if (n % 2) throw std::invalid_argument("standard_form: odd size");
    Matrix j(n, n);
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
    }
    return j;
}

void check_shape(const MonadData& m)
{
    if (m.k < 1) throw std::invalid_argument("monad: charge must be positive");
    const std::size_t n = m.dim_w(), k = static_cast<std::size_t>(m.k);
    if (m.J.rows() != n || m.J.cols() != n) throw std::invalid_argument("monad: J has the wrong size");
    if (m.x_columns.size() != k || m.y_columns.size() != k)
        throw std::invalid_argument("monad: expected k columns on each side");
    for (const Matrix* c : all_columns(m))
        if (c->rows() != n || c->cols() != 3) throw std::invalid_argument("monad: column of the wrong shape");
    if (m.J.transpose() != Rational(-1) * m.J) throw std::invalid_argument("monad: J is not skew");
    if (rank(m.J) != n) throw std::invalid_argument("monad: J is singular");
}

Matrix evaluate(const MonadData& m, const FlagPoint& p)
{
    const std::size_t n = m.dim_w(), cols = 2 * static_cast<std::size_t>(m.k);
    Matrix a(n, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Vector v = column_at(m, c, p.x, p.y);
        for (std::size_t r = 0; r < n; ++r) a(r, c) = v[r];
    }
    return a;
}

std::optional<FormWitness> exact_check(const MonadData& m)
{
    check_shape(m);
    const std::size_t n = m.dim_w(), k = static_cast<std::size_t>(m.k);
    const auto cols = all_columns(m);
    auto forms = [&](const Matrix& c, bool x_side) {
        std::vector<graded::BigradedForm> f;
        for (std::size_t r = 0; r < n; ++r)
            f.push_back(x_side ? graded::BigradedForm::linear_x(c.row(r)) : graded::BigradedForm::linear_y(c.row(r)));
        return f;
    };
    std::vector<std::vector<graded::BigradedForm>> a, ja;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        a.push_back(forms(*cols[c], c < k));
        ja.push_back(forms(m.J * *cols[c], c < k));
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i; j < cols.size(); ++j) {
            const int bi = i < k ? 1 : 0, bj = j < k ? 1 : 0;
            graded::BigradedForm acc(bi + bj, 2 - bi - bj);
            for (std::size_t r = 0; r < n; ++r)
                if (!a[i][r].is_zero() && !ja[j][r].is_zero()) acc = acc + a[i][r] * ja[j][r];
            if (!acc.is_zero()) return FormWitness{i, j, acc.a(), acc.b(), acc.to_string()};
        }
    return std::nullopt;
}

Matrix section_map(const MonadData& m)
{
    const std::size_t n = m.dim_w();
    Matrix s(6 * static_cast<std::size_t>(m.k), n);
    std::size_t row = 0;
    for (const Matrix* c : all_columns(m)) {
        const Matrix g = c->transpose() * m.J;
        for (std::size_t i = 0; i < 3; ++i, ++row)
            for (std::size_t r = 0; r < n; ++r) s(row, r) = g(i, r);
    }
    return s;
}

std::vector<std::string> ValidationReport::failures() const
{
    std::vector<std::string> out;
    if (!exact_ok && exact_witness) {
        std::ostringstream os;
        os << "A^T J A != 0: block (" << exact_witness->i << "," << exact_witness->j << ") bidegree ("
           << exact_witness->a << "," << exact_witness->b << ") = " << exact_witness->form;
        out.push_back(os.str());
    }
    if (rank_failures) {
        std::ostringstream os;
        os << "rank A(p) < 2k at " << rank_failures << " of " << samples << " points";
        if (rank_witness) {
            os << ", e.g. x = (";
            for (std::size_t i = 0; i < 3; ++i) os << (i ? "," : "") << rank_witness->x[i].get_str();
            os << ") y = (";
            for (std::size_t i = 0; i < 3; ++i) os << (i ? "," : "") << rank_witness->y[i].get_str();
            os << ")";
        }
        out.push_back(os.str());
    }
    if (h0) out.push_back("h0(E) = " + std::to_string(h0));
    return out;
}

ValidationReport validate(const MonadData& m, std::size_t samples, std::uint64_t seed)
{
    check_shape(m);
    ValidationReport rep;
    rep.exact_witness = exact_check(m);
    rep.exact_ok = !rep.exact_witness;
    rep.samples = samples;

    const std::size_t full = 2 * static_cast<std::size_t>(m.k);
    std::vector<char> bad(samples, 0);
    std::vector<FlagPoint> points(samples);
    parallel_for(samples, [&](std::size_t i) {
        auto g = substream(seed, i);
        points[i] = random_flag_point(g);
        bad[i] = rank(evaluate(m, points[i])) < full;
    });
    for (std::size_t i = 0; i < samples; ++i)
        if (bad[i]) {
            if (!rep.rank_failures) rep.rank_witness = points[i];
            ++rep.rank_failures;
        }

    rep.h0 = h0_twist(m, 0, 0);
    rep.section_rank = rank(section_map(m));
    rep.h1 = 6 * static_cast<std::size_t>(m.k) - rep.section_rank;
    return rep;
}

Fiber fiber(const MonadData& m, const FlagPoint& p)
{
    check_point(p);
    const Matrix a = evaluate(m, p);
    if (rank(a) != 2 * static_cast<std::size_t>(m.k))
        throw std::domain_error("fiber: A(p) drops rank; p is in the degeneracy locus");
    Fiber f{Subspace::column_space(a), Subspace(m.dim_w())};
    f.u_ann = annihilator(f.u, m.J);
    return f;
}

ConicParam conic_through(const FlagPoint& p, const FlagPoint& q)
{
    check_point(p);
    check_point(q);
    if (!non_aligned(p, q)) throw std::invalid_argument("conic_through: aligned points");
    const Rational pq = dot(p.x, q.y), qp = dot(q.x, p.y);
    if (pq == 0 || qp == 0) throw std::domain_error("conic_through: the conic through these points is singular");
    const Rational mu = -pq / qp;
    ConicParam c{Matrix(3, 2), Matrix(3, 2)};
    for (std::size_t i = 0; i < 3; ++i) {
        c.x_param(i, 0) = p.x[i];
        c.x_param(i, 1) = q.x[i];
        c.y_param(i, 0) = mu * p.y[i];
        c.y_param(i, 1) = q.y[i];
    }
    return c;
}

std::size_t splitting_type(const MonadData& m, const FlagPoint& p, const FlagPoint& q)
{
    check_point(p);
    check_point(q);
    if (!non_aligned(p, q)) throw std::invalid_argument("splitting_type: aligned points");
    return intersection_dim(fiber(m, p).u_ann, fiber(m, q).u);
}

std::size_t pairing_rank(const MonadData& m, const FlagPoint& p, const FlagPoint& q)
{
    return rank(evaluate(m, p).transpose() * m.J * evaluate(m, q));
}

std::size_t splitting_oracle(const MonadData& m, const ConicParam& c)
{
    check_shape(m);
    check_conic(c);
    // A restricted to C is A_s s + A_t t.
    const Matrix as = evaluate(m, {c.x_param.col(0), c.y_param.col(0)});
    const Matrix at = evaluate(m, {c.x_param.col(1), c.y_param.col(1)});
    const Matrix gs = as.transpose() * m.J, gt = at.transpose() * m.J;
    const std::size_t n = m.dim_w(), h = 2 * static_cast<std::size_t>(m.k);

    // W x S_d -> H* x S_{d+1}; coordinates of S_d are s^(d-i) t^i.
    auto phi = [&](std::size_t d) {
        Matrix out(h * (d + 2), n * (d + 1));
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t c2 = 0; c2 < h; ++c2)
                for (std::size_t r = 0; r < n; ++r) {
                    out(c2 * (d + 2) + i, i * n + r) += gs(c2, r);
                    out(c2 * (d + 2) + i + 1, i * n + r) += gt(c2, r);
                }
        return out;
    };
    const Subspace k0 = kernel_basis(phi(0));
    const Subspace k1 = kernel_basis(phi(1));
    if (k0.dim() >= 3) return k0.dim() - 1;
    if (k0.dim() != 2) throw std::logic_error("splitting_oracle: restricted bundle has too few sections");

    // Cokernel of S_1 x H0(E_C) -> H0(E_C(1)), computed modulo the image of H x O(-1).
    std::vector<Vector> gens;
    for (const Vector& w : k0.basis_vectors()) {
        Vector sw(2 * n), tw(2 * n);
        for (std::size_t r = 0; r < n; ++r) {
            sw[r] = w[r];
            tw[n + r] = w[r];
        }
        gens.push_back(sw);
        gens.push_back(tw);
    }
    for (std::size_t c2 = 0; c2 < h; ++c2) {
        Vector v(2 * n);
        for (std::size_t r = 0; r < n; ++r) {
            v[r] = as(r, c2);
            v[n + r] = at(r, c2);
        }
        gens.push_back(v);
    }
    const std::size_t image = Subspace::span(gens, 2 * n).dim();
    if (image > k1.dim()) throw std::logic_error("splitting_oracle: image exceeds the kernel");
    const std::size_t coker = k1.dim() - image;
    if (coker > 1) throw std::logic_error("splitting_oracle: inconsistent restricted bundle");
    return coker;
}

TwistMaps twist_maps(const MonadData& m, int a, int b)
{
    check_shape(m);
    if (a < 0 || b < 0) throw std::invalid_argument("twist_maps: negative twist");
    const std::size_t n = m.dim_w(), k = static_cast<std::size_t>(m.k);
    const auto src = graded::basis(a, b);
    const auto up_x = graded::basis(a + 1, b), up_y = graded::basis(a, b + 1);
    const auto lo_x = graded::basis(a - 1, b), lo_y = graded::basis(a, b - 1);

    TwistMaps t{Matrix(n * src->size(), k * (lo_x->size() + lo_y->size())),
                Matrix(k * (up_x->size() + up_y->size()), n * src->size())};
    auto put = [](Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) dst(r0 + i, c0 + j) = blk(i, j);
    };
    std::size_t lo_col = 0, up_row = 0;
    for (std::size_t c = 0; c < 2 * k; ++c) {
        const bool xs = c < k;
        const Matrix& col = xs ? m.x_columns[c] : m.y_columns[c - k];
        const Matrix jcol = m.J * col;
        const int la = xs ? a - 1 : a, lb = xs ? b : b - 1;
        const std::size_t lo_size = (xs ? lo_x : lo_y)->size(), up_size = (xs ? up_x : up_y)->size();
        for (std::size_t r = 0; r < n; ++r) {
            auto lin = [&](const Vector& v) {
                return xs ? graded::BigradedForm::linear_x(v) : graded::BigradedForm::linear_y(v);
            };
            if (lo_size) put(t.lower, r * src->size(), lo_col, graded::multiplication_matrix(lin(col.row(r)), la, lb));
            put(t.upper, up_row, r * src->size(), graded::multiplication_matrix(lin(jcol.row(r)), a, b));
        }
        lo_col += lo_size;
        up_row += up_size;
    }
    return t;
}

std::size_t h0_twist(const MonadData& m, int a, int b)
{
    if (a < 0 || b < 0) throw std::invalid_argument("h0_twist: negative twist is outside the validity range");
    // The count is h0 of the kernel sheaf minus h0 of H x O(-h); it needs h1 of the
    // twisted line bundles H1 x O(a-1,b), H2 x O(a,b-1) to vanish.
    if (graded::line_bundle_cohomology(a - 1, b).h[1] != 0 || graded::line_bundle_cohomology(a, b - 1).h[1] != 0)
        throw std::logic_error("h0_twist: h1 of a twisted line bundle is nonzero");
    const TwistMaps t = twist_maps(m, a, b);
    const std::size_t kernel = t.upper.cols() - rank(t.upper);
    const std::size_t image = t.lower.cols() ? rank(t.lower) : 0;
    return kernel - image;
}

FlagPoint random_flag_point(std::mt19937_64& g, long range)
{
    for (;;) {
        Vector x(3), r(3);
        for (auto& v : x) v = uniform_int(g, -range, range);
        for (auto& v : r) v = uniform_int(g, -range, range);
        if (is_zero(x)) continue;
        Vector y = cross(x, r);
        if (is_zero(y)) continue;
        return {x, y};
    }
}

namespace {

// Linear conditions on the entries of a new column c (index r*3+j), followed by one
// scalar per cross pairing. Same side: P^T J C is skew. Opposite side: P^T J C = lambda I.
Matrix column_constraints(const MonadData& m, const std::vector<const Matrix*>& same,
                          const std::vector<const Matrix*>& cross_side)
{
    const std::size_t n = m.dim_w(), unknowns = 3 * n + cross_side.size();
    std::vector<Vector> rows;
    for (const Matrix* p : same) {
        const Matrix g = p->transpose() * m.J;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                Vector row(unknowns);
                for (std::size_t r = 0; r < n; ++r) {
                    row[r * 3 + j] += g(i, r);
                    row[r * 3 + i] += g(j, r);
                }
                rows.push_back(row);
            }
    }
    for (std::size_t c = 0; c < cross_side.size(); ++c) {
        const Matrix g = cross_side[c]->transpose() * m.J;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Vector row(unknowns);
                for (std::size_t r = 0; r < n; ++r) row[r * 3 + j] = g(i, r);
                if (i == j) row[3 * n + c] = -1;
                rows.push_back(row);
            }
    }
    return Matrix::from_rows(rows, unknowns);
}

std::optional<Matrix> sample_column(const MonadData& m, const std::vector<const Matrix*>& same,
                                    const std::vector<const Matrix*>& cross_side, std::mt19937_64& g)
{
    const std::size_t n = m.dim_w();
    Vector v(3 * n);
    if (same.empty() && cross_side.empty()) {
        for (auto& e : v) e = uniform_int(g, -3, 3);
    } else {
        const Subspace ker = kernel_basis(column_constraints(m, same, cross_side));
        for (const Vector& b : ker.basis_vectors()) {
            const long c = uniform_int(g, -3, 3);
            for (std::size_t i = 0; i < 3 * n; ++i) v[i] += c * b[i];
        }
    }
    if (is_zero(v)) return std::nullopt;
    const auto ints = primitive_integer(v);
    Matrix col(n, 3);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < 3; ++j) col(r, j) = Rational(ints[r * 3 + j]);
    return col;
}

}  // namespace

MonadData search(int k, std::uint64_t seed, std::size_t max_attempts)
{
    if (k < 1) throw std::invalid_argument("search: charge must be positive");
    std::size_t degenerate = 0, exact = 0, rank_fail = 0, sections = 0;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto g = substream(seed, attempt);
        MonadData m;
        m.k = k;
        m.J = standard_form(static_cast<std::size_t>(4 * k + 2));
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            std::vector<const Matrix*> same;
            for (const auto& c : m.x_columns) same.push_back(&c);
            auto col = sample_column(m, same, {}, g);
            if (col) m.x_columns.push_back(*col);
            else ok = false;
        }
        for (int i = 0; i < k && ok; ++i) {
            std::vector<const Matrix*> same, cross_side;
            for (const auto& c : m.y_columns) same.push_back(&c);
            for (const auto& c : m.x_columns) cross_side.push_back(&c);
            auto col = sample_column(m, same, cross_side, g);
            if (col) m.y_columns.push_back(*col);
            else ok = false;
        }
        if (!ok) { ++degenerate; continue; }
        if (exact_check(m)) { ++exact; continue; }
        if (rank(section_map(m)) != m.dim_w()) { ++sections; continue; }
        const std::size_t full = 2 * static_cast<std::size_t>(k);
        bool injective = true;
        for (std::size_t i = 0; i < 32 && injective; ++i) {
            auto pg = substream(seed ^ 0xa5a5a5a5ULL, attempt * 32 + i);
            injective = rank(evaluate(m, random_flag_point(pg))) == full;
        }
        if (!injective) { ++rank_fail; continue; }
        return m;
    }
    std::ostringstream os;
    os << "search: no valid monad after " << max_attempts << " attempts (degenerate " << degenerate
       << ", exact check " << exact << ", h0(E) != 0 " << sections << ", rank drop " << rank_fail << ")";
    throw std::runtime_error(os.str());
}

std::size_t ScanResult::mode() const
{
    return static_cast<std::size_t>(std::max_element(histogram.begin(), histogram.end()) - histogram.begin());
}

ScanResult jump_scan(const MonadData& m, std::size_t n_conics, std::uint64_t seed)
{
    check_shape(m);
    ScanResult res;
    res.histogram.assign(2 * static_cast<std::size_t>(m.k) + 1, 0);
    res.rows.resize(n_conics);
    parallel_for(n_conics, [&](std::size_t i) {
        auto g = substream(seed, i);
        ScanRow row;
        row.index = i;
        for (;;) {
            row.p = random_flag_point(g);
            row.q = random_flag_point(g);
            if (non_aligned(row.p, row.q) && dot(row.p.x, row.q.y) != 0 && dot(row.q.x, row.p.y) != 0) break;
        }
        row.s = splitting_type(m, row.p, row.q);
        res.rows[i] = std::move(row);
    });
    for (const auto& r : res.rows) ++res.histogram.at(r.s);
    return res;
}

}  // namespace flaglab::monad
