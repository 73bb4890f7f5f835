#include "flaglab/graded.hpp"

#include "flaglab/chow.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace flaglab::graded {

std::string Monomial::to_string() const {
    static const char* names[6] = {"x0", "x1", "x2", "y0", "y1", "y2"};
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < 6; ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
}

Monomial x_var(int i) {
    Monomial m;
    m.e.at(i) += 1;
    return m;
}

Monomial y_var(int i) {
    Monomial m;
    m.e.at(3 + i) += 1;
    return m;
}

std::map<Monomial, Rational> reduce(const std::map<Monomial, Rational>& terms) {
    std::map<Monomial, Rational> out, pending = terms;
    while (!pending.empty()) {
        std::map<Monomial, Rational> next;
        for (const auto& [m, c] : pending) {
            if (c == 0) continue;
            if (m.normal()) {
                out[m] += c;
                continue;
            }
            Monomial base = m;
            --base.e[0];
            --base.e[3];
            Monomial m1 = base, m2 = base;
            ++m1.e[1]; ++m1.e[4];
            ++m2.e[2]; ++m2.e[5];
            next[m1] -= c;
            next[m2] -= c;
        }
        pending = std::move(next);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

BigradedForm::BigradedForm(int a, int b) : a_(a), b_(b) {}

BigradedForm::BigradedForm(int a, int b, const std::map<Monomial, Rational>& terms) : a_(a), b_(b) {
    for (const auto& [m, c] : terms)
        if (c != 0 && (m.deg_x() != a || m.deg_y() != b))
            throw std::invalid_argument("BigradedForm: monomial " + m.to_string() + " has wrong bidegree");
    terms_ = reduce(terms);
}

BigradedForm BigradedForm::constant(const Rational& c) { return BigradedForm(0, 0, {{Monomial{}, c}}); }

BigradedForm BigradedForm::monomial(const Monomial& m, const Rational& c) {
    return BigradedForm(m.deg_x(), m.deg_y(), {{m, c}});
}

BigradedForm BigradedForm::linear_x(const Vector& c) {
    if (c.size() != 3) throw std::invalid_argument("linear_x: need 3 coefficients");
    std::map<Monomial, Rational> t;
    for (int i = 0; i < 3; ++i) t[x_var(i)] = c[i];
    return BigradedForm(1, 0, t);
}

BigradedForm BigradedForm::linear_y(const Vector& c) {
    if (c.size() != 3) throw std::invalid_argument("linear_y: need 3 coefficients");
    std::map<Monomial, Rational> t;
    for (int i = 0; i < 3; ++i) t[y_var(i)] = c[i];
    return BigradedForm(0, 1, t);
}

Rational BigradedForm::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BigradedForm::evaluate(const Vector& x, const Vector& y) const {
    if (x.size() != 3 || y.size() != 3) throw std::invalid_argument("evaluate: need two triples");
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < 3; ++i) {
            for (int p = 0; p < m.e[i]; ++p) v *= x[i];
            for (int p = 0; p < m.e[3 + i]; ++p) v *= y[i];
        }
        s += v;
    }
    return s;
}

std::string BigradedForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = m == Monomial{};
        if (mag != 1 || unit) os << mag.get_str() << (unit ? "" : "*");
        if (!unit) os << m.to_string();
    }
    return os.str();
}

namespace {

void check_same_bidegree(const BigradedForm& f, const BigradedForm& g) {
    if (f.a() != g.a() || f.b() != g.b()) throw std::invalid_argument("bigraded forms of different bidegree");
}

}  // namespace

BigradedForm operator+(const BigradedForm& f, const BigradedForm& g) {
    check_same_bidegree(f, g);
    std::map<Monomial, Rational> t = f.terms();
    for (const auto& [m, c] : g.terms()) t[m] += c;
    return BigradedForm(f.a(), f.b(), t);
}

BigradedForm operator-(const BigradedForm& f, const BigradedForm& g) { return f + Rational(-1) * g; }

BigradedForm operator*(const Rational& s, const BigradedForm& f) {
    std::map<Monomial, Rational> t;
    if (s != 0)
        for (const auto& [m, c] : f.terms()) t[m] = s * c;
    return BigradedForm(f.a(), f.b(), t);
}

BigradedForm multiply_forms(const BigradedForm& f, const BigradedForm& g) {
    std::map<Monomial, Rational> t;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) t[m1 * m2] += c1 * c2;
    return BigradedForm(f.a() + g.a(), f.b() + g.b(), t);
}

namespace {

void compositions3(int d, std::vector<std::array<int, 3>>& out) {
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
}

std::shared_ptr<const Basis> build_basis(int a, int b) {
    auto B = std::make_shared<Basis>();
    B->a = a;
    B->b = b;
    if (a < 0 || b < 0) return B;
    std::vector<std::array<int, 3>> xs, ys;
    compositions3(a, xs);
    compositions3(b, ys);
    for (const auto& ex : xs)
        for (const auto& ey : ys) {
            Monomial m{{ex[0], ex[1], ex[2], ey[0], ey[1], ey[2]}};
            if (m.normal()) B->monomials.push_back(m);
        }
    std::sort(B->monomials.begin(), B->monomials.end());
    for (std::size_t i = 0; i < B->monomials.size(); ++i) B->index[B->monomials[i]] = i;
    return B;
}

}  // namespace

std::shared_ptr<const Basis> basis(int a, int b) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Basis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{a, b}];
    if (!slot) slot = build_basis(a, b);
    return slot;
}

std::size_t basis_size_closed_form(int a, int b) {
    if (a < 0 || b < 0) return 0;
    return static_cast<std::size_t>((a + 1) * (b + 1) * (a + b + 2) / 2);
}

Vector coordinates(const BigradedForm& f) {
    auto B = basis(f.a(), f.b());
    Vector v(B->size());
    for (const auto& [m, c] : f.terms()) v[B->index.at(m)] = c;
    return v;
}

BigradedForm from_coordinates(int a, int b, const Vector& v) {
    auto B = basis(a, b);
    if (v.size() != B->size()) throw std::invalid_argument("from_coordinates: length mismatch");
    std::map<Monomial, Rational> t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) t[B->monomials[i]] = v[i];
    return BigradedForm(a, b, t);
}

Matrix multiplication_matrix(const BigradedForm& g, int a, int b) {
    auto src = basis(a, b);
    auto dst = basis(a + g.a(), b + g.b());
    Matrix m(dst->size(), src->size());
    for (std::size_t j = 0; j < src->size(); ++j) {
        BigradedForm p = multiply_forms(g, BigradedForm::monomial(src->monomials[j]));
        for (const auto& [mono, c] : p.terms()) m(dst->index.at(mono), j) = c;
    }
    return m;
}

CohomologyTable line_bundle_cohomology(long alpha1, long alpha2) {
    long a1 = std::min(alpha1, alpha2), a2 = std::max(alpha1, alpha2);
    Integer value = Integer(a1 + 1) * Integer(a2 + 1) * Integer(a1 + a2 + 2) / 2;
    CohomologyTable t;
    if (a1 >= 0) t.h[0] = value;
    else if (a1 <= -2 && a1 + a2 + 1 >= 0) t.h[1] = -value;
    else if (a2 >= 0 && a1 + a2 + 3 <= 0) t.h[2] = value;
    else if (a2 <= -2) t.h[3] = -value;
    return t;
}

Rational complex_euler(const ResolutionSpec& r) {
    Rational chi = 0;
    for (const auto& term : r.terms) {
        Rational part = 0;
        for (const auto& tw : term.twists) part += tw.multiplicity * chow::line_bundle_rr(tw.a, tw.b);
        chi += (term.degree % 2 == 0 ? part : -part);
    }
    return chi;
}

namespace {

// O(p h_i + q h_j) as a twist in (h1, h2) coordinates.
Twist tw(int side, long p, long q, int mult) {
    return side == 1 ? Twist{p, q, mult} : Twist{q, p, mult};
}

}  // namespace

ResolutionSpec neighborhood_resolution(Neighborhood kind, long param, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("neighborhood_resolution: side must be 1 or 2");
    const int i = side;
    ResolutionSpec r;
    switch (kind) {
        case Neighborhood::Line:
            r.name = "line";
            r.terms = {{2, {tw(i, -2, 0, 1)}}, {1, {tw(i, -1, 0, 2)}}, {0, {tw(i, 0, 0, 1)}}};
            break;
        case Neighborhood::Conic:
            r.name = "conic";
            r.terms = {{2, {{-1, -1, 1}}}, {1, {{-1, 0, 1}, {0, -1, 1}}}, {0, {{0, 0, 1}}}};
            break;
        case Neighborhood::LineThick: {
            if (param < 1) throw std::invalid_argument("neighborhood_resolution: multiplicity must be >= 1");
            int m = static_cast<int>(param);
            r.name = "line-thick(" + std::to_string(m) + ")";
            r.terms = {{2, {tw(i, -2, 0, m)}}, {1, {tw(i, -1, 0, 2 * m)}}, {0, {tw(i, 0, 0, m)}}};
            break;
        }
        case Neighborhood::FirstNeighborhood: {
            if (param < 1) throw std::invalid_argument("neighborhood_resolution: a must be >= 1");
            long a = param;
            // I_C = (theta, zeta), theta of degree h_j, zeta of degree h_i + (a-1) h_j.
            // I_C^2 = (theta^2, theta zeta, zeta^2) with the two Koszul-type syzygies.
            r.name = "first-neighborhood(" + std::to_string(a) + ")";
            r.terms = {{2, {tw(i, -1, -(a + 1), 1), tw(i, -2, -(2 * a - 1), 1)}},
                       {1, {tw(i, 0, -2, 1), tw(i, -1, -a, 1), tw(i, -2, -(2 * a - 2), 1)}},
                       {0, {tw(i, 0, 0, 1)}}};
            break;
        }
        case Neighborhood::LineFirstNeighborhood:
            r.name = "line-first-neighborhood";
            r.terms = {{2, {tw(i, -3, 0, 2)}}, {1, {tw(i, -2, 0, 3)}}, {0, {tw(i, 0, 0, 1)}}};
            break;
    }
    return r;
}

}  // namespace flaglab::graded
