#include "flaglab/curves.hpp"

#include "flaglab/chow.hpp"
#include "flaglab/delpezzo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flaglab::curves {

long MultiIndex::ell() const { return std::count(parts.begin(), parts.end(), 0L); }

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

void validate(const MultiIndex& m) {
    if (m.k < 1) throw std::invalid_argument("multi-index: charge must be >= 1");
    if (static_cast<long>(m.parts.size()) != m.k + 1) throw std::invalid_argument("multi-index: need k+1 parts");
    long sum = 0;
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        if (m.parts[i] < 0) throw std::invalid_argument("multi-index: negative part");
        if (i && m.parts[i] < m.parts[i - 1]) throw std::invalid_argument("multi-index: parts not sorted");
        sum += m.parts[i];
    }
    if (sum != m.k) throw std::invalid_argument("multi-index: parts must sum to k");
    long l = m.ell();
    if (l < 1 || l > m.k) throw std::invalid_argument("multi-index: number of zero parts out of [1, k]");
}

namespace {

// Non-increasing partitions of n with parts <= max.
void partitions(long n, long max, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(long k) {
    if (k < 1) throw std::invalid_argument("enumerate_multi_indices: charge must be >= 1");
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions(k, k, cur, parts);
    std::set<std::vector<long>> seen;
    for (auto& p : parts) {
        if (static_cast<long>(p.size()) > k + 1) continue;
        std::vector<long> t(k + 1 - p.size(), 0);
        t.insert(t.end(), p.rbegin(), p.rend());
        seen.insert(t);
    }
    std::vector<MultiIndex> out;
    for (auto& t : seen) {
        MultiIndex m{k, t};
        validate(m);
        out.push_back(std::move(m));
    }
    return out;
}

Configuration reduced_configuration(const MultiIndex& m, int side) {
    validate(m);
    Configuration c;
    for (long a : m.parts) c.push_back({side, a, 1, ExtensionKind::Primitive, 1, 1});
    return c;
}

Configuration merged_configuration(const MultiIndex& m, int side) {
    validate(m);
    Configuration c;
    for (long a : m.parts) {
        if (!c.empty() && c.back().a == a) ++c.back().multiplicity;
        else c.push_back({side, a, 1, ExtensionKind::Primitive, 1, 1});
    }
    return c;
}

namespace {

void check_component(const ExtensionSpec& e) {
    if (e.side != 1 && e.side != 2) throw std::invalid_argument("configuration: side must be 1 or 2");
    if (e.a < 0) throw std::invalid_argument("configuration: negative support degree");
    if (e.multiplicity < 1) throw std::invalid_argument("configuration: multiplicity must be >= 1");
    if (e.kind == ExtensionKind::ThickCompleteIntersection) {
        if (e.a != 0) throw std::invalid_argument("configuration: thick structures live on lines only");
        if (e.p_deg < 1 || e.q_deg < 1 || e.p_deg * e.q_deg != e.multiplicity)
            throw std::invalid_argument("configuration: thick multiplicity must equal p*q");
    }
}

// chi(O_Y) = chi(O_C) + sum_j chi(O_C(j alpha + d_j)).
long component_genus(const ExtensionSpec& e, const QuasiParams& q) {
    if (e.kind == ExtensionKind::ThickCompleteIntersection) return 1 - e.p_deg * e.q_deg;
    if (static_cast<long>(q.d.size()) != e.multiplicity - 1)
        throw std::invalid_argument("genus: need one d_j per graded piece (multiplicity - 1)");
    if (q.alpha < -1) throw std::invalid_argument("genus: alpha must be >= -1");
    long chi = 1;
    for (long j = 1; j < e.multiplicity; ++j) {
        long dj = q.d[j - 1];
        if (dj < 0) throw std::invalid_argument("genus: d_j must be >= 0");
        chi += j * q.alpha + dj + 1;
    }
    return 1 - chi;
}

// Degree of h_i on the reduced support h_i^2 + a h_j^2.
long support_degree(const ExtensionSpec& e, int which) {
    using chow::ChowClass;
    ChowClass hi = e.side == 1 ? ChowClass::H1() : ChowClass::H2();
    ChowClass hj = e.side == 1 ? ChowClass::H2() : ChowClass::H1();
    ChowClass curve = hi * hi + Rational(e.a) * (hj * hj);
    Rational d = chow::degree((which == e.side ? hi : hj) * curve);
    return d.get_num().get_si();
}

}  // namespace

long genus(const Configuration& config, const std::optional<QuasiParams>& quasi) {
    if (config.empty()) throw std::invalid_argument("genus: empty configuration");
    if (quasi && (config.size() != 1 || config[0].kind != ExtensionKind::Primitive))
        throw std::invalid_argument("genus: quasi-primitive data needs a single primitive component");
    long total = 0;
    for (const auto& e : config) {
        check_component(e);
        QuasiParams q = quasi ? *quasi : QuasiParams{0, std::vector<long>(e.multiplicity - 1, 0)};
        total += component_genus(e, q);
    }
    return total - static_cast<long>(config.size() - 1);
}

long chi_minus_hj(const Configuration& config) {
    long total = 0;
    for (const auto& e : config) {
        check_component(e);
        int j = 3 - e.side;
        // chi(O_Y(-h_j)) = chi(O_Y) - mult * deg_C(h_j)
        total += (1 - genus({e})) - e.multiplicity * support_degree(e, j);
    }
    return total;
}

NormalCohomology normal_bundle_cohomology(const Configuration& config) {
    if (config.empty()) throw std::invalid_argument("normal_bundle_cohomology: empty configuration");
    NormalCohomology n;
    auto add = [&n](long deg, long copies) {
        n.h0 += copies * std::max(0L, deg + 1);
        n.h1 += copies * std::max(0L, -deg - 1);
    };
    for (const auto& e : config) {
        check_component(e);
        if (e.kind == ExtensionKind::ThickCompleteIntersection) {
            add(0, 2 * e.multiplicity);  // O_Y^2, and O_Y is filtered by mult copies of O_L
        } else if (e.multiplicity == 1) {
            if (e.a == 0) add(0, 2);
            else { add(1, 1); add(2 * e.a - 1, 1); }
        } else {
            // O_Y ⊕ O_Y(2h_i); O_Y ≅ O_C ⊗ C[x]/x^m as a sheaf on C
            add(0, e.multiplicity);
            add(2 * support_degree(e, e.side), e.multiplicity);
        }
    }
    return n;
}

long hilbert_component_lower_bound(long k) {
    std::set<long> ells;
    for (const auto& m : enumerate_multi_indices(k)) ells.insert(m.ell());
    return static_cast<long>(ells.size());
}

std::string special_name(SpecialClass c) {
    switch (c) {
        case SpecialClass::SpecialIrreducible: return "SpecialIrreducible";
        case SpecialClass::SpecialReducible: return "SpecialReducible";
        case SpecialClass::NotSpecial: return "NotSpecial";
    }
    return "?";
}

SpecialClass classify_special_config(const MultiIndex& m) {
    validate(m);
    if (m.ell() == 1) return SpecialClass::SpecialIrreducible;
    if (m.ell() == m.k) return SpecialClass::SpecialReducible;
    return SpecialClass::NotSpecial;
}

SectionBound section_count(long k, Stability s) {
    if (k < 1) throw std::invalid_argument("section_count: charge must be >= 1");
    if (k == 1) return {3, false};
    if (s == Stability::MuStable) return {1, true};
    return {0, false};
}

long ideal_h0_2hi(const MultiIndex& m) {
    validate(m);
    // Projected curves have total degree S = sum of parts = k; conics through
    // them form the degree-(2 - S) multiples of their equation, then the l
    // points off the curves impose independent conditions.
    long s = 0;
    for (long a : m.parts) s += a;
    if (s > 2) return 0;
    long d = 2 - s;
    return std::max(0L, (d + 1) * (d + 2) / 2 - m.ell());
}

ConicIdealResult double_conic_ideal(const ConicDoubleIdeal& d) {
    using graded::BigradedForm;
    if (d.lambda.size() != 2 || d.mu.size() != 2) throw std::invalid_argument("double_conic_ideal: need two lambdas and two mus");
    if (is_zero(d.lambda) || is_zero(d.mu)) throw std::invalid_argument("double_conic_ideal: degenerate theta or zeta");
    if (d.multiplicity < 2) throw std::invalid_argument("double_conic_ideal: multiplicity must be >= 2");

    BigradedForm x0 = BigradedForm::monomial(graded::x_var(0)), y0 = BigradedForm::monomial(graded::y_var(0));
    BigradedForm theta = BigradedForm::linear_y({0, d.lambda[0], d.lambda[1]});
    BigradedForm zeta = BigradedForm::linear_x({0, d.mu[0], d.mu[1]});
    ConicIdealResult r;
    r.generators.push_back(x0 * theta + y0 * zeta + d.alpha * (x0 * y0));
    for (long p = d.multiplicity; p >= 0; --p) {
        graded::Monomial m;
        m.e[0] = static_cast<int>(p);
        m.e[3] = static_cast<int>(d.multiplicity - p);
        r.generators.push_back(BigradedForm::monomial(m));
    }
    Matrix a{{d.alpha, d.lambda[0], d.lambda[1]}, {d.mu[0], 0, 0}, {d.mu[1], 0, 0}};
    r.smooth = delpezzo::classify(delpezzo::normalize(a)).kind == delpezzo::Kind::Smooth;
    return r;
}

bool ideal_contains(const std::vector<graded::BigradedForm>& generators, const graded::BigradedForm& f) {
    using graded::BigradedForm;
    const int a = f.a(), b = f.b();
    std::vector<Vector> span;
    for (const auto& g : generators) {
        if (g.a() > a || g.b() > b) continue;
        for (const auto& mono : graded::basis(a - g.a(), b - g.b())->monomials)
            span.push_back(graded::coordinates(g * BigradedForm::monomial(mono)));
    }
    std::size_t n = graded::basis(a, b)->size();
    if (f.is_zero()) return true;
    if (span.empty()) return false;
    Matrix m = Matrix::from_rows(span, n);
    std::size_t r = rank(m);
    span.push_back(graded::coordinates(f));
    return rank(Matrix::from_rows(span, n)) == r;
}

long line_restriction_degree(long alpha, long beta, LineFamily family) {
    using chow::ChowClass;
    ChowClass h = family == LineFamily::Lambda1 ? ChowClass::H1() : ChowClass::H2();
    Rational d = chow::degree(h * h * ChowClass::divisor(alpha, beta));
    return d.get_num().get_si();
}

}  // namespace flaglab::curves
