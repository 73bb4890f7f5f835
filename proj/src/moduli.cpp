#include "flaglab/moduli.hpp"

#include "flaglab/chow.hpp"
#include "flaglab/curves.hpp"
#include "flaglab/graded.hpp"
#include "flaglab/rng.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flaglab::moduli {

namespace {

long sum_terms(const std::vector<Term>& t)
{
    return std::accumulate(t.begin(), t.end(), 0L, [](long s, const Term& x) { return s + x.dim; });
}

void expect(long closed, long decomposed, const char* what)
{
    if (closed != decomposed)
        throw std::logic_error(std::string("dimension_table: ") + what + " closed form " + std::to_string(closed) +
                               " != decomposition " + std::to_string(decomposed));
}

long projective_dim(long h0) { return h0 - 1; }

}  // namespace

ModuliTable dimension_table(long k)
{
    if (k < 1) throw std::invalid_argument("dimension_table: charge must be >= 1");
    ModuliTable t;
    t.k = k;
    t.ext1 = chow::instanton_ext1(k);
    // c2(End E) = 4 c2(E) and deg(c2(End E) h) - 3 must agree with Riemann-Roch.
    const Rational via_c2 = chow::degree(Rational(4 * k) * chow::ChowClass::H1H2() * chow::ChowClass::H()) - 3;
    expect(8 * k - 3, t.ext1, "ext1");
    expect(t.ext1, via_c2.get_num().get_si(), "ext1 via c2");
    if (k == 1) {
        t.exceptional = true;
        return t;
    }

    const long surfaces = projective_dim(static_cast<long>(graded::basis_size_closed_form(1, 1)));
    t.s_prime_terms = {{"P^7 of (1,1)-surfaces", surfaces}, {"|kR|", projective_dim(k + 1)}, {"extension class", k}};
    t.s_doubleprime_terms = {{"P2 x P2*", 2 * projective_dim(3)},
                             {"P^k", projective_dim(k + 1)},
                             {"P^2k", projective_dim(2 * k + 1)},
                             {"extension class", k}};

    curves::MultiIndex top{k, std::vector<long>(static_cast<std::size_t>(k + 1), 0)};
    top.parts.back() = k;
    const long h0n = curves::normal_bundle_cohomology(curves::reduced_configuration(top)).h0;
    t.i_terms = {{"h0(N_Y)", h0n}, {"extension class", k}};

    t.dim_MI_s_prime = sum_terms(t.s_prime_terms);
    t.dim_MI_s_doubleprime = sum_terms(t.s_doubleprime_terms);
    t.dim_MI_i = sum_terms(t.i_terms);
    t.component_lower_bound = curves::hilbert_component_lower_bound(k);
    expect(7 + 2 * k, *t.dim_MI_s_prime, "MI_s'");
    expect(4 * k + 4, *t.dim_MI_s_doubleprime, "MI_s''");
    expect(5 * k + 2, *t.dim_MI_i, "MI_i");
    expect(k, *t.component_lower_bound, "component lower bound");
    return t;
}

long elliptic_family_dimension(long k)
{
    if (k < 1) throw std::invalid_argument("elliptic_family_dimension: charge must be >= 1");
    const Rational deg = chow::degree(Rational(k + 3) * chow::ChowClass::H1H2() * chow::ChowClass::H());
    if (deg != 2 * k + 6) throw std::logic_error("elliptic_family_dimension: unexpected degree");
    const long d = 2 * deg.get_num().get_si();
    if (d != 4 * k + 12) throw std::logic_error("elliptic_family_dimension: mismatch");
    return d;
}

namespace {

constexpr mpfr_prec_t kPrec = 128;

class Real {
public:
    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding.
struct Interval {
    Real lo, hi;

    static Interval exact(long v)
    {
        Interval r;
        mpfr_set_si(r.lo.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi.get(), v, MPFR_RNDU);
        return r;
    }
    static Interval rational(const Rational& q)
    {
        Interval r;
        mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval pi()
    {
        Interval r;
        mpfr_const_pi(r.lo.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi.get(), MPFR_RNDU);
        return r;
    }
    bool contains_zero() const { return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0; }
};

Interval operator+(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b)
{
    Interval r;
    Real t;
    bool first = true;
    for (mpfr_srcptr x : {a.lo.get(), a.hi.get()})
        for (mpfr_srcptr y : {b.lo.get(), b.hi.get()}) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), r.lo.get())) mpfr_set(r.lo.get(), t.get(), MPFR_RNDN);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), r.hi.get())) mpfr_set(r.hi.get(), t.get(), MPFR_RNDN);
            first = false;
        }
    return r;
}

Interval square(const Interval& a)
{
    Interval r = a * a;
    if (a.contains_zero()) mpfr_set_zero(r.lo.get(), 1);
    return r;
}

// f(lo) enclosed by directed rounding, widened by the width of the argument
// (|f'| <= 1 for sin and cos).
template <class F>
Interval lipschitz_image(const Interval& x, F f)
{
    Interval r;
    Real w;
    mpfr_sub(w.get(), x.hi.get(), x.lo.get(), MPFR_RNDU);
    f(r.lo.get(), x.lo.get(), MPFR_RNDD);
    f(r.hi.get(), x.lo.get(), MPFR_RNDU);
    mpfr_sub(r.lo.get(), r.lo.get(), w.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), r.hi.get(), w.get(), MPFR_RNDU);
    return r;
}

struct ComplexInterval {
    Interval re, im;
};

ComplexInterval h_interval(const Rational& t)
{
    const Interval theta = Interval::pi() * Interval::rational(1 - t);
    const Interval c = lipschitz_image(theta, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_cos(r, x, d); });
    const Interval s = lipschitz_image(theta, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_sin(r, x, d); });
    const Interval two_t = Interval::rational(2 * t);
    return {Interval::exact(1) - two_t * c, Interval::exact(0) - two_t * s};
}

double down(mpfr_srcptr x) { return mpfr_get_d(x, MPFR_RNDD); }
double up(mpfr_srcptr x) { return mpfr_get_d(x, MPFR_RNDU); }

std::string decimal(const Interval& x)
{
    Real mid;
    mpfr_add(mid.get(), x.lo.get(), x.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.30Rg", mid.get());
    return buf;
}

void check_t(const Rational& t)
{
    if (t < 0 || t > 1) throw std::invalid_argument("path: t must lie in [0,1]");
}

}  // namespace

Enclosure h_enclosure(const Rational& t)
{
    check_t(t);
    const ComplexInterval h = h_interval(t);
    Interval abs2 = square(h.re) + square(h.im);
    Real root;
    mpfr_sqrt(root.get(), abs2.lo.get(), MPFR_RNDD);
    return {down(h.re.lo.get()), up(h.re.hi.get()), down(h.im.lo.get()), up(h.im.hi.get()), down(root.get())};
}

std::optional<std::pair<Rational, Rational>> exact_h(const Rational& t)
{
    check_t(t);
    const Rational two_t = 2 * t;
    if (two_t.get_den() != 1) return std::nullopt;
    // exp(pi i (1-t)) = i^(2 - 2t)
    const long e = ((2 - two_t.get_num().get_si()) % 4 + 4) % 4;
    static const long re[4] = {1, 0, -1, 0}, im[4] = {0, 1, 0, -1};
    return std::pair<Rational, Rational>{1 - two_t * re[e], -two_t * im[e]};
}

Matrix path_matrix(const Rational& t)
{
    check_t(t);
    if (t != 0 && t != 1) throw std::invalid_argument("path_matrix: g(t) is not rational");
    const auto h = exact_h(t);
    // g = (1 - h) / 2 and is real here.
    const Rational g = (1 - h->first) / 2;
    return Matrix{{1, 0, 0}, {0, 1 - g, g}, {0, g, 1 - g}};
}

PathWitness path_witness(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("path_witness: need at least two samples");
    PathWitness w;
    w.t_samples.resize(n);
    w.h_values.resize(n);
    std::vector<Enclosure> enc(n);
    std::vector<char> im_ok(n, 1);
    parallel_for(n, [&](std::size_t i) {
        const Rational t = make_rational(static_cast<long>(i), static_cast<long>(n - 1));
        w.t_samples[i] = t;
        const ComplexInterval h = h_interval(t);
        enc[i] = h_enclosure(t);
        if (t > 0 && t < 1) im_ok[i] = !h.im.contains_zero();
        if (const auto e = exact_h(t)) w.h_values[i] = {to_string(e->first), to_string(e->second), true};
        else w.h_values[i] = {decimal(h.re), decimal(h.im), false};
    });
    w.min_abs_lower = enc[0].abs_lo;
    for (const auto& e : enc) w.min_abs_lower = std::min(w.min_abs_lower, e.abs_lo);
    w.nonvanishing = w.min_abs_lower > 0.01;
    w.imaginary_nonzero = std::all_of(im_ok.begin(), im_ok.end(), [](char c) { return c != 0; });
    w.endpoints_exact = exact_h(0) == std::pair<Rational, Rational>{1, 0} && exact_h(1) == std::pair<Rational, Rational>{-1, 0};
    const Matrix swap{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    w.endpoint_swap_verified = path_matrix(0) == Matrix::identity(3) && path_matrix(1) == swap &&
                               determinant(path_matrix(0)) == exact_h(0)->first &&
                               determinant(path_matrix(1)) == exact_h(1)->first;
    return w;
}

}  // namespace flaglab::moduli
