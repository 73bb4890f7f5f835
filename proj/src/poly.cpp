#include "flaglab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flaglab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t i) const {
    static const Rational zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Rational inv = 1 / c_.back();
    return inv * *this;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& a = c_[k];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        bool show = k == 0 || mag != 1;
        if (show) os << mag.get_str();
        if (k > 0) {
            if (show) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    std::vector<Rational> q(a.degree() - db + 1);
    Rational lb_inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational f = r[k] * lb_inv;
        q[k - db] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() < 1) return out;
    UniPoly a = f.monic();
    UniPoly d = a.derivative();
    UniPoly g = gcd(a, d);
    UniPoly b = divmod(a, g).first;
    UniPoly c = divmod(d, g).first;
    UniPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly h = gcd(b, e);
        if (h.degree() > 0) out.emplace_back(h.monic(), i);
        b = divmod(b, h).first;
        c = divmod(e, h).first;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

// Standard Sturm chain of a squarefree polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(Rational(-1) * r);
    }
    return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Number of roots in (lo, hi].
int count_roots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

// Cauchy bound: all roots satisfy |x| < 1 + max |a_i / a_n|.
Rational root_bound(const UniPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f) {
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    // Squarefree part, cleared to a primitive integer polynomial; any rational
    // root is m/a_n with m an integer.
    UniPoly sq = divmod(f, gcd(f, f.derivative())).first;
    std::vector<Integer> zi = primitive_integer(sq.coeffs());
    std::vector<Rational> zc(zi.begin(), zi.end());
    UniPoly p(zc);
    const Rational an = abs(p.leading());
    const Rational width = Rational(1) / (2 * an);
    auto chain = sturm_chain(p);

    Rational bound = root_bound(p);
    // Isolate by recursive bisection over (lo, hi].
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    std::vector<std::pair<Rational, Rational>> small;
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = count_roots(chain, lo, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo < width) {
            small.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    // The interval has length < 1/(2 a_n) so it holds at most one point of
    // (1/a_n)Z other than possibly an endpoint; test the candidates directly.
    for (auto& [lo, hi] : small) {
        Rational scaled = hi * an;
        Integer m = scaled.get_num() / scaled.get_den();  // truncation
        for (Integer cand = m - 1; cand <= m + 1; ++cand) {
            Rational x = make_rational(cand, an.get_num());
            if (x > lo && x <= hi && p.eval(x) == 0) {
                roots.push_back(x);
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace flaglab
