#include "flaglab/eigen.hpp"

#include <algorithm>
#include <stdexcept>

namespace flaglab {

UniPoly characteristic_polynomial(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("characteristic polynomial: not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -trace(a * m) / static_cast<long>(k);
    }
    return UniPoly(std::move(c));
}

std::vector<EigenFactor> eigen_structure(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("eigen_structure: not square");
    const std::size_t n = m.rows();
    std::vector<EigenFactor> rational, irrational;
    for (auto& [g, mult] : squarefree_decomposition(characteristic_polynomial(m))) {
        UniPoly rest = g;
        for (const Rational& r : rational_roots(g)) {
            rest = divmod(rest, UniPoly::linear_root(r)).first;
            Matrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r;
            EigenFactor f;
            f.factor = UniPoly::linear_root(r);
            f.algebraic = mult;
            f.value = r;
            f.geometric = static_cast<int>(n - rank(shifted));
            rational.push_back(std::move(f));
        }
        if (rest.degree() > 0) irrational.push_back({rest.monic(), mult, std::nullopt, std::nullopt});
    }
    std::sort(rational.begin(), rational.end(),
              [](const EigenFactor& a, const EigenFactor& b) { return *a.value < *b.value; });
    rational.insert(rational.end(), irrational.begin(), irrational.end());
    return rational;
}

int distinct_eigenvalue_count(const std::vector<EigenFactor>& s) {
    int d = 0;
    for (const auto& f : s) d += f.factor.degree();
    return d;
}

}  // namespace flaglab
