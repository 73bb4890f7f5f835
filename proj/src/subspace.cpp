#include "flaglab/subspace.hpp"

#include <stdexcept>

namespace flaglab {

Subspace::Subspace(std::size_t ambient_dim) : n_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::row_space(const Matrix& m) {
    Subspace s(m.cols());
    s.basis_ = rref(m);
    if (s.basis_.rows() == 0) s.basis_ = Matrix(0, m.cols());
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != n_) throw std::invalid_argument("contains: ambient mismatch");
    Matrix m = basis_.stack_below(Matrix::from_rows({v}, n_));
    return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.n_ != n_) throw std::invalid_argument("contains: ambient mismatch");
    return rank(basis_.stack_below(other.basis_)) == dim();
}

Subspace kernel_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n);
}

namespace {

// Rows spanning the orthogonal complement (standard dot product).
Matrix perp_equations(const Subspace& u) {
    Subspace k = kernel_basis(u.basis());
    return k.basis();
}

}  // namespace

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    Matrix eq = perp_equations(u).stack_below(perp_equations(v));
    if (eq.rows() == 0) return Subspace::full(u.ambient_dim());
    return kernel_basis(eq);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    return Subspace::row_space(u.basis().stack_below(v.basis()));
}

Subspace annihilator(const Subspace& u, const Matrix& form) {
    const std::size_t n = u.ambient_dim();
    if (!form.square() || form.rows() != n) throw std::invalid_argument("annihilator: form shape mismatch");
    if (rank(form) != n) throw std::domain_error("annihilator: singular form");
    if (u.dim() == 0) return Subspace::full(n);
    return kernel_basis(u.basis() * form);
}

}  // namespace flaglab
