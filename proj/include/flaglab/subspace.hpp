#pragma once

#include "flaglab/matrix.hpp"

#include <cstddef>
#include <vector>

namespace flaglab {

// A linear subspace of Q^n, stored as the RREF of any spanning set, so two
// equal subspaces are structurally equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    // Row space of m.
    static Subspace row_space(const Matrix& m);
    static Subspace column_space(const Matrix& m);
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }  // rows, in RREF
    std::vector<Vector> basis_vectors() const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t n_;
    Matrix basis_;
};

// Right null space.
Subspace kernel_basis(const Matrix& m);

// Throws std::invalid_argument on ambient mismatch.
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

// {w : b^T form w = 0 for all b in u}. form must be square, of ambient size, and
// non-singular; otherwise std::invalid_argument / std::domain_error.
Subspace annihilator(const Subspace& u, const Matrix& form);

}  // namespace flaglab
