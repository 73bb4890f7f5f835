#pragma once

#include "flaglab/matrix.hpp"
#include "flaglab/poly.hpp"

#include <optional>
#include <vector>

namespace flaglab {

// det(t I - m), via Faddeev-LeVerrier.
UniPoly characteristic_polynomial(const Matrix& m);

struct EigenFactor {
    UniPoly factor;                    // monic, squarefree, no rational root unless linear
    int algebraic = 0;                 // multiplicity of each root of factor
    std::optional<Rational> value;     // set iff factor is linear
    std::optional<int> geometric;      // set iff value is set
};

// Rational eigenvalues first (ascending), then the irrational cofactors.
// Irrational cofactors of degree >= 4 may still be reducible over Q.
std::vector<EigenFactor> eigen_structure(const Matrix& m);

// Number of distinct complex eigenvalues.
int distinct_eigenvalue_count(const std::vector<EigenFactor>& s);

}  // namespace flaglab
