#pragma once

#include "jaclab/algebra/qpoly.hpp"

#include <utility>
#include <vector>

namespace jaclab {

/// Irreducible factor with multiplicity.
struct QFactor {
  QPoly factor;  // monic, degree >= 1
  int multiplicity;
};

/// Complete factorization of a nonzero rational polynomial into monic irreducibles
/// (Zassenhaus: modular factorization, Hensel lifting, subset recombination).
/// Factors are ordered by degree, then lexicographically by coefficients.
std::vector<QFactor> factor_rational(const QPoly& p);

/// Squarefree decomposition (Yun): returns (s_i, i) with p = lc * prod s_i^i, s_i monic squarefree.
std::vector<QFactor> squarefree_decomposition(const QPoly& p);

}  // namespace jaclab
