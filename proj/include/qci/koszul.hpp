#pragma once

#include "qci/algebra.hpp"

namespace qci {

// Monomial x^e * xi_S in the skew exterior extension (Q or R) (x) Lambda_q(xi),
// exterior factors in ascending index order encoded as a bitmask.
//
// Conventions, fixed once for the whole artifact:
//   xi_i xi_j = -q^{a_ij} xi_j xi_i   (i != j),   xi_i^2 = 0,
//   xi_i x_j  =  q^{a_ij} x_j xi_i,
//   d(xi_i)   =  x_i, extended as a graded derivation with d(x_j) = 0.
struct KMono {
  Mono e;
  uint32_t mask = 0;
  auto operator<=>(const KMono&) const = default;
  int degree() const { return __builtin_popcount(mask); }
};

using KElem = std::map<KMono, FF>;

void add_term(KElem& p, const KMono& m, FF v, const Field& F);

// Product of monomials; false when the result vanishes (truncation in R, or
// repeated exterior factor).
bool kmono_mul(const QciAlgebra& A, const KMono& a, const KMono& b, Ring ring, FF& scalar,
               KMono& out);

KElem kmul(const QciAlgebra& A, const KElem& a, const KElem& b, Ring ring);

// Koszul differential.
KElem kd(const QciAlgebra& A, const KElem& a, Ring ring);

// Scalar lambda with x^e xi_S = lambda * xi_S x^e; moving coefficients to the
// right of the exterior part is how matrices over R are extracted.
FF factor_right(const QciAlgebra& A, const KMono& m);

}  // namespace qci
