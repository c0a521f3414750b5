#pragma once

#include "qci/module_rep.hpp"

namespace qci {

// Minimal free resolution ... -> R^{b_2} -> R^{b_1} -> R^{b_0} -> V -> 0 up to
// homological degree D. Differential entries are elements of R with the
// source generator index major: entry (u, t) of d_s sits at u*b_{s-1} + t and
// is the t-th component of the image of generator u, coefficients acting on
// the left. Minimality (all entries in the radical) is asserted, as is
// d_{s} o d_{s+1} = 0 in R.
struct Resolution {
  int D = 0;
  std::vector<int> betti;             // b_0 .. b_D
  std::vector<std::vector<SkewPoly>> diff;  // diff[s-1] = entries of d_s, s = 1..D
  Matrix aug;                         // V <- R^{b_0}, dim(V) x (b_0 * l^n)
  std::vector<int> stage_dims;        // dim of the s-th syzygy module, s = 0..D (s=0: dim V)
};

Resolution minimal_resolution(const QciAlgebra& A, const ModuleRep& V, int D);

// Flatten a matrix over R (entries indexed u*b_tgt + t as above) to the
// ground field: columns (u, beta) -> u*l^n + beta, rows (t, gamma) likewise.
Matrix to_k_matrix(const QciAlgebra& A, const std::vector<SkewPoly>& entries, int b_src,
                   int b_tgt);

}  // namespace qci
