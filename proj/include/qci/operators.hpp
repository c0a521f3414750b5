#pragma once

#include "qci/resolution.hpp"
#include "qci/tate.hpp"

namespace qci {

// Degree-2 operators chi_i : Ext^s(V, k) -> Ext^{s+2}(V, k) extracted from a
// minimal resolution: lift the differentials entrywise to the untruncated
// ring, split the composite as sum_i x_i^l t_i (smallest-index rule), and
// read off the constant terms. op[i][s] has b_{s+2} rows and b_s columns and
// acts on column vectors. Pairwise commutativity is asserted exactly.
struct OperatorFamily {
  std::vector<std::vector<Matrix>> op;  // op[i][s], i in [0,n), s in [0, D-2]
};

OperatorFamily cohomological_operators(const QciAlgebra& A, const Resolution& res);

// Ext^*(V, k) for s <= D as a graded module over the polynomial ring on the
// chi_i: dimensions are the Betti numbers (minimal resolution), together
// with the operator matrices. bounded = some b_s vanishes for s >= 1, which
// forces everything after it to vanish.
struct GradedExtModule {
  int D = 0;
  int n = 0;
  std::vector<int> dims;
  OperatorFamily ops;
  bool bounded = false;
};

GradedExtModule ext_module(const QciAlgebra& A, const ModuleRep& V, int D);

// Hypersurface membership via the operator route: quotient Ext by the images
// of the n-1 independent combinations sum_i u_i chi_i with sum u_i c_i = 0,
// and test nonvanishing of the quotient in the two top degrees hi-1, hi of
// the window. Requires n <= lo <= hi-1 and hi <= D-2. The point may live
// over an extension K of the algebra's field; operator matrices are embedded
// entrywise.
bool fiber_supported_at(const QciAlgebra& A, const GradedExtModule& ext, const ProjPoint& c,
                        const Field& K, int lo, int hi);

// All homogeneous polynomials in the chi_i of degree t <= d_max (operator
// degree 2t) that annihilate Ext^s for every s in [n, D - 2*d_max]. Basis
// rows are coefficient vectors against the listed monomials (ascending
// exponent-vector order).
struct AnnWindow {
  int d_max = 1;
  int window_lo = 0, window_hi = 0;
  bool bounded = false;
  struct Piece {
    int t = 1;
    std::vector<Mono> monomials;
    Matrix basis;
  };
  std::vector<Piece> pieces;
};

AnnWindow annihilator_window(const QciAlgebra& A, const GradedExtModule& ext, int d_max);

// Points of P^{n-1}(F_{p^e}) where every polynomial in the window vanishes
// (chi_i evaluated at c_i), in ascending lexicographic order.
std::vector<ProjPoint> zero_locus(const QciAlgebra& A, const AnnWindow& ann, int e);

}  // namespace qci
