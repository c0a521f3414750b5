#pragma once

#include <optional>
#include <string>

#include "qci/chain.hpp"
#include "qci/koszul.hpp"
#include "qci/module_rep.hpp"

namespace qci {

// Polynomial in the commuting central variables y_i = x_i^l, no constant
// term. Used to present hypersurfaces.
struct HypersurfacePoly {
  std::map<Mono, FF> terms;
  bool operator==(const HypersurfacePoly&) const = default;
};

HypersurfacePoly make_hypersurface(const QciAlgebra& A,
                                   const std::vector<std::pair<Mono, FF>>& terms);

std::vector<FF> linear_part(const QciAlgebra& A, const HypersurfacePoly& f);

// Greedy division f = sum_i h_i y_i: each monomial is assigned to the
// smallest i with a positive y_i exponent. The identity is re-checked.
std::vector<HypersurfacePoly> divide_by_generators(const QciAlgebra& A,
                                                   const HypersurfacePoly& f);

// Point of P^{n-1}; stored normalized (first nonzero coordinate scaled to 1).
struct ProjPoint {
  std::vector<FF> c;
  bool operator==(const ProjPoint&) const = default;
};
ProjPoint normalize_point(const Field& F, const std::vector<FF>& raw);
std::vector<ProjPoint> enumerate_proj_points(const Field& F, int n);

// Coefficients c_i of the degree -1 cycle sum_i c_i x_i^{l-1} xi_i.
struct KoszulElem {
  std::vector<FF> c;
  bool operator==(const KoszulElem&) const = default;
};

// Reduction of the bounding cycle of f: only the constant terms of the h_i
// survive, so the result depends on the linear part of f alone. Throws
// ZeroLinearPart when that part vanishes; the cycle condition d(z) = 0 in the
// truncated ring is asserted.
KoszulElem bounding_cocycle_reduced(const QciAlgebra& A, const HypersurfacePoly& f);

// Complex of free R-modules with degree-i part  (+)_{j+2m=i} Lambda^j * y^(m),
// differential D = d_Koszul + (left multiplication by z) o (y^(m) -> y^(m-1)).
// D^2 = 0 is asserted symbolically at construction, as are the rank count
// per degree and the periodicity shift (j,m) -> (j,m+1) from degree n-1 up
// (commuting with D from degree n up).
class TateComplex {
public:
  struct Gen {
    uint32_t mask;  // exterior factor
    int m;          // divided power index
  };

  static TateComplex build(const QciAlgebra& A, const KoszulElem& z, int lo, int hi);

  const QciAlgebra& algebra() const { return *A_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::vector<FF>& z() const { return z_; }
  const std::vector<Gen>& gens(int deg) const { return gens_[static_cast<size_t>(deg - lo_)]; }
  int rank(int deg) const {
    return deg < 0 ? 0 : static_cast<int>(gens(deg).size());
  }
  // Differential out of degree deg as right-module data: image of generator
  // src is sum of (target generator, right coefficient in R).
  const std::vector<std::vector<std::pair<int, SkewPoly>>>& diff(int deg) const {
    return diff_[static_cast<size_t>(deg - lo_ - 1)];
  }

  // Tensor over R with a left module; degree window extends one step past
  // [lo, hi] on the low side with a zero term when lo = 0.
  ChainComplex tensor(const ModuleRep& M) const;

private:
  const QciAlgebra* A_ = nullptr;
  std::vector<FF> z_;
  int lo_ = 0, hi_ = 0;
  std::vector<std::vector<Gen>> gens_;
  std::vector<std::vector<std::vector<std::pair<int, SkewPoly>>>> diff_;
};

TateComplex tate_complex(const QciAlgebra& A, const ProjPoint& c, int lo, int hi);

// Tor dimensions of the pair (trivial module, M) over the hypersurface ring
// cut out at c, listed for degrees lo..hi.
std::vector<int> tor_dims(const QciAlgebra& A, const ModuleRep& M, const ProjPoint& c, int lo,
                          int hi);
// Same, but from a hypersurface representative (coefficients need not be
// normalized; used by the scaling and representative-independence checks).
std::vector<int> tor_dims_from_poly(const QciAlgebra& A, const ModuleRep& M,
                                    const HypersurfacePoly& f, int lo, int hi);

// Decision rule: supported iff Tor does not vanish in degree n+1 or n+2.
bool supported_at(const QciAlgebra& A, const ModuleRep& M, const ProjPoint& c);

struct SupportReport {
  std::string module_name;
  int extension_degree = 1;
  struct Entry {
    ProjPoint point;
    bool supported = false;
    std::vector<int> tor_window;  // dims in degrees n+1, n+2
  };
  std::vector<Entry> points;
};

// Verdicts at every rational point of P^{n-1}(F_{p^e}); e counts over the
// prime field and must be a multiple of the algebra's own degree.
SupportReport support_enumerate(const QciAlgebra& A, const ModuleRep& M, int e,
                                const std::string& module_name = "module");

}  // namespace qci
