#pragma once

#include <vector>

#include "qci/matrix.hpp"

namespace qci {

// Finite chain complex of finite dimensional vector spaces over a fixed
// field, degrees lo..hi. diff[k] is the differential out of degree lo+1+k
// into degree lo+k. Composites d_i * d_{i+1} = 0 are asserted on build.
class ChainComplex {
public:
  ChainComplex(const Field& F, int lo, int hi, std::vector<int> dims, std::vector<Matrix> diffs);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const Field& field() const { return F_; }
  int dim(int deg) const { return dims_[static_cast<size_t>(deg - lo_)]; }
  // Differential out of degree `deg`, defined for lo < deg <= hi.
  const Matrix& d(int deg) const { return diffs_[static_cast<size_t>(deg - lo_ - 1)]; }

private:
  Field F_;
  int lo_, hi_;
  std::vector<int> dims_;
  std::vector<Matrix> diffs_;
};

// Homology dimensions at the interior degrees lo < i < hi, listed in
// ascending i. Throws WindowTooSmall when hi - lo < 2.
std::vector<int> homology_dims(const ChainComplex& c);

}  // namespace qci
