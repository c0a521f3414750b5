#include "qci/chain.hpp"

namespace qci {

ChainComplex::ChainComplex(const Field& F, int lo, int hi, std::vector<int> dims,
                           std::vector<Matrix> diffs)
    : F_(F), lo_(lo), hi_(hi), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  check(hi_ >= lo_, Err::WindowTooSmall, "degree window is empty");
  check(dims_.size() == static_cast<size_t>(hi_ - lo_ + 1), Err::Internal, "term count");
  check(diffs_.size() == static_cast<size_t>(hi_ - lo_), Err::Internal, "differential count");
  for (int deg = lo_ + 1; deg <= hi_; ++deg) {
    const Matrix& m = d(deg);
    check(m.rows() == dim(deg - 1) && m.cols() == dim(deg), Err::Internal,
          "differential shape at degree " + std::to_string(deg));
  }
  for (int deg = lo_ + 2; deg <= hi_; ++deg)
    check(d(deg - 1).mul(d(deg)).is_zero(), Err::Internal,
          "d o d nonzero out of degree " + std::to_string(deg));
}

std::vector<int> homology_dims(const ChainComplex& c) {
  if (c.hi() - c.lo() < 2)
    fail(Err::WindowTooSmall, "homology needs at least one interior degree");
  std::vector<int> h;
  for (int i = c.lo() + 1; i < c.hi(); ++i) {
    int ker = c.dim(i) - c.d(i).rank();
    int im = c.d(i + 1).rank();
    h.push_back(ker - im);
  }
  return h;
}

}  // namespace qci
