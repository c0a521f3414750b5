#include "qci/resolution.hpp"

namespace qci {

namespace {

// Decode a flat kernel-row vector in F^{b * l^n} into b elements of R.
std::vector<SkewPoly> decode_columns(const QciAlgebra& A, const std::vector<FF>& v, int b) {
  uint32_t rd = A.rdim();
  std::vector<SkewPoly> out(static_cast<size_t>(b));
  for (int t = 0; t < b; ++t)
    for (uint32_t beta = 0; beta < rd; ++beta) {
      FF c = v[static_cast<size_t>(t) * rd + beta];
      if (c != 0) out[static_cast<size_t>(t)].emplace(A.rmono(beta), c);
    }
  return out;
}

}  // namespace

Resolution minimal_resolution(const QciAlgebra& A, const ModuleRep& V, int D) {
  check(V.dim > 0, Err::ZeroModule, "cannot resolve the zero module");
  check(D >= 2, Err::PreconditionViolated, "resolution depth must be at least 2");
  check(V.field() == A.field(), Err::PreconditionViolated,
        "module must live over the algebra's field");
  const Field& F = A.field();
  uint32_t rd = A.rdim();

  Cover cov = projective_cover(A, V);
  Resolution res{D, {}, {}, cov.pi, {}};
  res.betti.push_back(cov.b0);
  res.stage_dims.push_back(V.dim);

  Matrix kernel = cov.kernel;
  std::vector<int> kernel_pivots = cov.kernel_pivots;
  int b_prev = cov.b0;

  for (int s = 1; s <= D; ++s) {
    res.stage_dims.push_back(kernel.rows());
    if (kernel.rows() == 0) {
      // free from here on
      for (int t = s; t <= D; ++t) {
        res.betti.push_back(0);
        res.diff.emplace_back();
        if (t > s) res.stage_dims.push_back(0);
      }
      break;
    }

    ModuleRep free_prev = free_module(A, b_prev);
    Submodule S{kernel, kernel_pivots};
    ModuleRep K = submodule_rep(A, free_prev, S);
    Cover c = projective_cover(A, K);

    res.betti.push_back(c.b0);
    std::vector<SkewPoly> entries(static_cast<size_t>(c.b0) * b_prev);
    for (int u = 0; u < c.b0; ++u) {
      // image of generator u inside R^{b_prev}, via the kernel basis rows
      std::vector<FF> v(static_cast<size_t>(b_prev) * rd, 0);
      for (int i = 0; i < K.dim; ++i) {
        FF coef = c.pi.at(i, u * static_cast<int>(rd));
        if (coef == 0) continue;
        for (int col = 0; col < kernel.cols(); ++col)
          v[static_cast<size_t>(col)] =
              F.add(v[static_cast<size_t>(col)], F.mul(coef, kernel.at(i, col)));
      }
      std::vector<SkewPoly> comps = decode_columns(A, v, b_prev);
      for (int t = 0; t < b_prev; ++t) {
        // minimal cover: the kernel sits inside the radical, so no entry may
        // have a unit (constant) part
        auto it = comps[static_cast<size_t>(t)].find(mono_zero(A.n()));
        check(it == comps[static_cast<size_t>(t)].end(), Err::Internal,
              "non-minimal differential entry at stage " + std::to_string(s));
        entries[static_cast<size_t>(u) * b_prev + t] = std::move(comps[static_cast<size_t>(t)]);
      }
    }
    res.diff.push_back(std::move(entries));

    kernel = c.kernel;
    kernel_pivots = c.kernel_pivots;
    b_prev = c.b0;
  }

  // d_s o d_{s+1} = 0 over R
  for (int s = 1; s + 1 <= D; ++s) {
    int b_lo = res.betti[static_cast<size_t>(s - 1)];
    int b_mid = res.betti[static_cast<size_t>(s)];
    int b_hi = res.betti[static_cast<size_t>(s + 1)];
    const auto& d1 = res.diff[static_cast<size_t>(s - 1)];   // R^{b_mid} -> R^{b_lo}
    const auto& d2 = res.diff[static_cast<size_t>(s)];       // R^{b_hi} -> R^{b_mid}
    for (int t = 0; t < b_hi; ++t)
      for (int w = 0; w < b_lo; ++w) {
        SkewPoly acc;
        for (int u = 0; u < b_mid; ++u) {
          SkewPoly prod = A.mul(d2[static_cast<size_t>(t) * b_mid + u],
                                d1[static_cast<size_t>(u) * b_lo + w], Ring::R);
          acc = A.add(acc, prod);
        }
        check(acc.empty(), Err::Internal, "d^2 != 0 at stage " + std::to_string(s));
      }
  }

  return res;
}

Matrix to_k_matrix(const QciAlgebra& A, const std::vector<SkewPoly>& entries, int b_src,
                   int b_tgt) {
  const Field& F = A.field();
  uint32_t rd = A.rdim();
  Matrix out(F, b_tgt * static_cast<int>(rd), b_src * static_cast<int>(rd));
  for (int u = 0; u < b_src; ++u)
    for (int t = 0; t < b_tgt; ++t) {
      const SkewPoly& r = entries[static_cast<size_t>(u) * b_tgt + t];
      if (r.empty()) continue;
      for (uint32_t beta = 0; beta < rd; ++beta) {
        SkewPoly xb;
        xb.emplace(A.rmono(beta), 1);
        SkewPoly img = A.mul(xb, r, Ring::R);  // x^beta e_u has component x^beta * r_{tu}
        for (const auto& [mo, val] : img)
          out.set(t * static_cast<int>(rd) + static_cast<int>(A.rindex(mo)),
                  u * static_cast<int>(rd) + static_cast<int>(beta), val);
      }
    }
  return out;
}

}  // namespace qci
