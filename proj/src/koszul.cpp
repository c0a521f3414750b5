#include "qci/koszul.hpp"

namespace qci {

void add_term(KElem& p, const KMono& m, FF v, const Field& F) {
  if (v == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, v);
    return;
  }
  FF s = F.add(it->second, v);
  if (s == 0)
    p.erase(it);
  else
    it->second = s;
}

bool kmono_mul(const QciAlgebra& A, const KMono& a, const KMono& b, Ring ring, FF& scalar,
               KMono& out) {
  if (a.mask & b.mask) return false;
  const Field& F = A.field();
  int n = A.n();

  // xi_S x^beta = q^{sum a_sj beta_j} x^beta xi_S
  int64_t exp = 0;
  for (int s = 0; s < n; ++s) {
    if (!(a.mask >> s & 1)) continue;
    for (int j = 0; j < n; ++j)
      exp += static_cast<int64_t>(A.a(s, j)) * b.e.e[static_cast<size_t>(j)];
  }

  FF xscalar;
  Mono xe;
  if (!A.mono_mul(a.e, b.e, ring, xscalar, xe)) return false;

  // xi_S xi_T: one crossing per pair s in S, t in T with s > t.
  FF sign = 1;
  for (int t = 0; t < n; ++t) {
    if (!(b.mask >> t & 1)) continue;
    for (int s = t + 1; s < n; ++s)
      if (a.mask >> s & 1) {
        exp += A.a(s, t);
        sign = F.neg(sign);
      }
  }

  out.e = xe;
  out.mask = a.mask | b.mask;
  scalar = F.mul(F.mul(A.qpow(exp), xscalar), sign);
  return true;
}

KElem kmul(const QciAlgebra& A, const KElem& a, const KElem& b, Ring ring) {
  KElem r;
  const Field& F = A.field();
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) {
      FF s;
      KMono m;
      if (kmono_mul(A, ma, mb, ring, s, m)) add_term(r, m, F.mul(F.mul(va, vb), s), F);
    }
  return r;
}

KElem kd(const QciAlgebra& A, const KElem& a, Ring ring) {
  KElem r;
  const Field& F = A.field();
  int n = A.n();
  for (const auto& [m, v] : a) {
    // d(x^e xi_{s_1}..xi_{s_j}) = sum_t (-1)^{t-1} (x^e xi_{<t}) x_{s_t} (xi_{>t})
    FF sign = 1;
    uint32_t prefix = 0;
    for (int s = 0; s < n; ++s) {
      if (!(m.mask >> s & 1)) continue;
      uint32_t suffix = m.mask & ~((2u << s) - 1);
      KMono left{m.e, prefix};
      KMono mid{mono_gen(n, s), 0};
      KMono right{mono_zero(n), suffix};
      FF s1, s2;
      KMono t1, t2;
      if (kmono_mul(A, left, mid, ring, s1, t1) && kmono_mul(A, t1, right, ring, s2, t2))
        add_term(r, t2, F.mul(F.mul(v, sign), F.mul(s1, s2)), F);
      prefix |= 1u << s;
      sign = F.neg(sign);
    }
  }
  return r;
}

FF factor_right(const QciAlgebra& A, const KMono& m) {
  int64_t exp = 0;
  int n = A.n();
  for (int s = 0; s < n; ++s) {
    if (!(m.mask >> s & 1)) continue;
    for (int j = 0; j < n; ++j)
      exp -= static_cast<int64_t>(A.a(s, j)) * m.e.e[static_cast<size_t>(j)];
  }
  return A.qpow(exp);
}

}  // namespace qci
