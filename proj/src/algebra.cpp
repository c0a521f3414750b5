#include "qci/algebra.hpp"

namespace qci {

Mono mono_zero(int n) { return Mono{std::vector<uint8_t>(static_cast<size_t>(n), 0)}; }

Mono mono_gen(int n, int i) {
  Mono m = mono_zero(n);
  m.e[static_cast<size_t>(i)] = 1;
  return m;
}

void add_term(SkewPoly& p, const Mono& m, FF v, const Field& F) {
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

bool is_zero(const SkewPoly& p) { return p.empty(); }

QciAlgebra QciAlgebra::create(const Field& F, int n, int l, FF q,
                              const std::vector<std::vector<int64_t>>& a) {
  if (n < 1) fail(Err::BadExponents, "need at least one generator");
  if (l < 2) fail(Err::BadTruncation, "truncation exponent must be >= 2");
  if (a.size() != static_cast<size_t>(n))
    fail(Err::BadExponents, "exponent matrix must be n x n");
  for (const auto& row : a)
    if (row.size() != static_cast<size_t>(n))
      fail(Err::BadExponents, "exponent matrix must be n x n");
  check(q < F.size(), Err::ValidationError, "q is not an element of the field");

  QciAlgebra A(F);
  A.n_ = n;
  A.l_ = l;
  A.q_ = q;

  if (q == 1) {
    A.regime_ = Regime::Commutative;
  } else {
    A.regime_ = Regime::Quantum;
    if (q == 0 || F.order(q) != l)
      fail(Err::BadOrder, "q must be 1 or have multiplicative order exactly l");
  }

  A.a_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int64_t r = a[static_cast<size_t>(i)][static_cast<size_t>(j)] % l;
      if (r < 0) r += l;
      A.a_[static_cast<size_t>(i) * n + j] = static_cast<int>(r);
    }
  for (int i = 0; i < n; ++i) {
    if (A.a(i, i) != 0) fail(Err::BadExponents, "diagonal exponents must vanish");
    for (int j = 0; j < n; ++j)
      if ((A.a(i, j) + A.a(j, i)) % l != 0)
        fail(Err::BadExponents, "exponent matrix must be antisymmetric mod l");
  }

  A.qpow_.resize(static_cast<size_t>(l));
  FF t = 1;
  for (int i = 0; i < l; ++i) {
    A.qpow_[static_cast<size_t>(i)] = t;
    t = F.mul(t, q);
  }
  // x_i^l is central in both regimes; this is what the truncation relies on.
  check(t == 1 || q == 1, Err::Internal, "q^l != 1");

  uint64_t rd = 1;
  for (int i = 0; i < n; ++i) {
    rd *= static_cast<uint64_t>(l);
    if (rd > (1u << 20)) fail(Err::EnumerationTooLarge, "dim R = l^n exceeds guard");
  }
  A.rdim_ = static_cast<uint32_t>(rd);

  A.rbasis_.reserve(A.rdim_);
  Mono m = mono_zero(n);
  for (uint32_t idx = 0;; ++idx) {
    A.rbasis_.push_back(m);
    int i = n - 1;
    while (i >= 0) {
      if (++m.e[static_cast<size_t>(i)] < l) break;
      m.e[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  check(A.rbasis_.size() == A.rdim_, Err::Internal, "monomial enumeration");

  for (int i = 0; i < n; ++i) {
    Matrix X(F, static_cast<int>(A.rdim_), static_cast<int>(A.rdim_));
    Mono gi = mono_gen(n, i);
    for (uint32_t col = 0; col < A.rdim_; ++col) {
      FF s;
      Mono out;
      if (A.mono_mul(gi, A.rbasis_[col], Ring::R, s, out))
        X.set(static_cast<int>(A.rindex(out)), static_cast<int>(col), s);
    }
    A.reg_.push_back(std::move(X));
  }
  return A;
}

uint32_t QciAlgebra::rindex(const Mono& m) const {
  uint32_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * static_cast<uint32_t>(l_) + m.e[static_cast<size_t>(i)];
  return idx;
}

bool QciAlgebra::mono_mul(const Mono& a, const Mono& b, Ring ring, FF& scalar, Mono& out) const {
  int64_t exp = 0;
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      exp += static_cast<int64_t>(a.e[static_cast<size_t>(i)]) * b.e[static_cast<size_t>(j)] *
             this->a(i, j);
  out = a;
  for (int i = 0; i < n_; ++i) {
    int s = out.e[static_cast<size_t>(i)] + b.e[static_cast<size_t>(i)];
    if (ring == Ring::R && s >= l_) return false;
    check(s < 256, Err::Internal, "exponent overflow");
    out.e[static_cast<size_t>(i)] = static_cast<uint8_t>(s);
  }
  scalar = qpow(exp);
  return true;
}

SkewPoly QciAlgebra::mul(const SkewPoly& a, const SkewPoly& b, Ring ring) const {
  SkewPoly r;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) {
      FF s;
      Mono m;
      if (mono_mul(ma, mb, ring, s, m)) add_term(r, m, F_.mul(F_.mul(va, vb), s), F_);
    }
  return r;
}

SkewPoly QciAlgebra::scale(const SkewPoly& a, FF s) const {
  SkewPoly r;
  for (const auto& [m, v] : a) add_term(r, m, F_.mul(v, s), F_);
  return r;
}

SkewPoly QciAlgebra::add(const SkewPoly& a, const SkewPoly& b) const {
  SkewPoly r = a;
  for (const auto& [m, v] : b) add_term(r, m, v, F_);
  return r;
}

SkewPoly QciAlgebra::normal_form(const std::vector<int>& word, FF coeff, Ring ring) const {
  SkewPoly r;
  add_term(r, mono_zero(n_), coeff, F_);
  for (int g : word) {
    check(g >= 0 && g < n_, Err::ValidationError, "generator index out of range");
    SkewPoly xg;
    add_term(xg, mono_gen(n_, g), 1, F_);
    r = mul(r, xg, ring);
  }
  return r;
}

QciAlgebra QciAlgebra::extended(int e_total, std::vector<FF>& emb_out) const {
  Field big = Field::create(F_.p(), e_total);
  emb_out = F_.embedding_into(big);
  std::vector<std::vector<int64_t>> a64(static_cast<size_t>(n_),
                                        std::vector<int64_t>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a64[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(i, j);
  QciAlgebra A = create(big, n_, l_, emb_out[q_], a64);
  check(A.regime() == regime_, Err::RegimeConflict, "regime changed under field extension");
  return A;
}

}  // namespace qci
