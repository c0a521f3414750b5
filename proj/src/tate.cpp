#include "qci/tate.hpp"

#include <algorithm>
#include <cmath>

#include "qci/util.hpp"

namespace qci {

HypersurfacePoly make_hypersurface(const QciAlgebra& A,
                                   const std::vector<std::pair<Mono, FF>>& terms) {
  HypersurfacePoly f;
  for (const auto& [m, v] : terms) {
    if (static_cast<int>(m.e.size()) != A.n())
      fail(Err::ValidationError, "hypersurface exponent length mismatch");
    if (m.total() == 0) fail(Err::ValidationError, "hypersurface polynomial has a constant term");
    add_term(f.terms, m, v, A.field());
  }
  return f;
}

std::vector<FF> linear_part(const QciAlgebra& A, const HypersurfacePoly& f) {
  std::vector<FF> c(static_cast<size_t>(A.n()), 0);
  for (const auto& [m, v] : f.terms)
    if (m.total() == 1)
      for (int i = 0; i < A.n(); ++i)
        if (m.e[static_cast<size_t>(i)] == 1) c[static_cast<size_t>(i)] = v;
  return c;
}

std::vector<HypersurfacePoly> divide_by_generators(const QciAlgebra& A,
                                                   const HypersurfacePoly& f) {
  const Field& F = A.field();
  std::vector<HypersurfacePoly> h(static_cast<size_t>(A.n()));
  for (const auto& [m, v] : f.terms) {
    int i = 0;
    while (m.e[static_cast<size_t>(i)] == 0) ++i;
    Mono q = m;
    --q.e[static_cast<size_t>(i)];
    add_term(h[static_cast<size_t>(i)].terms, q, v, F);
  }
  // re-check f = sum h_i y_i in the commutative polynomial ring k[y]
  std::map<Mono, FF> rebuilt;
  for (int i = 0; i < A.n(); ++i)
    for (const auto& [m, v] : h[static_cast<size_t>(i)].terms) {
      Mono s = m;
      ++s.e[static_cast<size_t>(i)];
      add_term(rebuilt, s, v, F);
    }
  check(rebuilt == f.terms, Err::Internal, "division identity failed");
  return h;
}

ProjPoint normalize_point(const Field& F, const std::vector<FF>& raw) {
  ProjPoint p{raw};
  for (FF v : p.c)
    check(v < F.size(), Err::ValidationError, "point coordinate outside field");
  size_t lead = 0;
  while (lead < p.c.size() && p.c[lead] == 0) ++lead;
  check(lead < p.c.size(), Err::ValidationError, "projective point cannot be zero");
  FF s = F.inv(p.c[lead]);
  if (s != 1)
    for (auto& v : p.c) v = F.mul(v, s);
  return p;
}

std::vector<ProjPoint> enumerate_proj_points(const Field& F, int n) {
  // Normalized representatives in ascending lexicographic coordinate order:
  // more leading zeros sort first, then the tail runs over the field.
  std::vector<ProjPoint> out;
  for (int lead = n - 1; lead >= 0; --lead) {
    int tail = n - lead - 1;
    uint64_t count = 1;
    for (int i = 0; i < tail; ++i) count *= F.size();
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<FF> c(static_cast<size_t>(n), 0);
      c[static_cast<size_t>(lead)] = 1;
      uint64_t k = code;
      for (int i = tail - 1; i >= 0; --i) {
        c[static_cast<size_t>(lead + 1 + i)] = static_cast<FF>(k % F.size());
        k /= F.size();
      }
      out.push_back(ProjPoint{c});
    }
  }
  return out;
}

KoszulElem bounding_cocycle_reduced(const QciAlgebra& A, const HypersurfacePoly& f) {
  std::vector<HypersurfacePoly> h = divide_by_generators(A, f);
  KoszulElem z;
  z.c.resize(static_cast<size_t>(A.n()), 0);
  Mono zero = mono_zero(A.n());
  bool nonzero = false;
  for (int i = 0; i < A.n(); ++i) {
    auto it = h[static_cast<size_t>(i)].terms.find(zero);
    if (it != h[static_cast<size_t>(i)].terms.end()) {
      z.c[static_cast<size_t>(i)] = it->second;
      nonzero = true;
    }
  }
  if (!nonzero) fail(Err::ZeroLinearPart, "hypersurface has no linear part");

  // d(sum c_i x_i^{l-1} xi_i) = sum c_i x_i^l = 0 in R.
  KElem zelem;
  for (int i = 0; i < A.n(); ++i) {
    if (z.c[static_cast<size_t>(i)] == 0) continue;
    Mono m = mono_zero(A.n());
    m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(A.l() - 1);
    add_term(zelem, KMono{m, 1u << i}, z.c[static_cast<size_t>(i)], A.field());
  }
  check(kd(A, zelem, Ring::R).empty(), Err::Internal, "reduced cycle is not a cycle");
  return z;
}

TateComplex TateComplex::build(const QciAlgebra& A, const KoszulElem& z, int lo, int hi) {
  check(0 <= lo && lo <= hi, Err::WindowOutOfRange, "need 0 <= lo <= hi");
  const Field& F = A.field();
  int n = A.n();

  TateComplex T;
  T.A_ = &A;
  T.z_ = z.c;
  T.lo_ = lo;
  T.hi_ = hi;

  for (int deg = lo; deg <= hi; ++deg) {
    std::vector<Gen> gs;
    for (int m = 0; 2 * m <= deg; ++m) {
      int j = deg - 2 * m;
      if (j > n) continue;
      for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == j) gs.push_back(Gen{mask, m});
    }
    uint64_t expect = 0;
    for (int j = deg % 2; j <= std::min(deg, n); j += 2) expect += binomial(n, j);
    check(gs.size() == expect, Err::Internal,
          "rank count off in degree " + std::to_string(deg));
    T.gens_.push_back(std::move(gs));
  }

  KElem zelem;
  for (int i = 0; i < n; ++i) {
    if (z.c[static_cast<size_t>(i)] == 0) continue;
    Mono mo = mono_zero(n);
    mo.e[static_cast<size_t>(i)] = static_cast<uint8_t>(A.l() - 1);
    add_term(zelem, KMono{mo, 1u << i}, z.c[static_cast<size_t>(i)], F);
  }

  auto gen_index = [&](int deg, uint32_t mask, int m) -> int {
    const auto& gs = T.gens(deg);
    for (size_t i = 0; i < gs.size(); ++i)
      if (gs[i].mask == mask && gs[i].m == m) return static_cast<int>(i);
    fail(Err::Internal, "missing generator in degree " + std::to_string(deg));
  };

  // D(xi_S y^(m)) = d(xi_S) y^(m) + (z * xi_S) y^(m-1), with coefficients
  // moved to the right of the exterior part so the maps are right R-linear.
  auto right_form = [&](const KElem& el, int m,
                        std::map<std::pair<uint32_t, int>, SkewPoly>& acc) {
    for (const auto& [km, v] : el) {
      FF lam = factor_right(A, km);
      SkewPoly& bucket = acc[{km.mask, m}];
      add_term(bucket, km.e, F.mul(v, lam), F);
    }
  };

  for (int deg = lo + 1; deg <= hi; ++deg) {
    std::vector<std::vector<std::pair<int, SkewPoly>>> dcol;
    for (const Gen& g : T.gens(deg)) {
      KElem unit;
      add_term(unit, KMono{mono_zero(n), g.mask}, 1, F);
      std::map<std::pair<uint32_t, int>, SkewPoly> acc;
      right_form(kd(A, unit, Ring::R), g.m, acc);
      if (g.m >= 1) right_form(kmul(A, zelem, unit, Ring::R), g.m - 1, acc);
      std::vector<std::pair<int, SkewPoly>> img;
      for (auto& [key, poly] : acc) {
        if (poly.empty()) continue;
        img.emplace_back(gen_index(deg - 1, key.first, key.second), std::move(poly));
      }
      dcol.push_back(std::move(img));
    }
    T.diff_.push_back(std::move(dcol));
  }

  // D^2 = 0, symbolically, for every generator with two steps in the window.
  for (int deg = lo + 2; deg <= hi; ++deg) {
    for (size_t src = 0; src < T.gens(deg).size(); ++src) {
      std::map<int, SkewPoly> acc;
      for (const auto& [mid, r1] : T.diff(deg)[src])
        for (const auto& [tgt, r2] : T.diff(deg - 1)[static_cast<size_t>(mid)]) {
          // D(gen_mid * r1) = D(gen_mid) * r1, coefficients multiply r2 * r1
          SkewPoly prod = A.mul(r2, r1, Ring::R);
          SkewPoly& bucket = acc[tgt];
          for (const auto& [m, v] : prod) add_term(bucket, m, v, F);
        }
      for (const auto& [tgt, poly] : acc)
        check(poly.empty(), Err::D2NonZero,
              "D^2 != 0 out of degree " + std::to_string(deg));
    }
  }

  // Periodicity: the shift (j, m) -> (j, m+1) identifies the generator lists
  // two degrees apart from degree n-1 on, and commutes with D from degree n.
  for (int deg = std::max(lo, n - 1); deg + 2 <= hi; ++deg) {
    const auto& a = T.gens(deg);
    const auto& b = T.gens(deg + 2);
    check(a.size() == b.size(), Err::Internal, "periodicity rank mismatch");
    for (size_t i = 0; i < a.size(); ++i)
      check(a[i].mask == b[i].mask && a[i].m + 1 == b[i].m, Err::Internal,
            "periodicity shift misaligned");
  }
  for (int deg = std::max(lo + 1, n); deg + 2 <= hi; ++deg) {
    const auto& lowD = T.diff(deg);
    const auto& highD = T.diff(deg + 2);
    check(lowD.size() == highD.size(), Err::Internal, "periodicity differential mismatch");
    for (size_t src = 0; src < lowD.size(); ++src) {
      auto shifted = lowD[src];
      check(shifted.size() == highD[src].size(), Err::Internal,
            "periodicity differential term count");
      for (size_t t = 0; t < shifted.size(); ++t)
        check(shifted[t].first == highD[src][t].first &&
                  shifted[t].second == highD[src][t].second,
              Err::Internal, "differential does not commute with the shift");
    }
  }

  return T;
}

ChainComplex TateComplex::tensor(const ModuleRep& M) const {
  const QciAlgebra& A = *A_;
  const Field& F = M.field();
  bool ext = !(F == A.field());
  std::vector<FF> emb;
  if (ext) emb = A.field().embedding_into(F);

  // The extra zero term below the window is genuine when lo = 0 (the complex
  // stops there); otherwise homology at the window's bottom degree is junk
  // and callers must not read it.
  int clo = lo_ - 1;
  std::vector<int> dims;
  dims.push_back(0);
  for (int deg = lo_; deg <= hi_; ++deg) dims.push_back(rank(deg) * M.dim);

  std::vector<Matrix> diffs;
  diffs.emplace_back(F, 0, dims[1]);
  for (int deg = lo_ + 1; deg <= hi_; ++deg) {
    Matrix D(F, rank(deg - 1) * M.dim, rank(deg) * M.dim);
    const auto& cols = diff(deg);
    for (size_t src = 0; src < cols.size(); ++src)
      for (const auto& [tgt, r] : cols[src]) {
        SkewPoly rm = r;
        if (ext) {
          SkewPoly t;
          for (const auto& [mo, v] : r) add_term(t, mo, emb[v], F);
          rm = std::move(t);
        }
        Matrix block = module_apply(A, M, rm);
        for (int u = 0; u < M.dim; ++u)
          for (int t2 = 0; t2 < M.dim; ++t2) {
            FF v = block.at(u, t2);
            if (v != 0)
              D.set(tgt * M.dim + u, static_cast<int>(src) * M.dim + t2, v);
          }
      }
    diffs.push_back(std::move(D));
  }
  return ChainComplex(F, clo, hi_, std::move(dims), std::move(diffs));
}

TateComplex tate_complex(const QciAlgebra& A, const ProjPoint& c, int lo, int hi) {
  check(static_cast<int>(c.c.size()) == A.n(), Err::ValidationError, "point dimension");
  ProjPoint p = normalize_point(A.field(), c.c);
  return TateComplex::build(A, KoszulElem{p.c}, lo, hi);
}

namespace {

std::vector<int> tor_dims_from_cycle(const QciAlgebra& A, const ModuleRep& M,
                                     const KoszulElem& z, int lo, int hi) {
  check(0 <= lo && lo <= hi, Err::WindowOutOfRange, "need 0 <= lo <= hi");
  TateComplex T = TateComplex::build(A, z, std::max(0, lo - 1), hi + 1);
  ChainComplex C = T.tensor(M);
  std::vector<int> h = homology_dims(C);  // degrees C.lo()+1 .. C.hi()-1
  std::vector<int> out;
  for (int deg = lo; deg <= hi; ++deg) out.push_back(h[static_cast<size_t>(deg - C.lo() - 1)]);
  return out;
}

}  // namespace

std::vector<int> tor_dims(const QciAlgebra& A, const ModuleRep& M, const ProjPoint& c, int lo,
                          int hi) {
  ProjPoint p = normalize_point(M.field(), c.c);
  check(static_cast<int>(p.c.size()) == A.n(), Err::ValidationError, "point dimension");
  // The cycle coefficients live in the module's field; build the complex over
  // the matching algebra.
  if (M.field() == A.field()) return tor_dims_from_cycle(A, M, KoszulElem{p.c}, lo, hi);
  check(M.field().p() == A.field().p() && M.field().e() % A.field().e() == 0,
        Err::PreconditionViolated, "module field does not extend the algebra's field");
  std::vector<FF> emb;
  QciAlgebra big = A.extended(M.field().e(), emb);
  return tor_dims_from_cycle(big, M, KoszulElem{p.c}, lo, hi);
}

std::vector<int> tor_dims_from_poly(const QciAlgebra& A, const ModuleRep& M,
                                    const HypersurfacePoly& f, int lo, int hi) {
  KoszulElem z = bounding_cocycle_reduced(A, f);
  check(M.field() == A.field(), Err::PreconditionViolated,
        "module must live over the algebra's field");
  return tor_dims_from_cycle(A, M, z, lo, hi);
}

bool supported_at(const QciAlgebra& A, const ModuleRep& M, const ProjPoint& c) {
  int n = A.n();
  std::vector<int> t = tor_dims(A, M, c, n + 1, n + 2);
  return t[0] > 0 || t[1] > 0;
}

SupportReport support_enumerate(const QciAlgebra& A, const ModuleRep& M, int e,
                                const std::string& module_name) {
  check(e >= 1, Err::PreconditionViolated, "extension degree must be >= 1");
  check(M.field() == A.field(), Err::PreconditionViolated,
        "enumeration expects the module over the algebra's own field");
  check(e % A.field().e() == 0, Err::PreconditionViolated,
        "extension degree must be a multiple of the base degree");
  double logpts = static_cast<double>(e) * A.n() * std::log2(static_cast<double>(A.field().p()));
  if (logpts > 20.0) fail(Err::EnumerationTooLarge, "too many rational points to enumerate");

  const QciAlgebra* use = &A;
  ModuleRep M_use = M;
  QciAlgebra big = A;  // placeholder copy
  if (e != A.field().e()) {
    std::vector<FF> emb;
    big = A.extended(e, emb);
    M_use = extend_scalars(big, M, emb);
    use = &big;
  }

  SupportReport rep;
  rep.module_name = module_name;
  rep.extension_degree = e;
  int n = use->n();
  for (const ProjPoint& pt : enumerate_proj_points(use->field(), n)) {
    std::vector<int> t = tor_dims(*use, M_use, pt, n + 1, n + 2);
    SupportReport::Entry entry;
    entry.point = pt;
    entry.tor_window = t;
    entry.supported = t[0] > 0 || t[1] > 0;
    rep.points.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace qci
