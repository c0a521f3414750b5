#include "qci/operators.hpp"

#include <algorithm>
#include <cmath>

namespace qci {

namespace {

// Monomials of total degree t in n variables, ascending exponent-vector
// order.
void degree_monomials(int n, int t, int pos, Mono& cur, std::vector<Mono>& out) {
  if (pos == n - 1) {
    cur.e[static_cast<size_t>(pos)] = static_cast<uint8_t>(t);
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= t; ++v) {
    cur.e[static_cast<size_t>(pos)] = static_cast<uint8_t>(v);
    degree_monomials(n, t - v, pos + 1, cur, out);
  }
}

std::vector<Mono> monomials_of_degree(int n, int t) {
  std::vector<Mono> out;
  Mono cur = mono_zero(n);
  degree_monomials(n, t, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Matrix of the monomial chi^gamma : Ext^s -> Ext^{s+2|gamma|}, composing the
// single operators in ascending variable order.
Matrix monomial_action(const GradedExtModule& ext, const Field& F, const Mono& gamma, int s) {
  int b_s = ext.dims[static_cast<size_t>(s)];
  Matrix m = Matrix::identity(F, b_s);
  int deg = s;
  for (int i = 0; i < ext.n; ++i)
    for (int rep = 0; rep < gamma.e[static_cast<size_t>(i)]; ++rep) {
      m = ext.ops.op[static_cast<size_t>(i)][static_cast<size_t>(deg)].mul(m);
      deg += 2;
    }
  return m;
}

}  // namespace

OperatorFamily cohomological_operators(const QciAlgebra& A, const Resolution& res) {
  const Field& F = A.field();
  int n = A.n();
  int l = A.l();
  check(res.D >= 2, Err::PreconditionViolated, "resolution too short for operators");

  OperatorFamily fam;
  fam.op.assign(static_cast<size_t>(n), {});

  for (int s = 0; s + 2 <= res.D; ++s) {
    int b_lo = res.betti[static_cast<size_t>(s)];
    int b_mid = res.betti[static_cast<size_t>(s + 1)];
    int b_hi = res.betti[static_cast<size_t>(s + 2)];
    const auto& d1 = res.diff[static_cast<size_t>(s)];      // R^{b_mid} -> R^{b_lo}
    const auto& d2 = res.diff[static_cast<size_t>(s + 1)];  // R^{b_hi} -> R^{b_mid}

    std::vector<Matrix> t_const(static_cast<size_t>(n), Matrix(F, b_hi, b_lo));
    for (int t = 0; t < b_hi; ++t)
      for (int w = 0; w < b_lo; ++w) {
        // composite of the lifts in the untruncated ring; the entries are the
        // same exponent data, multiplied without truncation
        SkewPoly comp;
        for (int u = 0; u < b_mid; ++u) {
          SkewPoly prod = A.mul(d2[static_cast<size_t>(t) * b_mid + u],
                                d1[static_cast<size_t>(u) * b_lo + w], Ring::Q);
          comp = A.add(comp, prod);
        }
        // split off x_i^l at the smallest index with exponent >= l; the
        // truncated composite vanishes, so every monomial must have one
        for (const auto& [mo, v] : comp) {
          int i = 0;
          while (i < n && mo.e[static_cast<size_t>(i)] < l) ++i;
          if (i == n)
            fail(Err::LiftResidue,
                 "composite entry has a monomial clear of every x_i^l");
          if (mo.e[static_cast<size_t>(i)] == l && mo.total() == l)
            t_const[static_cast<size_t>(i)].set(t, w, v);
        }
      }
    for (int i = 0; i < n; ++i) fam.op[static_cast<size_t>(i)].push_back(t_const[static_cast<size_t>(i)]);
  }

  // chi_i chi_j = chi_j chi_i on every degree with room for the composite
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s = 0; s + 4 <= res.D; ++s) {
        Matrix lhs = fam.op[static_cast<size_t>(i)][static_cast<size_t>(s + 2)].mul(
            fam.op[static_cast<size_t>(j)][static_cast<size_t>(s)]);
        Matrix rhs = fam.op[static_cast<size_t>(j)][static_cast<size_t>(s + 2)].mul(
            fam.op[static_cast<size_t>(i)][static_cast<size_t>(s)]);
        check(lhs == rhs, Err::Internal, "operators fail to commute at degree " +
                                             std::to_string(s));
      }

  return fam;
}

GradedExtModule ext_module(const QciAlgebra& A, const ModuleRep& V, int D) {
  check(D >= A.n() + 4, Err::PreconditionViolated,
        "depth must be at least n + 4 for a stable window");
  Resolution res = minimal_resolution(A, V, D);
  GradedExtModule ext;
  ext.D = D;
  ext.n = A.n();
  ext.dims = res.betti;
  ext.ops = cohomological_operators(A, res);
  for (int s = 1; s <= D; ++s)
    if (res.betti[static_cast<size_t>(s)] == 0) ext.bounded = true;
  return ext;
}

bool fiber_supported_at(const QciAlgebra& A, const GradedExtModule& ext, const ProjPoint& c,
                        const Field& K, int lo, int hi) {
  int n = ext.n;
  check(n <= lo && lo <= hi - 1 && hi <= ext.D - 2, Err::WindowOutOfRange,
        "need n <= lo < hi <= D - 2");
  ProjPoint p = normalize_point(K, c.c);
  check(static_cast<int>(p.c.size()) == n, Err::ValidationError, "point dimension");

  bool same_field = K == A.field();
  std::vector<FF> emb;
  if (!same_field) emb = A.field().embedding_into(K);
  auto lift = [&](const Matrix& m) { return same_field ? m : embed_matrix(m, K, emb); };

  // n-1 independent combinations orthogonal to c
  Matrix crow(K, 1, n);
  for (int i = 0; i < n; ++i) crow.set(0, i, p.c[static_cast<size_t>(i)]);
  Matrix combos = crow.kernel_basis();

  for (int s = hi - 1; s <= hi; ++s) {
    int b_s = ext.dims[static_cast<size_t>(s)];
    if (b_s == 0) continue;
    int b_src = ext.dims[static_cast<size_t>(s - 2)];
    Matrix image(K, b_s, 0);
    for (int r = 0; r < combos.rows(); ++r) {
      Matrix comb(K, b_s, b_src);
      for (int i = 0; i < n; ++i) {
        FF u = combos.at(r, i);
        if (u == 0) continue;
        comb = comb.add(lift(ext.ops.op[static_cast<size_t>(i)][static_cast<size_t>(s - 2)])
                            .scale(u));
      }
      image = image.hstack(comb);
    }
    if (image.rank() < b_s) return true;  // quotient nonzero in this degree
  }
  return false;
}

AnnWindow annihilator_window(const QciAlgebra& A, const GradedExtModule& ext, int d_max) {
  const Field& F = A.field();
  int n = ext.n;
  check(d_max >= 1, Err::PreconditionViolated, "degree bound must be >= 1");
  check(ext.D >= n + 2 * d_max + 2, Err::PreconditionViolated,
        "depth must be at least n + 2*d_max + 2");

  AnnWindow ann;
  ann.d_max = d_max;
  ann.window_lo = n;
  ann.window_hi = ext.D - 2 * d_max;
  ann.bounded = ext.bounded;

  for (int t = 1; t <= d_max; ++t) {
    AnnWindow::Piece piece{t, monomials_of_degree(n, t), Matrix(F, 0, 0)};
    int nm = static_cast<int>(piece.monomials.size());

    int eqs = 0;
    for (int s = ann.window_lo; s <= ann.window_hi; ++s)
      eqs += ext.dims[static_cast<size_t>(s + 2 * t)] * ext.dims[static_cast<size_t>(s)];
    Matrix sys(F, eqs, nm);
    int row0 = 0;
    for (int s = ann.window_lo; s <= ann.window_hi; ++s) {
      int b_s = ext.dims[static_cast<size_t>(s)];
      int b_t = ext.dims[static_cast<size_t>(s + 2 * t)];
      for (int g = 0; g < nm; ++g) {
        Matrix act = monomial_action(ext, F, piece.monomials[static_cast<size_t>(g)], s);
        for (int r = 0; r < b_t; ++r)
          for (int c = 0; c < b_s; ++c) sys.set(row0 + r * b_s + c, g, act.at(r, c));
      }
      row0 += b_t * b_s;
    }
    piece.basis = sys.kernel_basis();
    ann.pieces.push_back(std::move(piece));
  }
  return ann;
}

std::vector<ProjPoint> zero_locus(const QciAlgebra& A, const AnnWindow& ann, int e) {
  check(e >= 1 && e % A.field().e() == 0, Err::PreconditionViolated,
        "extension degree must be a positive multiple of the base degree");
  double logpts =
      static_cast<double>(e) * A.n() * std::log2(static_cast<double>(A.field().p()));
  if (logpts > 20.0) fail(Err::EnumerationTooLarge, "too many rational points to enumerate");

  Field K = Field::create(A.field().p(), e);
  bool same_field = K == A.field();
  std::vector<FF> emb;
  if (!same_field) emb = A.field().embedding_into(K);
  auto lift = [&](FF v) { return same_field ? v : emb[v]; };

  std::vector<ProjPoint> locus;
  for (const ProjPoint& pt : enumerate_proj_points(K, A.n())) {
    bool all_zero = true;
    for (const auto& piece : ann.pieces) {
      for (int r = 0; r < piece.basis.rows() && all_zero; ++r) {
        FF val = 0;
        for (size_t g = 0; g < piece.monomials.size(); ++g) {
          FF coef = lift(piece.basis.at(r, static_cast<int>(g)));
          if (coef == 0) continue;
          FF term = coef;
          for (int i = 0; i < A.n(); ++i)
            for (int rep = 0; rep < piece.monomials[g].e[static_cast<size_t>(i)]; ++rep)
              term = K.mul(term, pt.c[static_cast<size_t>(i)]);
          val = K.add(val, term);
        }
        if (val != 0) all_zero = false;
      }
      if (!all_zero) break;
    }
    if (all_zero) locus.push_back(pt);
  }
  return locus;
}

}  // namespace qci
