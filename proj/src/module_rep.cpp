#include "qci/module_rep.hpp"

#include <algorithm>

#include "qci/util.hpp"

namespace qci {

ModuleRep module_validate(const QciAlgebra& A, int dim, std::vector<Matrix> X) {
  const Field& F = X.empty() ? A.field() : X.front().field();
  check(F.p() == A.field().p(), Err::ValidationError, "module field has wrong characteristic");
  if (X.size() != static_cast<size_t>(A.n()))
    fail(Err::ValidationError, "expected " + std::to_string(A.n()) + " action matrices");
  for (const Matrix& m : X)
    if (m.rows() != dim || m.cols() != dim)
      fail(Err::ValidationError, "action matrix shape mismatch");

  // q inside the module's field: the module may live over an extension.
  FF q = A.q();
  if (F != A.field()) {
    std::vector<FF> emb = A.field().embedding_into(F);
    q = emb[A.q()];
  }

  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) {
      if (i == j) continue;
      FF qa = F.pow(q, A.a(i, j));
      Matrix lhs = X[static_cast<size_t>(i)].mul(X[static_cast<size_t>(j)]);
      Matrix rhs = X[static_cast<size_t>(j)].mul(X[static_cast<size_t>(i)]).scale(qa);
      if (!(lhs == rhs)) {
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c)
            if (lhs.at(r, c) != rhs.at(r, c))
              fail(Err::RelationViolated,
                   "X_" + std::to_string(i + 1) + " X_" + std::to_string(j + 1) +
                       " != q^a X_" + std::to_string(j + 1) + " X_" + std::to_string(i + 1) +
                       " at entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  for (int i = 0; i < A.n(); ++i) {
    Matrix p = Matrix::identity(F, dim);
    for (int t = 0; t < A.l(); ++t) p = p.mul(X[static_cast<size_t>(i)]);
    if (!p.is_zero())
      fail(Err::NilpotencyViolated,
           "X_" + std::to_string(i + 1) + "^l != 0 (dim " + std::to_string(dim) + ")");
  }
  return ModuleRep{dim, std::move(X)};
}

Matrix module_apply(const QciAlgebra& A, const ModuleRep& M, const SkewPoly& r) {
  const Field& F = M.field();
  Matrix acc(F, M.dim, M.dim);
  for (const auto& [m, v] : r) {
    Matrix t = Matrix::identity(F, M.dim);
    for (int i = 0; i < A.n(); ++i)
      for (int c = 0; c < m.e[static_cast<size_t>(i)]; ++c)
        t = t.mul(M.X[static_cast<size_t>(i)]);
    acc = acc.add(t.scale(v));
  }
  return acc;
}

ModuleRep regular_module(const QciAlgebra& A) {
  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) X.push_back(A.regular_action(i));
  return module_validate(A, static_cast<int>(A.rdim()), std::move(X));
}

ModuleRep free_module(const QciAlgebra& A, int rank) {
  int d = static_cast<int>(A.rdim()) * rank;
  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) {
    Matrix m(A.field(), d, d);
    const Matrix& reg = A.regular_action(i);
    for (int b = 0; b < rank; ++b)
      for (int r = 0; r < reg.rows(); ++r)
        for (int c = 0; c < reg.cols(); ++c)
          if (reg.at(r, c) != 0)
            m.set(b * reg.rows() + r, b * reg.cols() + c, reg.at(r, c));
    X.push_back(std::move(m));
  }
  return module_validate(A, d, std::move(X));
}

ModuleRep trivial_module(const QciAlgebra& A) {
  std::vector<Matrix> X(static_cast<size_t>(A.n()), Matrix(A.field(), 1, 1));
  return module_validate(A, 1, std::move(X));
}

ModuleRep direct_sum(const QciAlgebra& A, const ModuleRep& M, const ModuleRep& N) {
  int d = M.dim + N.dim;
  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) {
    Matrix m(M.field(), d, d);
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c) m.set(r, c, M.X[static_cast<size_t>(i)].at(r, c));
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < N.dim; ++c)
        m.set(M.dim + r, M.dim + c, N.X[static_cast<size_t>(i)].at(r, c));
    X.push_back(std::move(m));
  }
  return module_validate(A, d, std::move(X));
}

Submodule span_submodule(const QciAlgebra& A, const ModuleRep& M,
                         const std::vector<std::vector<FF>>& gens) {
  const Field& F = M.field();
  Matrix cur = Matrix::from_rows(F, gens, M.dim).rref().mat;
  // strip zero rows
  auto strip = [&](const Matrix& m) {
    std::vector<std::vector<FF>> rows;
    for (int r = 0; r < m.rows(); ++r) {
      std::vector<FF> v = m.row(r);
      if (std::any_of(v.begin(), v.end(), [](FF x) { return x != 0; })) rows.push_back(v);
    }
    return Matrix::from_rows(F, rows, m.cols());
  };
  cur = strip(cur);
  for (;;) {
    Matrix next = cur;
    for (int i = 0; i < A.n(); ++i) {
      Matrix img(F, cur.rows(), M.dim);
      for (int r = 0; r < cur.rows(); ++r)
        img.set_row(r, M.X[static_cast<size_t>(i)].apply(cur.row(r)));
      next = next.vstack(img);
    }
    Matrix reduced = strip(next.rref().mat);
    if (reduced.rows() == cur.rows()) {
      auto ech = reduced.rref();
      return Submodule{ech.mat, ech.pivots};
    }
    cur = reduced;
  }
}

ModuleRep submodule_rep(const QciAlgebra& A, const ModuleRep& M, const Submodule& S) {
  const Field& F = M.field();
  int d = S.basis.rows();
  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) {
    Matrix Y(F, d, d);
    for (int c = 0; c < d; ++c) {
      std::vector<FF> img = M.X[static_cast<size_t>(i)].apply(S.basis.row(c));
      std::vector<FF> coords = coords_in_span(S.basis, S.pivots, img);
      for (int r = 0; r < d; ++r) Y.set(r, c, coords[static_cast<size_t>(r)]);
    }
    X.push_back(std::move(Y));
  }
  return module_validate(A, d, std::move(X));
}

ModuleRep quotient_rep(const QciAlgebra& A, const ModuleRep& M, const Submodule& S) {
  const Field& F = M.field();
  std::vector<bool> is_pivot(static_cast<size_t>(M.dim), false);
  for (int c : S.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < M.dim; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  int d = static_cast<int>(free_cols.size());

  // Reduce a vector mod S, then read off the free coordinates.
  auto project = [&](std::vector<FF> v) {
    for (int r = 0; r < S.basis.rows(); ++r) {
      FF c = v[static_cast<size_t>(S.pivots[static_cast<size_t>(r)])];
      if (c == 0) continue;
      for (int j = 0; j < M.dim; ++j) v[static_cast<size_t>(j)] =
          F.sub(v[static_cast<size_t>(j)], F.mul(c, S.basis.at(r, j)));
    }
    std::vector<FF> out(static_cast<size_t>(d));
    for (int t = 0; t < d; ++t) out[static_cast<size_t>(t)] =
        v[static_cast<size_t>(free_cols[static_cast<size_t>(t)])];
    return out;
  };

  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) {
    Matrix Y(F, d, d);
    for (int c = 0; c < d; ++c) {
      std::vector<FF> lift(static_cast<size_t>(M.dim), 0);
      lift[static_cast<size_t>(free_cols[static_cast<size_t>(c)])] = 1;
      std::vector<FF> img = project(M.X[static_cast<size_t>(i)].apply(lift));
      for (int r = 0; r < d; ++r) Y.set(r, c, img[static_cast<size_t>(r)]);
    }
    X.push_back(std::move(Y));
  }
  return module_validate(A, d, std::move(X));
}

Cover projective_cover(const QciAlgebra& A, const ModuleRep& M) {
  const Field& F = M.field();
  int n = A.n();
  uint32_t ln = A.rdim();

  // Radical = sum of the images of the X_i.
  std::vector<std::vector<FF>> rad_rows;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < M.dim; ++c) {
      std::vector<FF> e(static_cast<size_t>(M.dim), 0);
      e[static_cast<size_t>(c)] = 1;
      rad_rows.push_back(M.X[static_cast<size_t>(i)].apply(e));
    }
  Matrix rad = Matrix::from_rows(F, rad_rows, M.dim);
  auto ech = rad.rref();
  std::vector<bool> is_pivot(static_cast<size_t>(M.dim), false);
  for (int c : ech.pivots) is_pivot[static_cast<size_t>(c)] = true;

  // Generators: standard basis vectors on the non-pivot coordinates form a
  // basis of M / rad M.
  std::vector<int> gen_cols;
  for (int c = 0; c < M.dim; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) gen_cols.push_back(c);
  int b0 = static_cast<int>(gen_cols.size());

  Matrix pi(F, M.dim, b0 * static_cast<int>(ln));
  // Precompute action matrices per R-basis monomial lazily column by column:
  // x^beta * v via the power cache below.
  std::vector<std::vector<Matrix>> xpow(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    xpow[static_cast<size_t>(i)].push_back(Matrix::identity(F, M.dim));
    for (int s = 1; s < A.l(); ++s)
      xpow[static_cast<size_t>(i)].push_back(
          xpow[static_cast<size_t>(i)].back().mul(M.X[static_cast<size_t>(i)]));
  }
  for (int u = 0; u < b0; ++u) {
    std::vector<FF> v(static_cast<size_t>(M.dim), 0);
    v[static_cast<size_t>(gen_cols[static_cast<size_t>(u)])] = 1;
    for (uint32_t b = 0; b < ln; ++b) {
      const Mono& mono = A.rmono(b);
      std::vector<FF> w = v;
      for (int i = n - 1; i >= 0; --i)
        if (mono.e[static_cast<size_t>(i)] > 0)
          w = xpow[static_cast<size_t>(i)][mono.e[static_cast<size_t>(i)]].apply(w);
      for (int r = 0; r < M.dim; ++r)
        pi.set(r, u * static_cast<int>(ln) + static_cast<int>(b), w[static_cast<size_t>(r)]);
    }
  }

  check(pi.rank() == M.dim, Err::Internal, "projective cover is not surjective");
  Matrix ker = pi.kernel_basis();
  auto kech = ker.rref();
  return Cover{b0, pi, kech.mat, kech.pivots};
}

ModuleRep syzygy(const QciAlgebra& A, const ModuleRep& M) {
  Cover cov = projective_cover(A, M);
  const Field& F = M.field();
  int d = cov.kernel.rows();
  int ln = static_cast<int>(A.rdim());
  std::vector<Matrix> X;
  for (int i = 0; i < A.n(); ++i) {
    const Matrix& reg = A.regular_action(i);
    Matrix Y(F, d, d);
    for (int c = 0; c < d; ++c) {
      std::vector<FF> v = cov.kernel.row(c);
      std::vector<FF> img(v.size(), 0);
      // block-diagonal regular action on the free module
      for (int u = 0; u < cov.b0; ++u)
        for (int r = 0; r < ln; ++r) {
          FF acc = 0;
          for (int s = 0; s < ln; ++s) {
            FF w = reg.at(r, s);
            if (w != 0) acc = F.add(acc, F.mul(w, v[static_cast<size_t>(u * ln + s)]));
          }
          img[static_cast<size_t>(u * ln + r)] = acc;
        }
      std::vector<FF> coords = coords_in_span(cov.kernel, cov.kernel_pivots, img);
      for (int r = 0; r < d; ++r) Y.set(r, c, coords[static_cast<size_t>(r)]);
    }
    X.push_back(std::move(Y));
  }
  return module_validate(A, d, std::move(X));
}

bool module_is_free(const QciAlgebra& A, const ModuleRep& M) {
  Cover cov = projective_cover(A, M);
  bool by_dim = static_cast<uint64_t>(M.dim) ==
                static_cast<uint64_t>(cov.b0) * A.rdim();
  bool by_syzygy = cov.kernel.rows() == 0;
  check(by_dim == by_syzygy, Err::Internal, "freeness criteria disagree");
  return by_dim;
}

std::vector<ModuleRep> corpus_generate(const QciAlgebra& A, uint64_t seed, int count,
                                       int max_rank) {
  check(count >= 0 && max_rank >= 1, Err::PreconditionViolated, "bad corpus parameters");
  Rng rng(seed);
  std::vector<ModuleRep> out;
  while (static_cast<int>(out.size()) < count) {
    int rank = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(max_rank)));
    ModuleRep F = free_module(A, rank);
    int ngens = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(rank + 1)));
    std::vector<std::vector<FF>> gens;
    for (int g = 0; g < ngens; ++g) {
      std::vector<FF> v(static_cast<size_t>(F.dim));
      for (auto& x : v) x = rng.below(A.field().size());
      gens.push_back(std::move(v));
    }
    Submodule S = span_submodule(A, F, gens);
    if (S.basis.rows() == F.dim) continue;  // zero quotient: regenerate
    out.push_back(quotient_rep(A, F, S));
  }
  return out;
}

ModuleRep extend_scalars(const QciAlgebra& A_ext, const ModuleRep& M,
                         const std::vector<FF>& emb) {
  std::vector<Matrix> X;
  for (const Matrix& m : M.X) {
    Matrix t(A_ext.field(), m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) t.set(r, c, emb[m.at(r, c)]);
    X.push_back(std::move(t));
  }
  return module_validate(A_ext, M.dim, std::move(X));
}

std::vector<std::pair<std::string, ModuleRep>> designed_modules(const QciAlgebra& A) {
  std::vector<std::pair<std::string, ModuleRep>> out;
  ModuleRep R = regular_module(A);
  out.emplace_back("R", R);
  out.emplace_back("R2", free_module(A, 2));
  out.emplace_back("k", trivial_module(A));
  out.emplace_back("R_plus_k", direct_sum(A, R, trivial_module(A)));
  // R / R x_1
  std::vector<FF> gen(static_cast<size_t>(R.dim), 0);
  gen[A.rindex(mono_gen(A.n(), 0))] = 1;
  Submodule S = span_submodule(A, R, {gen});
  out.emplace_back("R_mod_x1", quotient_rep(A, R, S));
  return out;
}

}  // namespace qci
