#pragma once

#include <string>

#include "qci/algebra.hpp"

namespace qci {

// Finite dimensional left module: n action matrices over the algebra's field
// (or an extension) satisfying the defining relations and nilpotency.
struct ModuleRep {
  int dim = 0;
  std::vector<Matrix> X;

  const Field& field() const { return X.front().field(); }
};

// Validates the relations X_i X_j = q^{a_ij} X_j X_i and X_i^l = 0; throws
// RelationViolated / NilpotencyViolated with the first offending witness.
ModuleRep module_validate(const QciAlgebra& A, int dim, std::vector<Matrix> X);

// Action of an element of R.
Matrix module_apply(const QciAlgebra& A, const ModuleRep& M, const SkewPoly& r);

ModuleRep regular_module(const QciAlgebra& A);
ModuleRep free_module(const QciAlgebra& A, int rank);
ModuleRep trivial_module(const QciAlgebra& A);
ModuleRep direct_sum(const QciAlgebra& A, const ModuleRep& M, const ModuleRep& N);

// Submodule spanned by the given vectors, closed under the action; basis rows
// are in reduced echelon form.
struct Submodule {
  Matrix basis;
  std::vector<int> pivots;
};
Submodule span_submodule(const QciAlgebra& A, const ModuleRep& M,
                         const std::vector<std::vector<FF>>& gens);

ModuleRep submodule_rep(const QciAlgebra& A, const ModuleRep& M, const Submodule& S);
ModuleRep quotient_rep(const QciAlgebra& A, const ModuleRep& M, const Submodule& S);

// Projective cover R^{b0} ->> M; pi columns are indexed generator-major by
// (generator u, R-basis monomial beta).
struct Cover {
  int b0 = 0;
  Matrix pi;      // dim(M) x (b0 * l^n)
  Matrix kernel;  // RREF rows inside the free module
  std::vector<int> kernel_pivots;
};
Cover projective_cover(const QciAlgebra& A, const ModuleRep& M);

// First syzygy (kernel of the projective cover) as a module; dim 0 for free M.
ModuleRep syzygy(const QciAlgebra& A, const ModuleRep& M);

// Free iff dim = b0 * l^n; additionally checked against the vanishing of the
// first syzygy, and the two answers are asserted to agree.
bool module_is_free(const QciAlgebra& A, const ModuleRep& M);

// Seeded corpus of quotients F/S with F free of rank <= max_rank and S a
// random submodule; the zero module is excluded (regenerated). Bit-identical
// across runs for a fixed seed.
std::vector<ModuleRep> corpus_generate(const QciAlgebra& A, uint64_t seed, int count,
                                       int max_rank);

// Entrywise scalar extension along a field embedding (emb maps codes of
// M.field() into A_ext.field()).
ModuleRep extend_scalars(const QciAlgebra& A_ext, const ModuleRep& M,
                         const std::vector<FF>& emb);

// Named standard modules used by the verification suites:
// R, R2 (free rank 2), k, R_plus_k, R_mod_x1 (quotient by the left submodule
// generated by x_1).
std::vector<std::pair<std::string, ModuleRep>> designed_modules(const QciAlgebra& A);

}  // namespace qci
