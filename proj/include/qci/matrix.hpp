#pragma once

#include <vector>

#include "qci/field.hpp"

namespace qci {

struct Echelon;

// Dense row-major matrix over a finite field. All elimination is
// deterministic: pivots are chosen leftmost-column-first, first usable row.
class Matrix {
public:
  Matrix(const Field& F, int rows, int cols)
      : F_(F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(const Field& F, int n);
  static Matrix from_rows(const Field& F, const std::vector<std::vector<FF>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return F_; }

  FF at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, FF v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }

  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix scale(FF s) const;
  Matrix transpose() const;
  bool is_zero() const;

  std::vector<FF> apply(const std::vector<FF>& v) const;  // column-vector action
  std::vector<FF> row(int r) const;
  void set_row(int r, const std::vector<FF>& v);

  // Stack o below this matrix (same column count).
  Matrix vstack(const Matrix& o) const;
  // Put o to the right of this matrix (same row count).
  Matrix hstack(const Matrix& o) const;

  Echelon rref() const;
  int rank() const;

  // Rows span the right kernel {v : A v = 0}; reduced echelon, one row per
  // free column in ascending column order.
  Matrix kernel_basis() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  Field F_;
  int rows_, cols_;
  std::vector<FF> a_;
};

struct Echelon {
  Matrix mat;               // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row, increasing
};

// Rank via sparse elimination; must agree with Matrix::rank. Used as an
// internal fast path for large low-density matrices.
int sparse_rank(const Matrix& m);

// Coordinates of v in the span of an RREF basis (rows of `basis` with pivot
// columns `pivots`); checks that v really lies in the span.
std::vector<FF> coords_in_span(const Matrix& basis, const std::vector<int>& pivots,
                               const std::vector<FF>& v);

// Entrywise application of a field embedding (emb maps source codes to codes
// of K).
Matrix embed_matrix(const Matrix& m, const Field& K, const std::vector<FF>& emb);

}  // namespace qci
