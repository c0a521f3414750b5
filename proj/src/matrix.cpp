#include "qci/matrix.hpp"

#include <algorithm>
#include <map>

namespace qci {

Matrix Matrix::identity(const Field& F, int n) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<std::vector<FF>>& rows, int cols) {
  Matrix m(F, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    check(static_cast<int>(rows[r].size()) == cols, Err::Internal, "row length mismatch");
    for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::mul(const Matrix& o) const {
  check(cols_ == o.rows_ && F_ == o.F_, Err::Internal, "matrix product shape mismatch");
  Matrix r(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      FF v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        FF w = o.at(k, j);
        if (w == 0) continue;
        r.set(i, j, F_.add(r.at(i, j), F_.mul(v, w)));
      }
    }
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, Err::Internal, "matrix sum shape mismatch");
  Matrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scale(FF s) const {
  Matrix r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.mul(a_[i], s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](FF v) { return v == 0; });
}

std::vector<FF> Matrix::apply(const std::vector<FF>& v) const {
  check(static_cast<int>(v.size()) == cols_, Err::Internal, "apply length mismatch");
  std::vector<FF> r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    FF acc = 0;
    const FF* row = a_.data() + static_cast<size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j)
      if (row[j] != 0 && v[j] != 0) acc = F_.add(acc, F_.mul(row[j], v[j]));
    r[i] = acc;
  }
  return r;
}

std::vector<FF> Matrix::row(int r) const {
  return std::vector<FF>(a_.begin() + static_cast<size_t>(r) * cols_,
                         a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void Matrix::set_row(int r, const std::vector<FF>& v) {
  check(static_cast<int>(v.size()) == cols_, Err::Internal, "set_row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(r) * cols_);
}

Matrix Matrix::vstack(const Matrix& o) const {
  check(cols_ == o.cols_, Err::Internal, "vstack column mismatch");
  Matrix r(F_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  check(rows_ == o.rows_, Err::Internal, "hstack row mismatch");
  Matrix r(F_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Echelon Matrix::rref() const {
  Matrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) {
        FF t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    FF s = F_.inv(m.at(r, c));
    if (s != 1)
      for (int j = c; j < cols_; ++j) m.set(r, j, F_.mul(m.at(r, j), s));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      FF f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols_; ++j) m.set(i, j, F_.sub(m.at(i, j), F_.mul(f, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

Matrix Matrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(F_, static_cast<int>(free_cols.size()), cols_);
  for (size_t t = 0; t < free_cols.size(); ++t) {
    int fc = free_cols[t];
    k.set(static_cast<int>(t), fc, 1);
    for (size_t pr = 0; pr < e.pivots.size(); ++pr)
      k.set(static_cast<int>(t), e.pivots[pr], F_.neg(e.mat.at(static_cast<int>(pr), fc)));
  }
  return k;
}

int sparse_rank(const Matrix& m) {
  const Field& F = m.field();
  // Row-wise sorted (col, val) lists; eliminate on the smallest leading
  // column, preferring the shortest row so fill-in stays modest.
  std::vector<std::vector<std::pair<int, FF>>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::pair<int, FF>> r;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r.emplace_back(j, m.at(i, j));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  int rank = 0;
  while (!rows.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].front().first < rows[best].front().first ||
          (rows[i].front().first == rows[best].front().first &&
           rows[i].size() < rows[best].size()))
        best = i;
    }
    std::vector<std::pair<int, FF>> piv = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<long>(best));
    ++rank;
    int pc = piv.front().first;
    FF pinv = F.inv(piv.front().second);
    std::vector<std::vector<std::pair<int, FF>>> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      if (r.front().first != pc) {
        next.push_back(std::move(r));
        continue;
      }
      FF f = F.mul(r.front().second, pinv);
      // r -= f * piv, merged walk
      std::vector<std::pair<int, FF>> out;
      size_t a = 0, b = 0;
      while (a < r.size() || b < piv.size()) {
        if (b == piv.size() || (a < r.size() && r[a].first < piv[b].first)) {
          out.push_back(r[a++]);
        } else if (a == r.size() || piv[b].first < r[a].first) {
          out.emplace_back(piv[b].first, F.neg(F.mul(f, piv[b].second)));
          ++b;
        } else {
          FF v = F.sub(r[a].second, F.mul(f, piv[b].second));
          if (v != 0) out.emplace_back(r[a].first, v);
          ++a;
          ++b;
        }
      }
      if (!out.empty()) next.push_back(std::move(out));
    }
    rows = std::move(next);
  }
  return rank;
}

std::vector<FF> coords_in_span(const Matrix& basis, const std::vector<int>& pivots,
                               const std::vector<FF>& v) {
  const Field& F = basis.field();
  check(pivots.size() == static_cast<size_t>(basis.rows()), Err::Internal, "pivot count");
  std::vector<FF> coords(basis.rows());
  std::vector<FF> resid = v;
  for (int r = 0; r < basis.rows(); ++r) {
    FF c = resid[pivots[r]];
    coords[r] = c;
    if (c == 0) continue;
    for (int j = 0; j < basis.cols(); ++j)
      resid[j] = F.sub(resid[j], F.mul(c, basis.at(r, j)));
  }
  for (FF x : resid) check(x == 0, Err::Internal, "vector not in span");
  return coords;
}

Matrix embed_matrix(const Matrix& m, const Field& K, const std::vector<FF>& emb) {
  Matrix out(K, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, emb[m.at(r, c)]);
  return out;
}

}  // namespace qci
