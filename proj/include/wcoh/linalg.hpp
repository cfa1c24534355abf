// Exact linear algebra over Q. Forward elimination is fraction-free
// (Bareiss) on denominator-cleared integer rows; back-substitution is
// rational. Matrices here are small (weight-blocked), entries can grow.
#pragma once

#include <optional>
#include <vector>

#include "wcoh/scalar.hpp"

namespace wcoh {

using QVec = std::vector<Scalar>;
using QMat = std::vector<QVec>;  // row-major

namespace detail {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // echelon rows, integer
  std::vector<int> pivot_col;                // per stored row
  int ncols = 0;
};

// Bareiss elimination on denominator-cleared rows. Rows that become zero
// are dropped; pivot columns are recorded in order.
inline Echelon echelonize(const QMat& a, int ncols) {
  Echelon e;
  e.ncols = ncols;
  std::vector<std::vector<mpz_class>>& rows = e.rows;
  for (const auto& r : a) {
    mpz_class l = 1;
    for (int j = 0; j < ncols; ++j)
      l = lcm(l, r[static_cast<std::size_t>(j)].den());
    std::vector<mpz_class> ir(static_cast<std::size_t>(ncols));
    bool nz = false;
    for (int j = 0; j < ncols; ++j) {
      const Scalar& s = r[static_cast<std::size_t>(j)];
      ir[static_cast<std::size_t>(j)] = s.num() * (l / s.den());
      if (ir[static_cast<std::size_t>(j)] != 0) nz = true;
    }
    if (nz) rows.push_back(std::move(ir));
  }
  mpz_class prev = 1;
  std::size_t top = 0;
  for (int col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0)
      ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    for (std::size_t i = top + 1; i < rows.size(); ++i) {
      for (int j = 0; j < ncols; ++j) {
        if (j == col) continue;
        mpz_class t = rows[i][static_cast<std::size_t>(j)] *
                          rows[top][static_cast<std::size_t>(col)] -
                      rows[i][static_cast<std::size_t>(col)] *
                          rows[top][static_cast<std::size_t>(j)];
        mpz_divexact(rows[i][static_cast<std::size_t>(j)].get_mpz_t(),
                     t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][static_cast<std::size_t>(col)] = 0;
    }
    prev = rows[top][static_cast<std::size_t>(col)];
    e.pivot_col.push_back(col);
    ++top;
  }
  rows.resize(top);  // everything below the last pivot is zero
  return e;
}

}  // namespace detail

inline int rank(const QMat& a, int ncols) {
  if (a.empty()) return 0;
  return static_cast<int>(detail::echelonize(a, ncols).pivot_col.size());
}

// Basis of { x : a . x = 0 for every row a }.
inline std::vector<QVec> kernel_basis(const QMat& a, int ncols) {
  auto e = detail::echelonize(a, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int c : e.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    QVec x(static_cast<std::size_t>(ncols), Scalar::zero());
    x[static_cast<std::size_t>(free)] = Scalar::one();
    for (int r = static_cast<int>(e.rows.size()) - 1; r >= 0; --r) {
      const auto& row = e.rows[static_cast<std::size_t>(r)];
      int pc = e.pivot_col[static_cast<std::size_t>(r)];
      Scalar acc;
      for (int j = pc + 1; j < ncols; ++j)
        if (row[static_cast<std::size_t>(j)] != 0)
          acc += Scalar(mpz_class(row[static_cast<std::size_t>(j)])) *
                 x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(pc)] =
          -acc / Scalar(mpz_class(row[static_cast<std::size_t>(pc)]));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// Particular solution of A x = b (rows of a are the equations); nullopt
// when inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b, int ncols) {
  QMat aug(a);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = detail::echelonize(aug, ncols + 1);
  QVec x(static_cast<std::size_t>(ncols), Scalar::zero());
  for (int r = static_cast<int>(e.rows.size()) - 1; r >= 0; --r) {
    const auto& row = e.rows[static_cast<std::size_t>(r)];
    int pc = e.pivot_col[static_cast<std::size_t>(r)];
    if (pc == ncols) return std::nullopt;  // pivot in the rhs column
    Scalar acc = Scalar(mpz_class(row[static_cast<std::size_t>(ncols)]));
    for (int j = pc + 1; j < ncols; ++j)
      if (row[static_cast<std::size_t>(j)] != 0)
        acc -= Scalar(mpz_class(row[static_cast<std::size_t>(j)])) *
               x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(pc)] =
        acc / Scalar(mpz_class(row[static_cast<std::size_t>(pc)]));
  }
  return x;
}

// Incremental span bookkeeping in Q: feed vectors, learn which extend the
// span. Used to pick cohomology representatives and quotient bases.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ncols) : ncols_(ncols) {}

  // True when v was independent of the current span.
  bool add(QVec v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    Scalar inv = v[static_cast<std::size_t>(p)].inverse();
    for (auto& c : v) c *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(QVec v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(QVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = v[static_cast<std::size_t>(pivots_[r])];
      if (c.is_zero()) continue;
      for (int j = 0; j < ncols_; ++j)
        v[static_cast<std::size_t>(j)] -=
            c * rows_[r][static_cast<std::size_t>(j)];
    }
  }
  int first_nonzero(const QVec& v) const {
    for (int j = 0; j < ncols_; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero()) return j;
    return -1;
  }

  int ncols_;
  QMat rows_;
  std::vector<int> pivots_;
};

}  // namespace wcoh
