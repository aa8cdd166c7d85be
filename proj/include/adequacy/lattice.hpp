#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adequacy/error.hpp"

namespace adq {

using IntVec = std::vector<std::int64_t>;

/// Small dense integer matrix. Arithmetic is overflow-checked and throws
/// InternalMismatch rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const = default;

  std::string format() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> e_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);
std::size_t rank_over_q(const IntMatrix& m);

/// left * a * right = diag with left, right unimodular and
/// diag(0,0) | diag(1,1) | ... ; the first `rank` invariants are positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix diag;
  IntMatrix right;
  IntVec invariants;  // diag(i,i) for i < min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Hermite basis of the row lattice spanned by `rows` together with
/// modulus * Z^cols, with every entry kept in [0, modulus). Valid because
/// the lattice contains modulus * Z^cols.
class ModularHermite {
 public:
  ModularHermite(std::size_t cols, std::int64_t modulus);
  void add(IntVec v);
  /// Square upper-triangular basis.
  IntMatrix basis() const;

 private:
  std::size_t cols_;
  std::int64_t mod_;
  std::vector<IntVec> rows_;  // rows_[c] has pivot in column c, or is empty
};

}  // namespace adq
