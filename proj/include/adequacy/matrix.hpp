#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adequacy/field.hpp"
#include "adequacy/poly.hpp"

namespace adq {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a single Field. Vectors act as columns:
/// the image of v under A is A * v.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix column(const Field& f, std::span<const Elem> v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  /// Row-major entries; for an n x n matrix this is the flattening used
  /// for ad V.
  const std::vector<Elem>& entries() const { return e_; }
  std::span<const Elem> row(std::size_t i) const {
    return {e_.data() + i * cols_, cols_};
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(std::span<const Elem> v) const;
  Matrix scaled(Elem s) const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;

  bool is_zero() const;
  bool is_identity() const;
  Elem trace() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string format() const;

 private:
  void check_same(const Matrix& o) const;

  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> e_;
};

/// (A (x) B)[i*q + j, i'*q + j'] = A[i, i'] * B[j, j'] where B is p x q.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Entry-wise image under a field embedding.
Matrix lift(const Matrix& m, const Embedding& emb);
/// Row-major n x n matrix from a flattened vector of length n^2.
Matrix unflatten(const Field& f, std::size_t n, std::span<const Elem> v);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of { x : m * x = 0 }, each normalized with a 1 in a
/// free column.
Matrix kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct Solution {
  Vec x;
  Matrix kernel;
};

/// One solution of a * x = b plus a basis of ker a, or nullopt when the
/// system is inconsistent. Throws DimensionMismatch on shape errors.
std::optional<Solution> solve(const Matrix& a, std::span<const Elem> b);

/// det(xI - m), via reduction to upper Hessenberg form.
Poly char_poly(const Matrix& m);
/// Least-degree monic annihilating polynomial; Krylov sequences from seeded
/// random vectors, confirmed by substitution.
Poly min_poly(const Matrix& m, std::uint64_t seed = 0);
Matrix eval_poly(const Poly& p, const Matrix& m);

/// Projection onto the generalized alpha-eigenspace of m, built as h(m)
/// with h = 1 mod (x - alpha)^mult and h = 0 mod the cofactor. Requires the
/// characteristic polynomial to split over m's field.
Matrix eigenprojector(const Matrix& m, Elem alpha);
/// Same, with the characteristic polynomial already known to split.
Matrix eigenprojector(const Matrix& m, Elem alpha, const Poly& char_poly);

/// tr(a * b).
Elem trace_pairing(const Matrix& a, const Matrix& b);

}  // namespace adq
