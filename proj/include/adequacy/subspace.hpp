#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adequacy/matrix.hpp"

namespace adq {

/// A subspace of F^n held as a basis in reduced row echelon form, so two
/// subspaces are equal exactly when their bases are.
class Subspace {
 public:
  Subspace() = default;
  /// Row span of `rows` (any rank).
  explicit Subspace(const Matrix& rows);
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vs);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> vectors() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed to lie in the subspace) in the basis.
  Vec coords(std::span<const Elem> v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// { w : sum_i v_i w_i = 0 for all v } under the standard dot product.
  Subspace orthogonal() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown echelon basis; used for spinning and rank tracking
/// where vectors arrive one at a time.
class EchelonBuilder {
 public:
  EchelonBuilder(Field f, std::size_t ambient);

  /// Adds v if it is independent of the rows so far. Returns true when the
  /// dimension grew.
  bool add(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }
  /// Rows in insertion order (not reduced), each with its pivot column.
  const std::vector<Vec>& rows() const { return original_; }
  Subspace subspace() const;

 private:
  Vec reduce(std::span<const Elem> v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivot_;
  std::vector<Vec> original_;
};

}  // namespace adq
