#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "adequacy/matrix.hpp"

namespace adq {

inline constexpr std::size_t kDefaultOrderCap = 200000;

struct EntryHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

class MatGroup;
using GroupPtr = std::shared_ptr<const MatGroup>;

/// A finite matrix group together with its full element list. Elements are
/// stored in breadth-first discovery order starting from the identity, with
/// each new element found as (earlier element) * (generator); that spanning
/// tree and the full right-multiplication table are kept for cohomology.
class MatGroup {
 public:
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::uint64_t characteristic() const { return field_.prime(); }

  std::optional<std::size_t> index_of(const Matrix& m) const;
  bool contains(const Matrix& m) const { return index_of(m).has_value(); }

  /// Order of elements()[i].
  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }
  /// Index of elements()[i] * generators()[s].
  std::size_t right_mult(std::size_t i, std::size_t s) const {
    return succ_[i * gens_.size() + s];
  }
  /// For i > 0: elements()[i] = elements()[tree_parent(i)] * generators()[tree_gen(i)].
  std::size_t tree_parent(std::size_t i) const { return parent_[i]; }
  std::size_t tree_gen(std::size_t i) const { return via_[i]; }

  friend GroupPtr closure(const Field& f, std::size_t dim, std::vector<Matrix> gens,
                          std::size_t cap);

 private:
  MatGroup() = default;

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elements_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> succ_;
  std::vector<std::size_t> parent_, via_;
  std::unordered_map<std::vector<Elem>, std::size_t, EntryHash> index_;
};

/// Breadth-first closure of the identity under right multiplication by the
/// generators. Throws NotInvertible for a singular generator and
/// OrderCapExceeded once more than `cap` elements appear.
GroupPtr closure(const Field& f, std::size_t dim, std::vector<Matrix> gens,
                 std::size_t cap = kDefaultOrderCap);

/// Least N >= 1 with g^N = I by direct powering; CapExceeded past `cap`.
std::uint64_t element_order(const Matrix& g, std::uint64_t cap = 10'000'000);

struct JordanPair {
  Matrix semisimple;
  Matrix unipotent;
};

/// Multiplicative Jordan decomposition g = g_s g_u with both parts powers of
/// g: ord(g) = l^a m, g_s = g^x, g_u = g^y where x = 0 mod l^a, x = 1 mod m
/// and y = 1 mod l^a, y = 0 mod m.
JordanPair jordan_parts(const Matrix& g, std::uint64_t l, std::uint64_t order);
JordanPair jordan_parts(const Matrix& g, std::uint64_t l);

bool is_l_power(std::uint64_t n, std::uint64_t l);

/// Indices (in closure order) of the elements of order prime to l.
std::vector<std::size_t> semisimple_indices(const MatGroup& g, std::uint64_t l);
std::vector<Matrix> semisimple_subset(const MatGroup& g, std::uint64_t l);

/// The subgroup generated by the elements of l-power order. Its generator
/// list is a greedy subset of those elements in closure order.
GroupPtr l_power_core(const MatGroup& g, std::uint64_t l, std::size_t cap = kDefaultOrderCap);

/// h N h^-1 = N for every generator h of g.
bool is_normal_in(const MatGroup& sub, const MatGroup& g);

}  // namespace adq
