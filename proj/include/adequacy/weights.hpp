#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adequacy/lattice.hpp"

namespace adq {

/// A torus over F_l described by its Frobenius action on cocharacters and a
/// finite set of cocharacters. Characters and cocharacters are paired by the
/// standard dot product in dual coordinates.
struct TorusData {
  std::size_t rank = 0;
  IntMatrix frobenius;               // action on X_*, rank x rank
  std::vector<IntVec> cocharacters;  // the finite set Delta_*

  /// Throws InvalidArgument unless Delta_* spans Q^rank and is stable under
  /// the Frobenius matrix.
  void validate() const;
};

/// The sublattice (l - Fr^T) X^* of X^* = Z^rank, with its Smith form.
/// Characters trivial on T(F_l) are exactly its elements.
class LatticeImage {
 public:
  LatticeImage(const IntMatrix& frobenius, std::int64_t l);

  const IntMatrix& map() const { return map_; }
  const SmithForm& smith() const { return snf_; }

  bool contains(const IntVec& mu) const;
  /// A representative key of mu's class in X^* / image; two characters
  /// agree on T(F_l) iff their keys are equal.
  IntVec class_key(const IntVec& mu) const;

 private:
  IntMatrix map_;
  SmithForm snf_;
};

bool in_image(const IntVec& mu, const LatticeImage& image);

inline constexpr std::size_t kDefaultBoxCap = 5'000'000;

struct LatticeVerdict {
  bool holds = true;
  /// A nonzero mu in the bounded region that lies in the image (or, for
  /// separation, the difference of two colliding characters).
  std::optional<IntVec> counterexample;
  std::optional<IntVec> collision_partner;
  IntVec box;                   // half-widths of the enumeration box
  std::size_t region_points = 0;  // integer points satisfying the bounds
};

/// Enumerates every mu with |<mu, delta>| < l - 1 for all delta and checks
/// that none except 0 is trivial on T(F_l).
LatticeVerdict check_bounded_characters(const TorusData& torus, std::int64_t l,
                                        std::size_t box_cap = kDefaultBoxCap);

/// Enumerates every mu with |<mu, delta>| < (l - 1)/2 and checks that no two
/// distinct ones have the same restriction to T(F_l).
LatticeVerdict check_half_bound_separation(const TorusData& torus, std::int64_t l,
                                           std::size_t box_cap = kDefaultBoxCap);

/// Half-widths of a box containing { mu : |<mu, delta>| <= bound }.
IntVec bounding_box(const TorusData& torus, std::int64_t bound);

struct TorusInstance {
  std::string label;
  TorusData torus;
  std::int64_t l = 0;
};

/// Ranks 1..3, l in {5, 7, 11}, Frobenius in {I, -I, coordinate
/// permutations}, cocharacters the signed standard vectors and, for rank >= 2,
/// the vectors +-e_i +- e_j.
std::vector<TorusInstance> shipped_tori();

}  // namespace adq
