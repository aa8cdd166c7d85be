#pragma once

#include <cstdint>
#include <vector>

#include "adequacy/gmodule.hpp"
#include "adequacy/lattice.hpp"

namespace adq {

inline constexpr std::size_t kDefaultUnknownCap = 20000;
/// Groups up to this order get every basis cocycle checked on all pairs.
inline constexpr std::size_t kPairCheckOrder = 500;

/// Fixed points: the intersection of ker(action(s) - I) over generators.
Subspace h0(const GModule& m);

/// Z^1 and B^1 of a module. A cocycle is determined by its values on the
/// generators, so both spaces live in F^(#gens * dim): the block for
/// generator s holds f(s).
struct CocycleSpace {
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  std::size_t h1_dim = 0;
  Subspace z1;                // generator values of all cocycles
  Subspace b1;                // generator values of coboundaries
  std::vector<Vec> representatives;  // h1_dim vectors of z1 spanning a complement of b1
};

/// Solves the cocycle conditions f(x s) = f(x) + x . f(s) over every edge of
/// the Cayley graph. Throws CapExceeded when |G| * dim exceeds cap_unknowns.
CocycleSpace h1(const GModule& m, std::size_t cap_unknowns = kDefaultUnknownCap);

/// Values f(x) for every element x in closure order (row x of the result),
/// from generator values.
Matrix cocycle_table(const GModule& m, std::span<const Elem> generator_values);

/// f(g h) = f(g) + g . f(h) for all pairs of elements.
bool is_cocycle(const GModule& m, const Matrix& table);

/// Module on which every generator acts as the identity.
GModule trivial_module(GroupPtr g, std::size_t dim = 1);

/// Invariants d_1 | d_2 | ... (all > 1) of the abelianization of g,
/// from the Schreier relations of its Cayley graph.
IntVec abelian_invariants(const MatGroup& g);

struct TrivialH1 {
  std::size_t by_cocycles = 0;
  std::size_t by_abelianization = 0;
};

/// dim H^1(G, F_l) two ways; throws InternalMismatch if they differ.
TrivialH1 h1_trivial_coeffs(GroupPtr g, std::uint64_t l,
                            std::size_t cap_unknowns = kDefaultUnknownCap);

}  // namespace adq
