#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adequacy/group.hpp"
#include "adequacy/subspace.hpp"

namespace adq {

/// A representation of a MatGroup given by one action matrix per generator.
/// Vectors are columns: g . v = action(g) * v.
class GModule {
 public:
  GModule(GroupPtr group, std::size_t dim, std::vector<Matrix> action, std::string label = {});

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return group_->field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t gen) const { return action_[gen]; }
  const std::string& label() const { return label_; }

  /// Action matrix of every closure element, built along the closure's
  /// spanning tree.
  std::vector<Matrix> element_actions() const;
  /// Checks rho(x) * rho(s) = rho(x s) on every edge of the Cayley graph,
  /// which forces rho to be a homomorphism on the whole group.
  bool verify_homomorphism() const;

  /// Action on an invariant subspace, in the coordinates of its RREF basis.
  GModule restrict_to(const Subspace& sub) const;
  /// Action on V / sub, in the coordinates of the non-pivot columns of sub.
  GModule quotient_by(const Subspace& sub) const;

 private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::string label_;
};

struct SubmoduleWitness {
  Subspace subspace;
  bool verified_invariant = false;
};

bool is_invariant(const GModule& m, const Subspace& s);
SubmoduleWitness make_witness(const GModule& m, Subspace s);

GModule natural_module(GroupPtr g);
/// End(V) with g . X = g X g^-1, flattened row-major: X[i][j] sits at
/// coordinate i*n + j.
GModule ad_module(GroupPtr g);

struct Ad0Module {
  GModule module;
  /// The trace-zero subspace of ad V (coordinates of module vectors are
  /// coordinates in this subspace's RREF basis).
  Subspace inclusion;
  /// Image in ad V (flattened) of a vector in module coordinates.
  Vec to_ad(std::span<const Elem> v) const;
};
Ad0Module ad0_module(GroupPtr g);

/// Image of G x G' in GL(V (x) V') generated by {g (x) I} and {I (x) g'}.
GroupPtr tensor_image(const MatGroup& g, const MatGroup& h, std::size_t cap = kDefaultOrderCap);

/// Smallest invariant subspace containing v.
SubmoduleWitness spin(const GModule& m, std::span<const Elem> v);

struct MeataxeOptions {
  std::uint64_t seed = 0;
  unsigned attempts = 64;
};

struct IrreducibilityVerdict {
  bool irreducible = false;
  /// Group-algebra element whose factor-kernel certified irreducibility.
  std::optional<Matrix> certificate;
  /// Proper nonzero invariant subspace when reducible.
  std::optional<SubmoduleWitness> witness;
};

/// Norton's irreducibility test with seeded random group-algebra elements.
/// Throws SeedExhausted if no attempt is conclusive.
IrreducibilityVerdict is_irreducible(const GModule& m, const MeataxeOptions& opts = {});

/// dim_F Hom_G(a, b), each hom an (b.dim x a.dim) matrix intertwining the
/// actions. Both modules must belong to the same group.
std::vector<Matrix> hom_space(const GModule& a, const GModule& b);

/// Irreducible over F and End_G(V) = F.
bool is_absolutely_irreducible(const GModule& m, const MeataxeOptions& opts = {});

/// One irreducible submodule (in m's coordinates).
Subspace minimal_submodule(const GModule& m, const MeataxeOptions& opts = {});

/// Composition factors as standalone modules.
std::vector<GModule> composition_factors(const GModule& m, const MeataxeOptions& opts = {});

struct SocleConstituent {
  std::size_t dim = 0;           // dimension of the irreducible
  std::size_t multiplicity = 0;  // copies in the socle
  Subspace isotypic;             // sum of all copies inside m
};

struct IrreducibleSubmodules {
  /// Filled when every socle constituent has multiplicity one; then this is
  /// the complete list of irreducible submodules.
  std::vector<SubmoduleWitness> submodules;
  /// Filled otherwise: the socle, which has infinitely many irreducible
  /// submodules over the algebraic closure.
  std::optional<std::vector<SocleConstituent>> obstruction;

  bool multiplicity_free() const { return !obstruction.has_value(); }
};

IrreducibleSubmodules irreducible_submodules(const GModule& m, const MeataxeOptions& opts = {});

struct IrreducibleDecomposition {
  std::size_t max_dim = 0;
  std::vector<SubmoduleWitness> summands;  // direct sum equal to the module
};

/// Splits m into irreducible direct summands by repeatedly taking a minimal
/// submodule and an equivariant projection onto it. Throws NotSemisimple if
/// some minimal submodule has no invariant complement.
IrreducibleDecomposition decompose_semisimple(const GModule& m, const MeataxeOptions& opts = {});

/// d = the largest dimension of an irreducible l-power-core submodule of the
/// natural module of g, together with the decomposition.
IrreducibleDecomposition max_irreducible_dim(const MatGroup& g, std::uint64_t l,
                                             const MeataxeOptions& opts = {});

}  // namespace adq
