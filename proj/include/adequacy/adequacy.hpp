#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adequacy/cohomology.hpp"
#include "adequacy/gmodule.hpp"

namespace adq {

/// Z = span of the semisimple elements inside ad V (row-major flattening).
struct SpanVerdict {
  bool holds = false;
  std::size_t dim = 0;
  Subspace z;
};

SpanVerdict condition_c_span(const MatGroup& g, std::uint64_t l);

/// U = { w in ad V : tr(g w) = 0 for every semisimple g }.
struct AnnihilatorVerdict {
  bool holds = false;
  std::size_t dim = 0;
  Subspace u;
};

/// Also checks U inside ad0 V, U = Z^perp under the trace pairing and
/// dim Z + dim U = n^2; throws InternalMismatch if any fails.
AnnihilatorVerdict condition_c_annihilator(const MatGroup& g, std::uint64_t l);

/// tr(e_{g,alpha} w) != 0 for the element g = elements()[element], alpha in
/// the splitting field of g's characteristic polynomial, and w the
/// basis_index-th basis vector of the submodule.
struct DirectWitness {
  std::size_t submodule = 0;
  std::size_t element = 0;
  Field field;
  Elem alpha = 0;
  std::size_t basis_index = 0;
  Elem value = 0;
};

struct DirectVerdict {
  bool available = false;
  bool holds = false;
  /// Irreducible submodules of ad0 V as subspaces of ad V.
  std::vector<Subspace> submodules;
  std::vector<DirectWitness> witnesses;  // one per submodule when it holds
  std::optional<std::size_t> failing;    // submodule with no witness
  std::optional<std::vector<SocleConstituent>> obstruction;
};

/// Searches semisimple elements in closure order and eigenvalues in code
/// order for a witness on each irreducible submodule of ad0 V. Unavailable
/// (available = false) when the socle of ad0 V has a repeated constituent.
DirectVerdict condition_c_direct(GroupPtr g, std::uint64_t l, const MeataxeOptions& opts = {});

struct ConditionCVerdict {
  SpanVerdict span;
  AnnihilatorVerdict annihilator;
  DirectVerdict direct;
  bool holds() const { return span.holds; }
  /// False when two available verdicts differ.
  bool agree() const;
};

ConditionCVerdict condition_c(GroupPtr g, std::uint64_t l, const MeataxeOptions& opts = {});

struct ReportOptions {
  MeataxeOptions meataxe;
  std::size_t cap_order = kDefaultOrderCap;
  std::size_t cap_unknowns = kDefaultUnknownCap;
};

struct AdequacyReport {
  std::string label;
  std::uint64_t l = 0;
  std::size_t n = 0;
  Field field;
  std::size_t order = 0;
  std::size_t core_order = 0;
  /// Largest dimension of an absolutely irreducible constituent of V under
  /// the l-power core; empty when V is not semisimple for the core.
  std::optional<std::size_t> d;
  bool dim_prime_to_l = false;
  bool irreducible = false;  // absolutely irreducible
  /// A proper invariant subspace of V over the base field, when one exists:
  /// the smallest irreducible submodule.
  std::optional<Subspace> reducibility_witness;
  std::size_t h0_ad0 = 0;
  std::size_t h1_ad0 = 0;
  std::size_t h1_trivial = 0;
  ConditionCVerdict condition_c;
  bool hypothesis_met = false;  // irreducible and l >= 2(d + 1)
  bool adequate = false;
  bool theorem_consistent = false;
};

/// Runs every check. Throws CriterionMismatch if the group is absolutely
/// irreducible and two available Condition (C) verdicts disagree.
AdequacyReport adequacy_report(GroupPtr g, std::string label, const ReportOptions& opts = {});

/// Condition (C) by span for the image of G x G' in GL(V (x) V'). Both
/// inputs must satisfy it themselves (InvalidArgument otherwise).
bool tensor_condition_c(const MatGroup& g, const MatGroup& h, std::size_t cap = kDefaultOrderCap);

}  // namespace adq
