#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adequacy/adequacy.hpp"

namespace adq {

/// A parse or validation error at a position in a spec file (1-based).
class SpecError : public Error {
 public:
  SpecError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Values a regression corpus expects a report to reproduce.
struct ExpectedVerdict {
  std::optional<std::size_t> order;
  std::optional<std::size_t> d;
  std::optional<bool> irreducible;
  std::optional<std::size_t> h0_ad0;
  std::optional<std::size_t> h1_ad0;
  std::optional<std::size_t> h1_trivial;
  std::optional<bool> condition_c;
  std::optional<std::size_t> dim_z;
  std::optional<bool> hypothesis_met;
  std::optional<bool> adequate;

  bool operator==(const ExpectedVerdict&) const = default;
};

struct GroupSpec {
  Field field;
  bool explicit_modulus = false;
  std::size_t dimension = 0;
  std::vector<Matrix> generators;
  std::string label;
  std::optional<ExpectedVerdict> expected;

  bool operator==(const GroupSpec& o) const;
};

nlohmann::ordered_json field_to_json(const Field& f, bool with_modulus = true);
/// Parses a field descriptor object; SpecError on invalid content.
Field field_from_json(const nlohmann::json& j);

GroupSpec parse_spec(std::string_view text);
GroupSpec load_spec(const std::string& path);
nlohmann::ordered_json spec_to_json(const GroupSpec& spec);
std::string serialize_spec(const GroupSpec& spec);

GroupPtr build_group(const GroupSpec& spec, std::size_t cap_order = kDefaultOrderCap);

/// Matrix entry as written in a literal: an integer for prime-field
/// elements, otherwise the coefficient vector.
nlohmann::ordered_json elem_to_json(const Field& f, Elem a);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
nlohmann::ordered_json witness_to_json(const std::string& module, const Subspace& s);

// Corpus constructors.

/// <[[1,1],[0,1]], [[1,0],[1,1]]> over GF(l); InvalidArgument unless l >= 5 prime.
GroupSpec zoo_sl2(std::uint64_t l);
/// SL2(F_l) acting on binary forms of degree m, 1 <= m <= l - 1, basis
/// x^m, x^(m-1) y, ..., y^m, via (x, y) -> (x, y) g.
GroupSpec zoo_sl2_sym(std::uint64_t l, unsigned m);
Matrix sym_power(const Matrix& g, unsigned m);

struct CorpusEntry {
  GroupSpec spec;
  std::string constructor;
  std::string note;
};

/// Groups of order prime to l with absolutely irreducible natural module.
/// Candidates failing either test are left out and listed in `dropped`.
std::vector<CorpusEntry> zoo_prime_to_l(std::uint64_t l, std::vector<std::string>* dropped = nullptr);
/// The reducible and non-(C) controls.
std::vector<CorpusEntry> zoo_negative();
/// Every family for l in {5, 7, 11, 13}.
std::vector<CorpusEntry> zoo_all();

nlohmann::ordered_json report_to_json(const AdequacyReport& r, bool witnesses = false);
std::string report_table(const AdequacyReport& r, bool witnesses = false);

/// Fields of `expected` that the report does not reproduce, by name.
std::vector<std::string> expected_mismatches(const AdequacyReport& r, const ExpectedVerdict& e);
ExpectedVerdict expected_from_report(const AdequacyReport& r);

/// 0 theorem-consistent, 1 parse/validation, 2 caps, 3 internal
/// inconsistency, 4 theorem-inconsistent or expected-verdict mismatch.
int exit_code_for(ErrorCode code);

}  // namespace adq
