#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "adequacy/harness.hpp"
#include "fixtures.hpp"

using namespace adq;
using fixture::ints;

#ifndef ADEQUACY_SOURCE_DIR
#define ADEQUACY_SOURCE_DIR "."
#endif

namespace {

SpecError parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e;
  }
  FAIL("expected a SpecError");
  return SpecError(0, 0, "");
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(std::string(ADEQUACY_SOURCE_DIR) + "/corpus")) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
  return k;
}

}  // namespace

TEST_CASE("parse a minimal spec") {
  const auto s = parse_spec(R"({"field": {"prime": 7}, "dimension": 2, "generators": [[[1, 1], [0, 1]]]})");
  CHECK(s.field == make_field(7, 1));
  CHECK(s.dimension == 2);
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0] == ints(s.field, {{1, 1}, {0, 1}}));
  CHECK(s.label.empty());
  CHECK(!s.expected);
  CHECK(!s.explicit_modulus);
  CHECK(build_group(s)->order() == 7);
}

TEST_CASE("parse extension-field entries") {
  const auto s = parse_spec(R"({"field": {"prime": 3, "degree": 2}, "dimension": 1,
                                "generators": [[[[1, 1]]]], "label": "c8"})");
  CHECK(s.field.order() == 9);
  CHECK(s.generators[0](0, 0) == s.field.from_coeffs(std::vector<std::uint64_t>{1, 1}));
  CHECK(build_group(s)->order() == 8);
  // Negative integers and short coefficient lists are accepted.
  const auto t = parse_spec(R"({"field": {"prime": 3, "degree": 2}, "dimension": 1, "generators": [[[-1]]]})");
  CHECK(t.generators[0](0, 0) == t.field.from_int(2));
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error("{\n  \"field\": {\"prime\": 4},\n  \"dimension\": 2,\n  \"generators\": []\n}\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 22);
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(std::string(e.what()).find("line 2, column 22") != std::string::npos);

  e = parse_error("{\n  \"field\": {\"prime\": 5},\n  \"dimension\": 2,\n  \"generators\": [[[1, 1], [0, 1]]\n}\n");
  CHECK(e.line() == 5);
  CHECK(e.column() == 1);

  e = parse_error("{\n  \"field\": {\"prime\": 5},\n  \"dimension\": 2,\n  \"colour\": 1,\n  \"generators\": []\n}");
  CHECK(e.line() == 4);
  CHECK(std::string(e.what()).find("unknown key") != std::string::npos);

  e = parse_error(
      "{\n  \"field\": {\"prime\": 5},\n  \"dimension\": 2,\n  \"generators\": [\n    [[1, 0], [0, 1]],\n"
      "    [[1, 2], [2, 4]]\n  ]\n}");
  CHECK(e.line() == 6);
  CHECK(e.column() == 5);
  CHECK(std::string(e.what()).find("not invertible") != std::string::npos);

  e = parse_error("{\"field\": {\"prime\": 5}, \"dimension\": 2, \"generators\": [[[1, 0], [0, 1, 2]]]}");
  CHECK(e.line() == 1);
  CHECK(e.column() == 65);

  e = parse_error("{\"field\": {\"prime\": 5}, \"generators\": []}");
  CHECK(std::string(e.what()).find("missing key \"dimension\"") != std::string::npos);

  e = parse_error("{\"field\": {\"prime\": 3, \"degree\": 2, \"modulus\": [2, 0, 1]}, \"dimension\": 1, \"generators\": []}");
  CHECK(e.code() == ErrorCode::ParseError);

  e = parse_error("[1, 2]");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);

  e = parse_error("{\"field\": {\"prime\": 5}, \"dimension\": 1, \"generators\": [], \"expected\": {\"adequate\": 1}}");
  CHECK(std::string(e.what()).find("boolean") != std::string::npos);
}

TEST_CASE("serialize then parse reproduces every spec") {
  for (const auto& e : zoo_all()) {
    CAPTURE(e.spec.label);
    CHECK(parse_spec(serialize_spec(e.spec)) == e.spec);
  }
  for (const auto& path : corpus_files()) {
    const auto s = load_spec(path.string());
    CHECK(parse_spec(serialize_spec(s)) == s);
    CHECK(s.explicit_modulus == (path.filename() == "c8-line-gf9.json"));
  }
  GroupSpec s = zoo_sl2(7);
  s.expected = ExpectedVerdict{};
  s.expected->adequate = true;
  s.expected->dim_z = 4;
  CHECK(parse_spec(serialize_spec(s)) == s);
}

TEST_CASE("zoo_sl2") {
  CHECK(build_group(zoo_sl2(7))->order() == 336);
  CHECK(build_group(zoo_sl2(5))->order() == 120);
  CHECK(zoo_sl2(7).label == "sl2-l7");
  try {
    zoo_sl2(4);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  CHECK_THROWS_AS(zoo_sl2(3), Error);
}

TEST_CASE("zoo_sl2_sym") {
  const Field f7 = make_field(7, 1);
  CHECK(zoo_sl2_sym(7, 1).generators == zoo_sl2(7).generators);
  const auto s2 = zoo_sl2_sym(7, 2);
  CHECK(s2.dimension == 3);
  CHECK(s2.generators[0] == ints(f7, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
  CHECK(s2.generators[1] == ints(f7, {{1, 0, 0}, {2, 1, 0}, {1, 1, 1}}));
  CHECK(zoo_sl2_sym(7, 6).dimension == 7);
  CHECK_THROWS_AS(zoo_sl2_sym(7, 7), Error);
  CHECK_THROWS_AS(zoo_sl2_sym(7, 0), Error);
  // Even powers factor through PSL2.
  CHECK(build_group(s2)->order() == 168);
  CHECK(build_group(zoo_sl2_sym(7, 3))->order() == 336);
  // sym_power is multiplicative.
  std::mt19937_64 rng(6);
  const auto g = build_group(zoo_sl2(7));
  for (int t = 0; t < 50; ++t) {
    const auto& a = g->elements()[rng() % g->order()];
    const auto& b = g->elements()[rng() % g->order()];
    CHECK(sym_power(a * b, 4) == sym_power(a, 4) * sym_power(b, 4));
  }
}

TEST_CASE("zoo_prime_to_l") {
  std::size_t total = 0;
  for (std::uint64_t l : {5, 7, 11}) {
    std::vector<std::string> dropped;
    const auto entries = zoo_prime_to_l(l, &dropped);
    for (const auto& e : entries) {
      CAPTURE(e.spec.label);
      const auto g = build_group(e.spec);
      CHECK(std::gcd(g->order(), l) == 1);
      CHECK(is_absolutely_irreducible(natural_module(g)));
      CHECK(e.spec.label.ends_with("-l" + std::to_string(l)));
    }
    total += entries.size();
  }
  CHECK(total >= 15);
  const auto seven = zoo_prime_to_l(7);
  const auto d8 = std::find_if(seven.begin(), seven.end(), [](const CorpusEntry& e) { return e.spec.label == "d8-l7"; });
  REQUIRE(d8 != seven.end());
  const Field f7 = make_field(7, 1);
  CHECK(d8->spec.generators[0] == ints(f7, {{0, 1}, {-1, 0}}));
  CHECK(build_group(d8->spec)->order() == 8);
}

TEST_CASE("zoo_all labels are unique and the corpus is large enough") {
  std::set<std::string> labels;
  std::size_t irreducible = 0;
  for (const auto& e : zoo_all()) {
    CHECK(labels.insert(e.spec.label).second);
    irreducible += is_irreducible(natural_module(build_group(e.spec))).irreducible;
  }
  CHECK(irreducible >= 25);
}

TEST_CASE("regression corpus reproduces its expected verdicts") {
  const auto files = corpus_files();
  CHECK(files.size() >= 10);
  for (const auto& path : files) {
    CAPTURE(path.filename().string());
    const auto spec = load_spec(path.string());
    REQUIRE(spec.expected);
    const auto r = adequacy_report(build_group(spec), spec.label);
    CHECK(expected_mismatches(r, *spec.expected).empty());
    CHECK(r.theorem_consistent);
  }
}

TEST_CASE("expected_mismatches names each differing field") {
  const auto r = adequacy_report(build_group(zoo_sl2(7)), "sl2-l7");
  auto e = expected_from_report(r);
  CHECK(expected_mismatches(r, e).empty());
  e.order = 335;
  e.adequate = false;
  CHECK(expected_mismatches(r, e) == std::vector<std::string>{"order", "adequate"});
  CHECK(expected_mismatches(r, ExpectedVerdict{}).empty());
}

TEST_CASE("tensor images of seeded prime-to-l pairs satisfy Condition (C)") {
  std::vector<CorpusEntry> pool;
  for (std::uint64_t l : {5, 7, 11}) {
    for (auto& e : zoo_prime_to_l(l)) pool.push_back(std::move(e));
  }
  std::mt19937_64 rng(10);
  int done = 0;
  while (done < 10) {
    const auto& a = pool[rng() % pool.size()].spec;
    const auto& b = pool[rng() % pool.size()].spec;
    if (a.field != b.field || a.dimension * b.dimension > 8) continue;
    CAPTURE(a.label);
    CAPTURE(b.label);
    CHECK(tensor_condition_c(*build_group(a), *build_group(b)));
    ++done;
  }
}

TEST_CASE("report JSON has a stable key order") {
  const auto r = adequacy_report(build_group(zoo_sl2(7)), "sl2-l7");
  const auto j = report_to_json(r);
  CHECK(keys(j) == std::vector<std::string>{"label", "l", "n", "field", "order", "order-core", "d",
                                            "dim-V-prime-to-l", "irreducible", "h0-ad0", "h1-ad0",
                                            "h1-trivial", "condition-c", "hypothesis-met", "adequate",
                                            "theorem-consistent"});
  CHECK(keys(j["condition-c"]) == std::vector<std::string>{"holds", "by-span", "by-annihilator", "by-direct"});
  CHECK(j["condition-c"]["by-span"]["dim-Z"] == 4);
  CHECK(j["adequate"] == true);
  CHECK(j.dump() == report_to_json(r).dump());

  const auto jw = report_to_json(r, true);
  CHECK(jw["condition-c"].contains("witnesses"));
  CHECK(jw["condition-c"]["witnesses"].size() == 1);

  const auto s3 = adequacy_report(build_group(zoo_negative()[1].spec), "s3-perm-l5");
  const auto js = report_to_json(s3);
  REQUIRE(js.contains("reducibility-witness"));
  CHECK(js["reducibility-witness"]["basis"] == nlohmann::json::parse("[[1, 1, 1]]"));
  CHECK(report_table(s3).find("invariant subspace") != std::string::npos);

  const auto pm = adequacy_report(build_group(zoo_negative()[0].spec), "pm");
  CHECK(report_to_json(pm)["d"].is_null());
  CHECK(report_to_json(pm, true)["condition-c"].contains("failing-submodule"));
}

TEST_CASE("report table mentions every verdict") {
  const auto r = adequacy_report(build_group(zoo_sl2(7)), "sl2-l7");
  const auto t = report_table(r, true);
  for (const char* s : {"sl2-l7", "h1(ad0)", "condition (C) by span", "adequate (conjunction)", "witness:"}) {
    CHECK(t.find(s) != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::ParseError) == 1);
  CHECK(exit_code_for(ErrorCode::NotPrime) == 1);
  CHECK(exit_code_for(ErrorCode::OrderCapExceeded) == 2);
  CHECK(exit_code_for(ErrorCode::CapExceeded) == 2);
  CHECK(exit_code_for(ErrorCode::BoxOverflow) == 2);
  CHECK(exit_code_for(ErrorCode::CriterionMismatch) == 3);
  CHECK(exit_code_for(ErrorCode::InternalMismatch) == 3);
}
