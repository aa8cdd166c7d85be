#pragma once

#include <initializer_list>
#include <vector>

#include "adequacy/harness.hpp"
#include "adequacy/matrix.hpp"

namespace fixture {

inline adq::Matrix ints(const adq::Field& f,
                        std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<adq::Vec> r;
  for (const auto& row : rows) {
    adq::Vec v;
    for (auto x : row) v.push_back(f.from_int(x));
    r.push_back(v);
  }
  return adq::Matrix::from_rows(f, r, r.empty() ? 0 : r[0].size());
}

inline adq::GroupPtr group(const adq::Field& f, std::size_t n, std::vector<adq::Matrix> gens) {
  return adq::closure(f, n, std::move(gens));
}

inline adq::GroupPtr sl2(std::uint64_t l) { return adq::build_group(adq::zoo_sl2(l)); }

/// {+-I} x <transvection> in GL_2(F_7).
inline adq::GroupPtr pm_transvection() {
  const auto f = adq::make_field(7, 1);
  return group(f, 2, {ints(f, {{-1, 0}, {0, -1}}), ints(f, {{1, 1}, {0, 1}})});
}

/// Every corpus group, built.
inline std::vector<std::pair<adq::CorpusEntry, adq::GroupPtr>> corpus() {
  std::vector<std::pair<adq::CorpusEntry, adq::GroupPtr>> out;
  for (auto& e : adq::zoo_all()) {
    auto g = adq::build_group(e.spec);
    out.emplace_back(std::move(e), std::move(g));
  }
  return out;
}

}  // namespace fixture
