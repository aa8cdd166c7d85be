#include <doctest.h>

#include <cstdlib>
#include <random>

#include "adequacy/weights.hpp"

using namespace adq;

namespace {

IntMatrix mat(std::initializer_list<IntVec> rows) {
  std::vector<IntVec> r(rows);
  return IntMatrix::from_rows(r, r.empty() ? 0 : r[0].size());
}

IntMatrix l_minus_fr_t(const IntMatrix& fr, std::int64_t l) {
  IntMatrix m(fr.rows(), fr.cols());
  for (std::size_t i = 0; i < fr.rows(); ++i) {
    for (std::size_t j = 0; j < fr.cols(); ++j) m(i, j) = (i == j ? l : 0) - fr(j, i);
  }
  return m;
}

// Searches integer lambda with |lambda_i| <= bound and m * lambda = mu.
bool brute_in_image(const IntMatrix& m, const IntVec& mu, std::int64_t bound) {
  const std::size_t r = mu.size();
  IntVec lam(r, -bound);
  for (;;) {
    if (m * lam == mu) return true;
    std::size_t i = 0;
    while (i < r && lam[i] == bound) lam[i++] = -bound;
    if (i == r) return false;
    ++lam[i];
  }
}

// The unique solution of m lambda = mu is adj(m) mu / det(m), so this bounds
// every coordinate of any integer solution.
std::int64_t cramer_bound(const IntMatrix& m, const IntVec& mu) {
  const std::size_t r = m.rows();
  const std::int64_t det = std::llabs(determinant(m));
  std::int64_t best = 0;
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      // adj(m)(j, i) is the (i, j) cofactor.
      std::int64_t minor_det = 1;
      if (r > 1) {
        IntMatrix minor(r - 1, r - 1);
        for (std::size_t a = 0, ma = 0; a < r; ++a) {
          if (a == i) continue;
          for (std::size_t b = 0, mb = 0; b < r; ++b) {
            if (b != j) minor(ma, mb++) = m(a, b);
          }
          ++ma;
        }
        minor_det = determinant(minor);
      }
      s += std::llabs(minor_det) * std::llabs(mu[i]);
    }
    best = std::max(best, s / det);
  }
  return best;
}

IntMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, std::int64_t lim) {
  std::uniform_int_distribution<std::int64_t> pick(-lim, lim);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
  }
  return m;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("in_image examples") {
  const LatticeImage id5(mat({{1}}), 5);
  CHECK(in_image({0}, id5));
  CHECK(in_image({4}, id5));
  CHECK(!in_image({3}, id5));
  CHECK(in_image({-8}, id5));
  const LatticeImage neg5(mat({{-1}}), 5);
  CHECK(in_image({6}, neg5));
  CHECK(!in_image({4}, neg5));
}

TEST_CASE("bounded-character check examples") {
  TorusData t{1, mat({{1}}), {{1}}};
  auto v = check_bounded_characters(t, 5);
  CHECK(v.holds);
  CHECK(v.region_points == 7);

  t = {1, mat({{-1}}), {{1}, {-1}}};
  v = check_bounded_characters(t, 7);
  CHECK(v.holds);
  CHECK(v.region_points == 11);

  t = {2, mat({{0, 1}, {1, 0}}), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  v = check_bounded_characters(t, 5);
  CHECK(v.holds);
  CHECK(v.region_points == 49);
}

TEST_CASE("half-bound separation examples") {
  TorusData t{1, mat({{1}}), {{1}}};
  auto v = check_half_bound_separation(t, 7);
  CHECK(v.holds);
  CHECK(v.region_points == 5);
  t = {2, mat({{0, 1}, {1, 0}}), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  CHECK(check_half_bound_separation(t, 7).holds);
}

TEST_CASE("invalid torus data is rejected") {
  TorusData t{1, mat({{1}}), {{1}}};
  CHECK(check_half_bound_separation(t, 5).holds);
  TorusData bad{2, mat({{0, 1}, {1, 0}}), {{1, 0}, {-1, 0}}};
  CHECK_THROWS_AS(check_bounded_characters(bad, 5), Error);
  TorusData flat{2, IntMatrix::identity(2), {{1, 1}, {-1, -1}}};
  CHECK_THROWS_AS(check_bounded_characters(flat, 5), Error);
}

TEST_CASE("Smith form is sound on seeded matrices") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto a = random_int(rng, r, c, 6);
    const auto s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diag);
    CHECK(std::llabs(determinant(s.left)) == 1);
    CHECK(std::llabs(determinant(s.right)) == 1);
    CHECK(s.rank == rank_over_q(a));
    for (std::size_t i = 0; i < s.diag.rows(); ++i) {
      for (std::size_t j = 0; j < s.diag.cols(); ++j) {
        if (i != j) CHECK(s.diag(i, j) == 0);
      }
    }
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      CHECK(s.invariants[i] > 0);
      CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    for (std::size_t i = s.rank; i < s.invariants.size(); ++i) CHECK(s.invariants[i] == 0);
  }
}

TEST_CASE("in_image agrees with a brute-force lambda search") {
  std::mt19937_64 rng(101);
  int done = 0, members = 0;
  while (done < 100) {
    const std::size_t r = 1 + rng() % 3;
    const std::int64_t l = std::vector<std::int64_t>{5, 7, 11}[rng() % 3];
    const auto fr = random_int(rng, r, r, 3);
    const auto m = l_minus_fr_t(fr, l);
    if (determinant(m) == 0) continue;
    const LatticeImage img(fr, l);
    CHECK(img.map() == m);
    IntVec mu;
    if (rng() % 2 == 0) {
      IntVec lam(r);
      for (auto& x : lam) x = static_cast<std::int64_t>(rng() % 5) - 2;
      mu = m * lam;
    } else {
      mu.resize(r);
      for (auto& x : mu) x = static_cast<std::int64_t>(rng() % 21) - 10;
    }
    const bool expect = brute_in_image(m, mu, cramer_bound(m, mu));
    CHECK(in_image(mu, img) == expect);
    members += expect;
    ++done;
  }
  CHECK(members >= 40);
}

TEST_CASE("class keys agree exactly when the difference is in the image") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 3;
    const auto fr = random_int(rng, r, r, 2);
    const LatticeImage img(fr, 7);
    IntVec a(r), b(r), diff(r);
    for (std::size_t i = 0; i < r; ++i) {
      a[i] = static_cast<std::int64_t>(rng() % 31) - 15;
      b[i] = static_cast<std::int64_t>(rng() % 31) - 15;
    }
    if (rng() % 3 == 0) {
      IntVec lam(r);
      for (auto& x : lam) x = static_cast<std::int64_t>(rng() % 5) - 2;
      const auto shift = img.map() * lam;
      for (std::size_t i = 0; i < r; ++i) b[i] = a[i] + shift[i];
    }
    for (std::size_t i = 0; i < r; ++i) diff[i] = a[i] - b[i];
    CHECK((img.class_key(a) == img.class_key(b)) == img.contains(diff));
  }
}

TEST_CASE("bounding box contains the whole region") {
  // Brute force over a box three times wider finds no region point outside.
  for (const auto& inst : shipped_tori()) {
    if (inst.l != 5 || inst.torus.rank > 2) continue;
    const auto& t = inst.torus;
    const std::int64_t bound = inst.l - 2;
    const auto box = bounding_box(t, bound);
    const std::int64_t wide = 3 * (*std::max_element(box.begin(), box.end()) + 1);
    IntVec mu(t.rank, -wide);
    std::size_t inside = 0;
    for (;;) {
      bool in_region = true;
      for (const auto& d : t.cocharacters) in_region = in_region && std::llabs(dot(mu, d)) <= bound;
      if (in_region) {
        ++inside;
        for (std::size_t i = 0; i < t.rank; ++i) CHECK(std::llabs(mu[i]) <= box[i]);
      }
      std::size_t i = 0;
      while (i < mu.size() && mu[i] == wide) mu[i++] = -wide;
      if (i == mu.size()) break;
      ++mu[i];
    }
    CHECK(check_bounded_characters(t, inst.l).region_points == inside);
  }
}

TEST_CASE("bounded characters: every shipped torus instance holds") {
  const auto tori = shipped_tori();
  CHECK(tori.size() >= 30);
  for (const auto& inst : tori) {
    CAPTURE(inst.label);
    const auto v = check_bounded_characters(inst.torus, inst.l);
    CHECK(v.holds);
    CHECK(!v.counterexample);
    CHECK(v.region_points >= 1);
    const auto h = check_half_bound_separation(inst.torus, inst.l);
    CHECK(h.holds);
  }
}

TEST_CASE("bounded characters: independent check with brute-force membership") {
  for (const auto& inst : shipped_tori()) {
    if (inst.torus.rank > 2) continue;
    const auto& t = inst.torus;
    const auto m = l_minus_fr_t(t.frobenius, inst.l);
    const auto box = bounding_box(t, inst.l - 2);
    IntVec mu(t.rank);
    for (std::size_t i = 0; i < t.rank; ++i) mu[i] = -box[i];
    for (;;) {
      bool in_region = true;
      for (const auto& d : t.cocharacters) in_region = in_region && std::llabs(dot(mu, d)) < inst.l - 1;
      const bool zero = std::all_of(mu.begin(), mu.end(), [](std::int64_t x) { return x == 0; });
      if (in_region && !zero) CHECK(!brute_in_image(m, mu, cramer_bound(m, mu)));
      std::size_t i = 0;
      while (i < mu.size() && mu[i] == box[i]) {
        mu[i] = -box[i];
        ++i;
      }
      if (i == mu.size()) break;
      ++mu[i];
    }
  }
}

TEST_CASE("box overflow") {
  TorusData t{3, IntMatrix::identity(3), {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
  try {
    check_bounded_characters(t, 11, 100);
    FAIL("expected BoxOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoxOverflow);
  }
}
