#include <doctest.h>

#include <random>
#include <set>

#include "adequacy/expmap.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adq;
using fixture::ints;

namespace {

using oracle::i64;
using oracle::IMat;

// The truncated series evaluated with plain modular integers.
IMat oracle_exp(const IMat& x, i64 p) {
  const std::size_t n = x.size();
  IMat sum = oracle::ident(n), power = oracle::ident(n);
  i64 fact = 1;
  for (i64 k = 1; k < p; ++k) {
    power = oracle::imul(power, x, p);
    fact = fact * k % p;
    const i64 c = oracle::inv(fact, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum[i][j] = (sum[i][j] + c * power[i][j]) % p;
    }
  }
  return sum;
}

bool is_zero(const IMat& a) {
  for (const auto& r : a) {
    for (auto v : r) {
      if (v != 0) return false;
    }
  }
  return true;
}

// Every nilpotent n x n matrix over GF(p), by enumerating all matrices.
std::vector<Matrix> all_nilpotent(const Field& f, std::size_t n) {
  const auto p = static_cast<i64>(f.prime());
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= static_cast<std::size_t>(p);
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    IMat m(n, std::vector<i64>(n));
    std::size_t c = code;
    for (std::size_t i = 0; i < n * n; ++i) {
      m[i / n][i % n] = static_cast<i64>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    IMat pw = m;
    for (std::size_t k = 1; k < n; ++k) pw = oracle::imul(pw, m, p);
    if (!is_zero(pw)) continue;
    Matrix x(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) x(i, j) = static_cast<Elem>(m[i][j]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

Matrix shift(const Field& f, std::size_t n) {
  Matrix s(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) s(i, i + 1) = 1;
  return s;
}

}  // namespace

TEST_CASE("exp_nilpotent examples") {
  const Field f5 = make_field(5, 1);
  CHECK(exp_nilpotent(Matrix(f5, 3, 3)) == Matrix::identity(f5, 3));
  const auto e12 = ints(f5, {{0, 1}, {0, 0}});
  CHECK(exp_nilpotent(e12) == Matrix::identity(f5, 2) + e12);
  const auto n = shift(f5, 3);
  CHECK(exp_nilpotent(n) == Matrix::identity(f5, 3) + n + (n * n).scaled(3));
  try {
    exp_nilpotent(Matrix::identity(f5, 2));
    FAIL("expected NotNilpotentToOrderL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNilpotentToOrderL);
  }
  // A 6x6 shift over GF(5) has N^5 != 0.
  CHECK_THROWS_AS(exp_nilpotent(shift(f5, 6)), Error);
  CHECK(!is_nilpotent_to_order_l(shift(f5, 6)));
  CHECK(is_nilpotent_to_order_l(shift(f5, 5)));
}

TEST_CASE("log_unipotent examples") {
  const Field f5 = make_field(5, 1);
  CHECK(log_unipotent(Matrix::identity(f5, 2)).is_zero());
  const auto e12 = ints(f5, {{0, 1}, {0, 0}});
  CHECK(log_unipotent(Matrix::identity(f5, 2) + e12) == e12);
  const auto n = shift(f5, 3);
  CHECK(log_unipotent(exp_nilpotent(n)) == n);
  try {
    log_unipotent(ints(f5, {{2, 0}, {0, 1}}));
    FAIL("expected NotUnipotentToOrderL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnipotentToOrderL);
  }
}

TEST_CASE("nilpotency_index") {
  const Field f7 = make_field(7, 1);
  CHECK(nilpotency_index(Matrix(f7, 2, 2)) == 1);
  CHECK(nilpotency_index(shift(f7, 4)) == 4);
  CHECK(nilpotency_index(Matrix::identity(f7, 2)) == 0);
}

TEST_CASE("exp and log are inverse on every small nilpotent matrix") {
  for (std::uint64_t p : {3, 5}) {
    const Field f = make_field(p, 1);
    for (std::size_t n : {2, 3}) {
      const auto nil = all_nilpotent(f, n);
      // There are q^(n^2 - n) nilpotent n x n matrices over GF(q).
      std::size_t expect = 1;
      for (std::size_t i = 0; i < n * n - n; ++i) expect *= p;
      CHECK(nil.size() == expect);
      std::set<std::vector<Elem>> images;
      for (const auto& x : nil) {
        const auto u = exp_nilpotent(x);
        CHECK(oracle::to_imat(u) == oracle_exp(oracle::to_imat(x), static_cast<i64>(p)));
        CHECK(is_unipotent_to_order_l(u));
        CHECK(log_unipotent(u) == x);
        CHECK(exp_nilpotent(log_unipotent(Matrix::identity(f, n) + x)) == Matrix::identity(f, n) + x);
        images.insert(u.entries());
      }
      CHECK(images.size() == nil.size());
    }
  }
}

TEST_CASE("roundtrip on seeded samples up to dimension l") {
  std::mt19937_64 rng(55);
  for (std::uint64_t l : {5, 7, 11}) {
    const Field f = make_field(l, 1);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 1 + rng() % l;
      const auto x = oracle::random_nilpotent(rng, f, n);
      REQUIRE(is_nilpotent_to_order_l(x));
      const auto u = exp_nilpotent(x);
      CHECK(log_unipotent(u) == x);
      const auto v = Matrix::identity(f, n) + x;
      CHECK(exp_nilpotent(log_unipotent(v)) == v);
      CHECK(nilpotency_index(log_unipotent(u)) == nilpotency_index(x));
    }
  }
}

TEST_CASE("one_parameter examples and samples") {
  const Field f7 = make_field(7, 1);
  const auto n = shift(f7, 3);
  CHECK(one_parameter(n, 0, 4));
  CHECK(one_parameter(n, 3, 4));
  CHECK(exp_nilpotent(n.scaled(3)) * exp_nilpotent(n.scaled(4)) == Matrix::identity(f7, 3));
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {5, 7}) {
    const Field f = make_field(p, 1);
    std::uniform_int_distribution<Elem> pick(0, p - 1);
    for (int t = 0; t < 200; ++t) {
      const auto x = oracle::random_nilpotent(rng, f, 1 + rng() % 5);
      const Elem a = pick(rng), b = pick(rng);
      CHECK(one_parameter(x, a, b));
      CHECK(exp_nilpotent(x.scaled(a)) * exp_nilpotent(x.scaled(b)) == exp_nilpotent(x.scaled(f.add(a, b))));
    }
  }
}

TEST_CASE("conjugation equivariance") {
  const Field f7 = make_field(7, 1);
  const auto e12 = ints(f7, {{0, 1}, {0, 0}});
  const auto g = ints(f7, {{3, 0}, {0, 5}});
  CHECK(conjugation_equivariance(e12, Matrix::identity(f7, 2)));
  CHECK(conjugation_equivariance(e12, g));
  // 3 / 5 = 3 * 3 = 2 mod 7.
  CHECK(g * exp_nilpotent(e12) * *inverse(g) == Matrix::identity(f7, 2) + e12.scaled(2));
  try {
    conjugation_equivariance(e12, ints(f7, {{1, 1}, {1, 1}}));
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
  std::mt19937_64 rng(9);
  for (std::uint64_t p : {5, 7}) {
    const Field f = make_field(p, 1);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const auto x = oracle::random_nilpotent(rng, f, n);
      const auto h = oracle::random_invertible(rng, f, n);
      CHECK(conjugation_equivariance(x, h));
      CHECK(h * exp_nilpotent(x) * *inverse(h) == exp_nilpotent(h * x * *inverse(h)));
    }
  }
}

TEST_CASE("commuting nilpotents: exp(X) exp(Y) = exp(X + Y)") {
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {5, 7, 11}) {
    const Field f = make_field(p, 1);
    std::uniform_int_distribution<Elem> pick(0, p - 1);
    for (int t = 0; t < 100; ++t) {
      const auto x = oracle::random_nilpotent(rng, f, 1 + rng() % p);
      // Y is a polynomial in X without constant term.
      Matrix y(f, x.rows(), x.cols());
      Matrix pw = x;
      for (int k = 1; k <= 3; ++k) {
        y = y + pw.scaled(pick(rng));
        pw = pw * x;
      }
      REQUIRE(x * y == y * x);
      CHECK(exp_nilpotent(x) * exp_nilpotent(y) == exp_nilpotent(x + y));
    }
  }
}
