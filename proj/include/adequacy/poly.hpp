#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adequacy/field.hpp"

namespace adq {

/// Dense univariate polynomial over a Field, coefficients low to high with
/// trailing zeros stripped. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly x(const Field& f);
  /// x - a
  static Poly linear(const Field& f, Elem a);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Elem eval(Elem x) const;
  Poly monic() const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem s) const;

  /// Returns (quotient, remainder); throws ZeroPolynomial on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Degree first, then coefficients from the top down by code.
  bool operator<(const Poly& o) const;

  std::string format() const;

 private:
  void normalize();

  Field field_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
/// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Poly lcm(const Poly& a, const Poly& b);

struct Factor {
  Poly poly;
  unsigned multiplicity;
};

/// Factorization into monic irreducibles with multiplicities (squarefree,
/// distinct-degree and equal-degree stages). The equal-degree split draws
/// from a generator seeded with `seed`; the result is sorted by Poly order
/// and does not depend on the seed.
std::vector<Factor> factor_poly(const Poly& f, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);

struct Root {
  Elem value;
  unsigned multiplicity;
};

struct SplitRoots {
  Field field;              // splitting field containing f's field
  std::vector<Root> roots;  // sorted by code
};

/// The smallest extension of f's field over which f splits, with every root
/// and its multiplicity. `cap` bounds the order of the splitting field.
SplitRoots splitting_field_roots(const Poly& f, std::uint64_t seed = 0,
                                 std::uint64_t cap = kArithmeticCap);

/// Apply a field embedding to every coefficient.
Poly map_poly(const Poly& f, const Embedding& emb);

}  // namespace adq
