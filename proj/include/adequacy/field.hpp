#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adequacy/error.hpp"

namespace adq {

/// An element of GF(p^k) in its canonical code: sum of c_i * p^i over the
/// coefficient vector (c_0, ..., c_{k-1}) in the polynomial basis. The code
/// order is the total order on coefficient vectors used for tie-breaking.
using Elem = std::uint64_t;

/// Fields with at most this many elements may be enumerated element by
/// element. Larger fields are still fine for arithmetic.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;
/// Hard ceiling for arithmetic: codes must fit comfortably in 64 bits.
inline constexpr std::uint64_t kArithmeticCap = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t n);

struct FieldCtx;

/// Handle to an immutable finite field GF(p^k) presented by a monic
/// irreducible modulus over GF(p). Copies share the context; two handles are
/// interoperable only when prime, degree and modulus all coincide.
class Field {
 public:
  Field() = default;

  std::uint64_t prime() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// k+1 coefficients, low to high, monic.
  const std::vector<std::uint64_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(Elem a) const;
  /// The element whose code is x for the polynomial-basis generator.
  Elem generator() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a -> a^p.
  Elem frobenius(Elem a) const;
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const;
  bool in_prime_field(Elem a) const { return a < prime(); }
  bool valid(Elem a) const { return a < order(); }

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string describe() const;
  std::string format(Elem a) const;

  friend Field make_field(std::uint64_t p, unsigned k, std::uint64_t cap);
  friend Field field_with_modulus(std::uint64_t p,
                                  std::vector<std::uint64_t> modulus);

 private:
  explicit Field(std::shared_ptr<const FieldCtx> ctx) : ctx_(std::move(ctx)) {}

  Elem mul_slow(Elem a, Elem b) const;

  std::shared_ptr<const FieldCtx> ctx_;
};

/// GF(p^k) with the lexicographically least monic irreducible modulus of
/// degree k (coefficient vectors compared from the top coefficient down).
/// Degree 1 uses the modulus x, so the field is GF(p) itself.
Field make_field(std::uint64_t p, unsigned k,
                 std::uint64_t cap = kArithmeticCap);

/// GF(p^k) with an explicit modulus; throws unless it is monic irreducible.
Field field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

/// Field homomorphism GF(p^k) -> GF(p^m), k | m, sending the source
/// generator to the least root of the source modulus in the target.
class Embedding {
 public:
  Embedding(const Field& source, const Field& target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem generator_image() const { return gen_image_; }
  Elem operator()(Elem x) const;

 private:
  Field source_;
  Field target_;
  Elem gen_image_ = 0;
};

Elem embed(Elem x, const Field& source, const Field& target);

}  // namespace adq
