#include "adequacy/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "adequacy/poly.hpp"

namespace adq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IncompatibleDegrees: return "IncompatibleDegrees";
    case ErrorCode::IncompatibleFields: return "IncompatibleFields";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SeedExhausted: return "SeedExhausted";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::CriterionMismatch: return "CriterionMismatch";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::NotNilpotentToOrderL: return "NotNilpotentToOrderL";
    case ErrorCode::NotUnipotentToOrderL: return "NotUnipotentToOrderL";
    case ErrorCode::BoxOverflow: return "BoxOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Fields up to this size get log/antilog tables for multiplication.
constexpr std::uint64_t kTableCap = std::uint64_t{1} << 18;

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit inputs with these bases.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldCtx {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<std::uint64_t> modulus;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> pw;  // p^0 .. p^k
  std::vector<std::uint32_t> log_table, exp_table;
};

std::uint64_t Field::prime() const { return ctx_->p; }
unsigned Field::degree() const { return ctx_->k; }
std::uint64_t Field::order() const { return ctx_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return ctx_->modulus; }

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(ctx_->p);
  auto r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > ctx_->k) {
    throw Error(ErrorCode::InvalidArgument,
                "coefficient vector longer than field degree");
  }
  Elem code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= ctx_->p) {
      throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    }
    code += coeffs[i] * ctx_->pw[i];
  }
  return code;
}

std::vector<std::uint64_t> Field::coeffs(Elem a) const {
  std::vector<std::uint64_t> c(ctx_->k);
  for (unsigned i = 0; i < ctx_->k; ++i) {
    c[i] = a % ctx_->p;
    a /= ctx_->p;
  }
  return c;
}

Elem Field::generator() const {
  // For k == 1 the modulus is x, so the generator reduces to 0.
  return ctx_->k == 1 ? 0 : ctx_->p;
}

Elem Field::add(Elem a, Elem b) const {
  const auto p = ctx_->p;
  if (ctx_->k == 1) {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem r = 0;
  for (unsigned i = 0; i < ctx_->k; ++i) {
    Elem d = a % p + b % p;
    if (d >= p) d -= p;
    r += d * ctx_->pw[i];
    a /= p;
    b /= p;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  const auto p = ctx_->p;
  if (ctx_->k == 1) return a == 0 ? 0 : p - a;
  Elem r = 0;
  for (unsigned i = 0; i < ctx_->k; ++i) {
    const Elem d = a % p;
    r += (d == 0 ? 0 : p - d) * ctx_->pw[i];
    a /= p;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const {
  if (ctx_->k == 1) return a >= b ? a - b : a + ctx_->p - b;
  return add(a, neg(b));
}

Elem Field::mul_slow(Elem a, Elem b) const {
  const auto p = ctx_->p;
  const unsigned k = ctx_->k;
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p)) % p;
    }
  }
  const auto& m = ctx_->modulus;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const auto t = prod[i];
    if (t == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) {
      const auto s = mulmod(t, m[j], p);
      auto& dst = prod[i - k + j];
      dst = dst >= s ? dst - s : dst + p - s;
    }
  }
  Elem r = 0;
  for (unsigned i = 0; i < k; ++i) r += prod[i] * ctx_->pw[i];
  return r;
}

Elem Field::mul(Elem a, Elem b) const {
  if (ctx_->k == 1) return mulmod(a, b, ctx_->p);
  if (a == 0 || b == 0) return 0;
  if (!ctx_->exp_table.empty()) {
    const auto n = ctx_->q - 1;
    auto e = static_cast<std::uint64_t>(ctx_->log_table[a]) + ctx_->log_table[b];
    if (e >= n) e -= n;
    return ctx_->exp_table[e];
  }
  return mul_slow(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::NotInvertible, "inverse of zero");
  if (ctx_->k == 1) return powmod_u64(a, ctx_->p - 2, ctx_->p);
  if (!ctx_->exp_table.empty()) {
    const auto n = ctx_->q - 1;
    const auto l = ctx_->log_table[a];
    return ctx_->exp_table[l == 0 ? 0 : n - l];
  }
  return pow(a, ctx_->q - 2);
}

Elem Field::frobenius(Elem a) const { return pow(a, ctx_->p); }

Elem Field::pth_root(Elem a) const {
  if (ctx_->k == 1) return a;
  return pow(a, ctx_->pw[ctx_->k - 1]);
}

bool Field::operator==(const Field& other) const {
  if (ctx_ == other.ctx_) return true;
  if (!ctx_ || !other.ctx_) return false;
  return ctx_->p == other.ctx_->p && ctx_->k == other.ctx_->k &&
         ctx_->modulus == other.ctx_->modulus;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << ctx_->p;
  if (ctx_->k > 1) os << "^" << ctx_->k;
  os << ")";
  if (ctx_->k > 1) {
    os << " mod " << Poly(make_field(ctx_->p, 1), {ctx_->modulus.begin(),
                                                   ctx_->modulus.end()})
                         .format();
  }
  return os.str();
}

std::string Field::format(Elem a) const {
  if (ctx_->k == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

namespace {

std::shared_ptr<FieldCtx> bare_ctx(std::uint64_t p,
                                   std::vector<std::uint64_t> modulus) {
  auto ctx = std::make_shared<FieldCtx>();
  ctx->p = p;
  ctx->k = static_cast<unsigned>(modulus.size() - 1);
  ctx->modulus = std::move(modulus);
  ctx->pw.assign(ctx->k + 1, 1);
  for (unsigned i = 1; i <= ctx->k; ++i) {
    ctx->pw[i] = ctx->pw[i - 1] * p;
  }
  ctx->q = ctx->pw[ctx->k];
  return ctx;
}

std::uint64_t checked_order(std::uint64_t p, unsigned k, std::uint64_t cap) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > cap / p) {
      throw Error(ErrorCode::CapExceeded,
                  "field GF(" + std::to_string(p) + "^" + std::to_string(k) +
                      ") exceeds the configured cap");
    }
    q *= p;
  }
  return q;
}

}  // namespace

Field field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  }
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  checked_order(p, k, kArithmeticCap);
  if (k == 1) {
    // Any monic linear modulus gives the same prime field; normalize to x.
    return make_field(p, 1);
  }
  const Field base = make_field(p, 1);
  Poly m(base, std::vector<Elem>(modulus.begin(), modulus.end()));
  if (!is_irreducible(m)) {
    throw Error(ErrorCode::InvalidArgument, "modulus is not irreducible");
  }
  auto ctx = bare_ctx(p, std::move(modulus));
  Field plain{std::shared_ptr<const FieldCtx>(ctx)};
  if (ctx->q <= kTableCap) {
    const auto n = ctx->q - 1;
    const auto divisors = prime_divisors(n);
    Elem g = 2;
    for (;; ++g) {
      bool primitive = true;
      for (auto r : divisors) {
        Elem t = 1, b = g;
        for (auto e = n / r; e; e >>= 1) {
          if (e & 1) t = plain.mul_slow(t, b);
          b = plain.mul_slow(b, b);
        }
        if (t == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    std::vector<std::uint32_t> exp_t(n), log_t(ctx->q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_t[i] = static_cast<std::uint32_t>(cur);
      log_t[cur] = static_cast<std::uint32_t>(i);
      cur = plain.mul_slow(cur, g);
    }
    ctx->exp_table = std::move(exp_t);
    ctx->log_table = std::move(log_t);
  }
  return Field{std::shared_ptr<const FieldCtx>(std::move(ctx))};
}

Field make_field(std::uint64_t p, unsigned k, std::uint64_t cap) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  const auto q = checked_order(p, k, std::min(cap, kArithmeticCap));
  (void)q;

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, Field> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }

  Field result;
  if (k == 1) {
    result = Field{std::shared_ptr<const FieldCtx>(bare_ctx(p, {0, 1}))};
  } else {
    const Field base = make_field(p, 1);
    const auto count = checked_order(p, k, kArithmeticCap);
    // Codes enumerate (c_0..c_{k-1}) with c_{k-1} most significant, which is
    // the lexicographic order read from the top coefficient.
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> c(k + 1);
      auto t = code;
      for (unsigned i = 0; i < k; ++i) {
        c[i] = t % p;
        t /= p;
      }
      c[k] = 1;
      if (c[0] == 0) continue;  // divisible by x
      Poly m(base, c);
      if (is_irreducible(m)) {
        result = field_with_modulus(p, std::vector<std::uint64_t>(c.begin(), c.end()));
        break;
      }
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(p, k), result).first->second;
}

Embedding::Embedding(const Field& source, const Field& target)
    : source_(source), target_(target) {
  if (source.prime() != target.prime()) {
    throw Error(ErrorCode::IncompatibleFields, "characteristics differ");
  }
  if (target.degree() % source.degree() != 0) {
    throw Error(ErrorCode::IncompatibleDegrees,
                source.describe() + " does not embed in " + target.describe());
  }
  if (source.degree() == 1) return;
  if (source == target) {
    gen_image_ = source.generator();
    return;
  }
  // Prime-field constants have identical codes in every field of
  // characteristic p, so the modulus can be reinterpreted directly.
  const auto& m = source.modulus();
  Poly f(target, std::vector<Elem>(m.begin(), m.end()));
  const auto split = splitting_field_roots(f);
  if (!(split.field == target) || split.roots.empty()) {
    throw Error(ErrorCode::InternalMismatch, "source modulus does not split in target");
  }
  gen_image_ = split.roots.front().value;
}

Elem Embedding::operator()(Elem x) const {
  if (source_.degree() == 1) return x;
  const auto c = source_.coeffs(x);
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    r = target_.add(target_.mul(r, gen_image_), c[i]);
  }
  return r;
}

Elem embed(Elem x, const Field& source, const Field& target) {
  return Embedding(source, target)(x);
}

}  // namespace adq
