#include "adequacy/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace adq {

Poly::Poly(Field f, std::vector<Elem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }
Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }
Poly Poly::linear(const Field& f, Elem a) { return Poly(f, {f.neg(a), 1}); }

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = field_.add(field_.mul(r, x), c_[i]);
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.prime())), c_[i]));
  }
  return Poly(field_, std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Elem> rem = c_;
  std::vector<Elem> quo(c_.size() - d.c_.size() + 1, 0);
  const Elem inv_lead = field_.inv(d.lead());
  const std::size_t dn = d.c_.size();
  for (std::size_t i = rem.size() - 1;; --i) {
    const Elem t = field_.mul(rem[i], inv_lead);
    quo[i - dn + 1] = t;
    if (t != 0) {
      for (std::size_t j = 0; j < dn; ++j) {
        rem[i - dn + 1 + j] = field_.sub(rem[i - dn + 1 + j], field_.mul(t, d.c_[j]));
      }
    }
    if (i == dn - 1) break;
  }
  rem.resize(dn - 1);
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string Poly::format() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    if (!unit || i == 0) os << field_.format(c_[i]);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    auto t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of zero");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x = Poly::x(f.field());
  const auto q = f.field().order();
  Poly h = x;
  for (int i = 1; 2 * i <= n; ++i) {
    h = powmod(h, q, f);
    if (!gcd(f, h - x).is_one()) return false;
  }
  return true;
}

namespace {

Poly pth_root_poly(const Poly& f) {
  const auto p = f.field().prime();
  std::vector<Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    r.push_back(f.field().pth_root(f.coeffs()[i]));
  }
  return Poly(f.field(), std::move(r));
}

// Monic input; returns (squarefree part, multiplicity) pairs.
std::vector<Factor> squarefree(const Poly& f) {
  std::vector<Factor> out;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(f.field().prime());
    for (auto& [g, m] : squarefree(pth_root_poly(c).monic())) {
      out.push_back({g, m * p});
    }
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x = Poly::x(f.field());
  const auto q = f.field().order();
  Poly h = x;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, q, f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.field();
  const auto q = F.order();
  for (;;) {
    std::vector<Elem> c(static_cast<std::size_t>(f.degree()));
    for (auto& e : c) e = rng() % q;
    Poly a(F, std::move(c));
    if (a.degree() < 1) continue;
    Poly probe;
    if (F.prime() == 2) {
      // Absolute trace to GF(2) of a viewed in GF(q^d).
      Poly t = a;
      probe = a;
      const auto steps = static_cast<unsigned>(F.degree()) * static_cast<unsigned>(d);
      for (unsigned j = 1; j < steps; ++j) {
        t = (t * t) % f;
        probe = probe + t;
      }
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly t = a, norm = a;
      for (int j = 1; j < d; ++j) {
        t = powmod(t, q, f);
        norm = (norm * t) % f;
      }
      probe = powmod(norm, (q - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, probe);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor zero");
  std::mt19937_64 rng(seed);
  std::vector<Factor> raw;
  for (const auto& [part, mult] : squarefree(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& pc : pieces) raw.push_back({std::move(pc), mult});
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> out;
  for (auto& fac : raw) {
    if (!out.empty() && out.back().poly == fac.poly) {
      out.back().multiplicity += fac.multiplicity;
    } else {
      out.push_back(std::move(fac));
    }
  }
  return out;
}

Poly map_poly(const Poly& f, const Embedding& emb) {
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (auto e : f.coeffs()) c.push_back(emb(e));
  return Poly(emb.target(), std::move(c));
}

namespace {

void collect_linear_roots(const std::vector<Factor>& factors, unsigned scale,
                          const Field& F, std::map<Elem, unsigned>& roots) {
  for (const auto& fac : factors) {
    if (fac.poly.degree() != 1) {
      throw Error(ErrorCode::InternalMismatch, "factor did not split in the splitting field");
    }
    roots[F.neg(fac.poly.coeff(0))] += fac.multiplicity * scale;
  }
}

}  // namespace

SplitRoots splitting_field_roots(const Poly& f, std::uint64_t seed, std::uint64_t cap) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  const Field& F = f.field();
  const auto factors = factor_poly(f, seed);
  unsigned m = 1;
  for (const auto& fac : factors) {
    m = std::lcm(m, static_cast<unsigned>(fac.poly.degree()));
  }
  std::map<Elem, unsigned> roots;
  SplitRoots out;
  if (m == 1) {
    out.field = F;
    collect_linear_roots(factors, 1, F, roots);
  } else {
    const Field E = make_field(F.prime(), F.degree() * m, cap);
    const Embedding emb(F, E);
    for (const auto& fac : factors) {
      collect_linear_roots(factor_poly(map_poly(fac.poly, emb), seed), fac.multiplicity, E,
                           roots);
    }
    out.field = E;
  }
  for (const auto& [v, mult] : roots) out.roots.push_back({v, mult});
  return out;
}

}  // namespace adq
