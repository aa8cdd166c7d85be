#include "adequacy/group.hpp"

#include <numeric>
#include <string>

namespace adq {

std::size_t EntryHash::operator()(const std::vector<Elem>& v) const noexcept {
  // FNV-1a over the canonical codes.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::optional<std::size_t> MatGroup::index_of(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == field_)) return std::nullopt;
  auto it = index_.find(m.entries());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
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

// Exact order of g given a multiple of it.
std::uint64_t order_from_multiple(const Matrix& g, std::uint64_t multiple) {
  std::uint64_t ord = multiple;
  for (auto r : prime_factors(multiple)) {
    while (ord % r == 0 && g.pow(ord / r).is_identity()) ord /= r;
  }
  return ord;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const auto q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

GroupPtr closure(const Field& f, std::size_t dim, std::vector<Matrix> gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "generator has wrong shape");
    }
    if (!(g.field() == f)) throw Error(ErrorCode::IncompatibleFields, "generator field");
    if (rank(g) != dim) throw Error(ErrorCode::NotInvertible, "generator is singular");
  }
  auto grp = std::shared_ptr<MatGroup>(new MatGroup());
  grp->field_ = f;
  grp->dim_ = dim;
  grp->gens_ = std::move(gens);
  const std::size_t ng = grp->gens_.size();

  auto add = [&](Matrix m, std::size_t parent, std::size_t via) {
    if (grp->elements_.size() >= cap) {
      throw Error(ErrorCode::OrderCapExceeded,
                  "closure exceeds " + std::to_string(cap) + " elements");
    }
    const std::size_t idx = grp->elements_.size();
    grp->index_.emplace(m.entries(), idx);
    grp->elements_.push_back(std::move(m));
    grp->parent_.push_back(parent);
    grp->via_.push_back(via);
    return idx;
  };
  add(Matrix::identity(f, dim), 0, 0);
  for (std::size_t i = 0; i < grp->elements_.size(); ++i) {
    for (std::size_t s = 0; s < ng; ++s) {
      Matrix y = grp->elements_[i] * grp->gens_[s];
      std::size_t j;
      if (auto it = grp->index_.find(y.entries()); it != grp->index_.end()) {
        j = it->second;
      } else {
        j = add(std::move(y), i, s);
      }
      grp->succ_.push_back(j);
    }
  }
  const auto n = grp->elements_.size();
  grp->orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grp->orders_[i] = order_from_multiple(grp->elements_[i], n);
  }
  return grp;
}

std::uint64_t element_order(const Matrix& g, std::uint64_t cap) {
  if (!g.is_square()) throw Error(ErrorCode::NotSquare, "element order");
  Matrix x = g;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  throw Error(ErrorCode::CapExceeded, "element order exceeds " + std::to_string(cap));
}

bool is_l_power(std::uint64_t n, std::uint64_t l) {
  if (n == 0) return false;
  while (n % l == 0) n /= l;
  return n == 1;
}

JordanPair jordan_parts(const Matrix& g, std::uint64_t l, std::uint64_t order) {
  std::uint64_t la = 1, m = order;
  while (m % l == 0) {
    m /= l;
    la *= l;
  }
  // x = 0 mod l^a, x = 1 mod m; y = 1 mod l^a, y = 0 mod m.
  const std::uint64_t x = la * inverse_mod(la, m);
  const std::uint64_t y = m * inverse_mod(m, la);
  return {g.pow(x % order), g.pow(y % order)};
}

JordanPair jordan_parts(const Matrix& g, std::uint64_t l) {
  return jordan_parts(g, l, element_order(g));
}

std::vector<std::size_t> semisimple_indices(const MatGroup& g, std::uint64_t l) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.element_order(i) % l != 0) out.push_back(i);
  }
  return out;
}

std::vector<Matrix> semisimple_subset(const MatGroup& g, std::uint64_t l) {
  std::vector<Matrix> out;
  for (auto i : semisimple_indices(g, l)) out.push_back(g.elements()[i]);
  return out;
}

GroupPtr l_power_core(const MatGroup& g, std::uint64_t l, std::size_t cap) {
  std::vector<Matrix> gens;
  GroupPtr core = closure(g.field(), g.dim(), gens, cap);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto ord = g.element_order(i);
    if (ord == 1 || !is_l_power(ord, l)) continue;
    if (core->contains(g.elements()[i])) continue;
    gens.push_back(g.elements()[i]);
    core = closure(g.field(), g.dim(), gens, cap);
  }
  return core;
}

bool is_normal_in(const MatGroup& sub, const MatGroup& g) {
  for (const auto& h : g.generators()) {
    const auto hinv = inverse(h);
    for (const auto& x : sub.elements()) {
      if (!sub.contains(h * x * *hinv)) return false;
    }
  }
  return true;
}

}  // namespace adq
