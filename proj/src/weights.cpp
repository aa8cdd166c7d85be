#include "adequacy/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace adq {

void TorusData::validate() const {
  if (frobenius.rows() != rank || frobenius.cols() != rank) {
    throw Error(ErrorCode::DimensionMismatch, "Frobenius matrix must be rank x rank");
  }
  for (const auto& d : cocharacters) {
    if (d.size() != rank) throw Error(ErrorCode::DimensionMismatch, "cocharacter length");
  }
  if (rank > 0 &&
      (cocharacters.empty() || rank_over_q(IntMatrix::from_rows(cocharacters, rank)) != rank)) {
    throw Error(ErrorCode::InvalidArgument, "cocharacters do not span the rational lattice");
  }
  for (const auto& d : cocharacters) {
    const IntVec img = frobenius * d;
    if (std::find(cocharacters.begin(), cocharacters.end(), img) == cocharacters.end()) {
      throw Error(ErrorCode::InvalidArgument, "cocharacter set is not Frobenius-stable");
    }
  }
}

LatticeImage::LatticeImage(const IntMatrix& frobenius, std::int64_t l) {
  const std::size_t r = frobenius.rows();
  map_ = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) map_(i, j) = (i == j ? l : 0) - frobenius(j, i);
  }
  snf_ = smith_normal_form(map_);
}

bool LatticeImage::contains(const IntVec& mu) const {
  const IntVec y = snf_.left * mu;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf_.rank) {
      if (y[i] % snf_.invariants[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

IntVec LatticeImage::class_key(const IntVec& mu) const {
  IntVec y = snf_.left * mu;
  for (std::size_t i = 0; i < snf_.rank && i < y.size(); ++i) {
    const auto d = snf_.invariants[i];
    y[i] = ((y[i] % d) + d) % d;
  }
  return y;
}

bool in_image(const IntVec& mu, const LatticeImage& image) { return image.contains(mu); }

IntVec bounding_box(const TorusData& torus, std::int64_t bound) {
  const std::size_t r = torus.rank;
  std::vector<IntVec> basis;
  for (const auto& d : torus.cocharacters) {
    auto trial = basis;
    trial.push_back(d);
    if (rank_over_q(IntMatrix::from_rows(trial, r)) == trial.size()) basis = std::move(trial);
    if (basis.size() == r) break;
  }
  if (basis.size() != r) {
    throw Error(ErrorCode::InvalidArgument, "bounded region is unbounded: cocharacters do not span");
  }
  const IntMatrix dm = IntMatrix::from_rows(basis, r);
  const std::int64_t det = std::llabs(determinant(dm));
  // mu = adj(D) c / det(D) with |c_i| <= bound.
  IntVec box(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix minor(r - 1, r - 1);
      for (std::size_t a = 0, ma = 0; a < r; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, mb = 0; b < r; ++b) {
          if (b == j) continue;
          minor(ma, mb++) = dm(a, b);
        }
        ++ma;
      }
      total = checked_add(total, std::llabs(determinant(minor)));
    }
    box[j] = checked_mul(total, bound) / det;
  }
  return box;
}

namespace {

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

template <typename Visit>
void enumerate_box(const IntVec& box, std::size_t cap, Visit&& visit) {
  std::size_t total = 1;
  for (auto b : box) {
    const auto side = static_cast<std::size_t>(2 * b + 1);
    if (total > cap / side) {
      throw Error(ErrorCode::BoxOverflow, "enumeration box exceeds " + std::to_string(cap) + " points");
    }
    total *= side;
  }
  IntVec mu(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) mu[i] = -box[i];
  for (;;) {
    if (!visit(mu)) return;
    std::size_t i = 0;
    while (i < mu.size() && mu[i] == box[i]) {
      mu[i] = -box[i];
      ++i;
    }
    if (i == mu.size()) return;
    ++mu[i];
  }
}

}  // namespace

LatticeVerdict check_bounded_characters(const TorusData& torus, std::int64_t l, std::size_t box_cap) {
  torus.validate();
  const LatticeImage image(torus.frobenius, l);
  const std::int64_t bound = l - 2;  // |<mu, delta>| < l - 1
  LatticeVerdict out;
  out.box = bounding_box(torus, bound);
  enumerate_box(out.box, box_cap, [&](const IntVec& mu) {
    for (const auto& d : torus.cocharacters) {
      if (std::llabs(dot(mu, d)) > bound) return true;
    }
    ++out.region_points;
    const bool zero = std::all_of(mu.begin(), mu.end(), [](std::int64_t x) { return x == 0; });
    if (!zero && image.contains(mu)) {
      out.holds = false;
      out.counterexample = mu;
      return false;
    }
    return true;
  });
  return out;
}

LatticeVerdict check_half_bound_separation(const TorusData& torus, std::int64_t l,
                                           std::size_t box_cap) {
  torus.validate();
  const LatticeImage image(torus.frobenius, l);
  LatticeVerdict out;
  out.box = bounding_box(torus, std::max<std::int64_t>(0, (l - 2) / 2));
  std::map<IntVec, IntVec> seen;
  enumerate_box(out.box, box_cap, [&](const IntVec& mu) {
    for (const auto& d : torus.cocharacters) {
      if (2 * std::llabs(dot(mu, d)) >= l - 1) return true;
    }
    ++out.region_points;
    auto [it, fresh] = seen.emplace(image.class_key(mu), mu);
    if (!fresh) {
      out.holds = false;
      out.counterexample = mu;
      out.collision_partner = it->second;
      return false;
    }
    return true;
  });
  return out;
}

namespace {

std::vector<IntVec> signed_standard(std::size_t r) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::int64_t s : {1, -1}) {
      IntVec v(r, 0);
      v[i] = s;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<IntVec> signed_pairs(std::size_t r) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::int64_t a : {1, -1}) {
        for (std::int64_t b : {1, -1}) {
          IntVec v(r, 0);
          v[i] = a;
          v[j] = b;
          out.push_back(v);
        }
      }
    }
  }
  return out;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace

std::vector<TorusInstance> shipped_tori() {
  std::vector<TorusInstance> out;
  for (std::int64_t l : {5, 7, 11}) {
    for (std::size_t r = 1; r <= 3; ++r) {
      std::vector<std::pair<std::string, IntMatrix>> frobs;
      IntMatrix neg = IntMatrix::identity(r);
      for (std::size_t i = 0; i < r; ++i) neg(i, i) = -1;
      frobs.emplace_back("neg", neg);
      std::vector<std::size_t> perm(r);
      for (std::size_t i = 0; i < r; ++i) perm[i] = i;
      do {
        std::string name = "perm";
        for (auto p : perm) name += std::to_string(p);
        frobs.emplace_back(name, permutation_matrix(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));

      std::vector<std::pair<std::string, std::vector<IntVec>>> deltas{{"std", signed_standard(r)}};
      if (r >= 2) {
        auto both = signed_standard(r);
        for (auto& v : signed_pairs(r)) both.push_back(v);
        deltas.emplace_back("pairs", signed_pairs(r));
        deltas.emplace_back("std+pairs", both);
      }
      for (const auto& [fname, fr] : frobs) {
        for (const auto& [dname, delta] : deltas) {
          TorusData t{r, fr, delta};
          t.validate();
          out.push_back({"r" + std::to_string(r) + "-" + fname + "-" + dname + "-l" + std::to_string(l), t, l});
        }
      }
    }
  }
  return out;
}

}  // namespace adq
