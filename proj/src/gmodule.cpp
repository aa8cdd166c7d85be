#include "adequacy/gmodule.hpp"

#include <algorithm>
#include <random>

namespace adq {

GModule::GModule(GroupPtr group, std::size_t dim, std::vector<Matrix> action, std::string label)
    : group_(std::move(group)), dim_(dim), action_(std::move(action)), label_(std::move(label)) {
  if (action_.size() != group_->generators().size()) {
    throw Error(ErrorCode::DimensionMismatch, "one action matrix per generator required");
  }
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "action matrix has wrong shape");
    }
  }
}

std::vector<Matrix> GModule::element_actions() const {
  const auto& g = *group_;
  std::vector<Matrix> rho;
  rho.reserve(g.order());
  rho.push_back(Matrix::identity(field(), dim_));
  for (std::size_t i = 1; i < g.order(); ++i) {
    rho.push_back(rho[g.tree_parent(i)] * action_[g.tree_gen(i)]);
  }
  return rho;
}

bool GModule::verify_homomorphism() const {
  const auto rho = element_actions();
  const auto& g = *group_;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t s = 0; s < action_.size(); ++s) {
      if (rho[i] * action_[s] != rho[g.right_mult(i, s)]) return false;
    }
  }
  return true;
}

GModule GModule::restrict_to(const Subspace& sub) const {
  const std::size_t s = sub.dim();
  std::vector<Matrix> acts;
  for (const auto& a : action_) {
    Matrix r(field(), s, s);
    for (std::size_t j = 0; j < s; ++j) {
      const Vec img = a * sub.basis().row(j);
      if (!sub.contains(img)) {
        throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
      }
      const Vec c = sub.coords(img);
      for (std::size_t i = 0; i < s; ++i) r(i, j) = c[i];
    }
    acts.push_back(std::move(r));
  }
  return GModule(group_, s, std::move(acts), label_);
}

namespace {

std::vector<std::size_t> non_pivots(const Subspace& sub) {
  std::vector<bool> piv(sub.ambient(), false);
  for (auto c : sub.pivots()) piv[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < sub.ambient(); ++c) {
    if (!piv[c]) out.push_back(c);
  }
  return out;
}

// v minus its component along sub's RREF basis; zero at pivot columns.
Vec reduce_mod(const Subspace& sub, Vec v) {
  const Field& f = sub.field();
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    const Elem t = v[sub.pivots()[i]];
    if (t == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(t, sub.basis()(i, j)));
  }
  return v;
}

// Vector in m's coordinates from coordinates in sub's basis.
Vec from_coords(const Subspace& sub, std::span<const Elem> c) {
  const Field& f = sub.field();
  Vec v(sub.ambient(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = f.add(v[j], f.mul(c[i], sub.basis()(i, j)));
    }
  }
  return v;
}

Subspace pull_back(const Subspace& outer, const Subspace& inner) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < inner.dim(); ++i) vs.push_back(from_coords(outer, inner.basis().row(i)));
  return Subspace::span(outer.field(), outer.ambient(), vs);
}

}  // namespace

GModule GModule::quotient_by(const Subspace& sub) const {
  const auto cols = non_pivots(sub);
  const std::size_t q = cols.size();
  std::vector<Matrix> acts;
  for (const auto& a : action_) {
    Matrix r(field(), q, q);
    for (std::size_t j = 0; j < q; ++j) {
      Vec e(dim_, 0);
      e[cols[j]] = 1;
      const Vec img = reduce_mod(sub, a * e);
      for (std::size_t i = 0; i < q; ++i) r(i, j) = img[cols[i]];
    }
    acts.push_back(std::move(r));
  }
  return GModule(group_, q, std::move(acts), label_);
}

bool is_invariant(const GModule& m, const Subspace& s) {
  for (const auto& a : m.action()) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (!s.contains(a * s.basis().row(i))) return false;
    }
  }
  return true;
}

SubmoduleWitness make_witness(const GModule& m, Subspace s) {
  const bool ok = is_invariant(m, s);
  return {std::move(s), ok};
}

GModule natural_module(GroupPtr g) {
  auto acts = g->generators();
  const auto n = g->dim();
  return GModule(std::move(g), n, std::move(acts), "V");
}

GModule ad_module(GroupPtr g) {
  std::vector<Matrix> acts;
  for (const auto& x : g->generators()) {
    acts.push_back(kronecker(x, inverse(x)->transpose()));
  }
  const auto n = g->dim();
  return GModule(std::move(g), n * n, std::move(acts), "ad V");
}

Vec Ad0Module::to_ad(std::span<const Elem> v) const { return from_coords(inclusion, v); }

Ad0Module ad0_module(GroupPtr g) {
  const auto n = g->dim();
  const Field& f = g->field();
  Matrix tr(f, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) tr(0, i * n + i) = 1;
  Subspace zero_trace(kernel(tr));
  GModule ad = ad_module(std::move(g));
  GModule sub = ad.restrict_to(zero_trace);
  return {GModule(sub.group(), sub.dim(), sub.action(), "ad0 V"), std::move(zero_trace)};
}

GroupPtr tensor_image(const MatGroup& g, const MatGroup& h, std::size_t cap) {
  if (!(g.field() == h.field())) throw Error(ErrorCode::IncompatibleFields, "tensor image");
  const Field& f = g.field();
  const auto ig = Matrix::identity(f, g.dim());
  const auto ih = Matrix::identity(f, h.dim());
  std::vector<Matrix> gens;
  for (const auto& x : g.generators()) gens.push_back(kronecker(x, ih));
  for (const auto& y : h.generators()) gens.push_back(kronecker(ig, y));
  return closure(f, g.dim() * h.dim(), std::move(gens), cap);
}

namespace {

Subspace spin_with(const std::vector<Matrix>& acts, const Field& f, std::size_t dim,
                   std::span<const Elem> v) {
  EchelonBuilder eb(f, dim);
  if (!eb.add(v)) throw Error(ErrorCode::ZeroVector, "cannot spin the zero vector");
  for (std::size_t i = 0; i < eb.dim() && !eb.full(); ++i) {
    const Vec cur = eb.rows()[i];
    for (const auto& a : acts) {
      eb.add(a * cur);
      if (eb.full()) break;
    }
  }
  return eb.subspace();
}

Matrix random_algebra_element(const GModule& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  const auto n = m.dim();
  const auto& acts = m.action();
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.order() - 1);
  Matrix theta = Matrix::identity(f, n).scaled(coeff(rng));
  if (acts.empty()) return theta;
  std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  for (int term = 0; term < 4; ++term) {
    Matrix word = acts[pick(rng)];
    const int l = len(rng);
    for (int k = 1; k < l; ++k) word = word * acts[pick(rng)];
    theta = theta + word.scaled(coeff(rng));
  }
  return theta;
}

}  // namespace

SubmoduleWitness spin(const GModule& m, std::span<const Elem> v) {
  if (v.size() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "spin vector length");
  return make_witness(m, spin_with(m.action(), m.field(), m.dim(), v));
}

IrreducibilityVerdict is_irreducible(const GModule& m, const MeataxeOptions& opts) {
  const auto n = m.dim();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "irreducibility of the zero module");
  const Field& f = m.field();
  std::vector<Matrix> transposed;
  for (const auto& a : m.action()) transposed.push_back(a.transpose());

  for (unsigned attempt = 0; attempt < opts.attempts; ++attempt) {
    std::seed_seq sq{opts.seed, static_cast<std::uint64_t>(attempt)};
    std::mt19937_64 rng(sq);
    const Matrix theta = random_algebra_element(m, rng);
    auto factors = factor_poly(char_poly(theta), opts.seed + attempt);
    std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
      return a.poly.degree() < b.poly.degree();
    });
    for (const auto& fac : factors) {
      const Matrix nmat = eval_poly(fac.poly, theta);
      const Matrix ker = kernel(nmat);
      const Subspace s = spin_with(m.action(), f, n, ker.row(0));
      if (s.dim() < n) return {false, std::nullopt, make_witness(m, s)};
      if (ker.rows() != static_cast<std::size_t>(fac.poly.degree())) continue;
      const Matrix kert = kernel(nmat.transpose());
      const Subspace st = spin_with(transposed, f, n, kert.row(0));
      if (st.dim() < n) return {false, std::nullopt, make_witness(m, st.orthogonal())};
      return {true, theta, std::nullopt};
    }
  }
  throw Error(ErrorCode::SeedExhausted, "Meataxe inconclusive after " +
                                            std::to_string(opts.attempts) + " attempts");
}

std::vector<Matrix> hom_space(const GModule& a, const GModule& b) {
  if (a.group() != b.group() && a.action().size() != b.action().size()) {
    throw Error(ErrorCode::InvalidArgument, "modules of different groups");
  }
  const Field& f = a.field();
  const std::size_t m = b.dim(), w = a.dim();
  const std::size_t unknowns = m * w;
  // X is m x w; unknown X[i][j] at i*w + j.
  std::vector<Vec> rows;
  for (std::size_t s = 0; s < a.action().size(); ++s) {
    const Matrix& am = b.action(s);
    const Matrix& aw = a.action(s);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        Vec row(unknowns, 0);
        for (std::size_t k = 0; k < m; ++k) row[k * w + j] = f.add(row[k * w + j], am(i, k));
        for (std::size_t k = 0; k < w; ++k) row[i * w + k] = f.sub(row[i * w + k], aw(k, j));
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Matrix> out;
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      Matrix x(f, m, w);
      x(u / w, u % w) = 1;
      out.push_back(std::move(x));
    }
    return out;
  }
  const Matrix ker = kernel(Matrix::from_rows(f, rows, unknowns));
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    out.emplace_back(f, m, w, Vec(ker.row(r).begin(), ker.row(r).end()));
  }
  return out;
}

bool is_absolutely_irreducible(const GModule& m, const MeataxeOptions& opts) {
  if (!is_irreducible(m, opts).irreducible) return false;
  return hom_space(m, m).size() == 1;
}

Subspace minimal_submodule(const GModule& m, const MeataxeOptions& opts) {
  const auto v = is_irreducible(m, opts);
  if (v.irreducible) return Subspace::full(m.field(), m.dim());
  const Subspace& s = v.witness->subspace;
  return pull_back(s, minimal_submodule(m.restrict_to(s), opts));
}

std::vector<GModule> composition_factors(const GModule& m, const MeataxeOptions& opts) {
  if (m.dim() == 0) return {};
  const auto v = is_irreducible(m, opts);
  if (v.irreducible) return {m};
  const Subspace& s = v.witness->subspace;
  auto out = composition_factors(m.restrict_to(s), opts);
  for (auto& q : composition_factors(m.quotient_by(s), opts)) out.push_back(std::move(q));
  return out;
}

namespace {

Subspace image_of(const Matrix& x) {
  // Column space of x as a subspace of F^{rows}.
  return Subspace(x.transpose());
}

}  // namespace

IrreducibleSubmodules irreducible_submodules(const GModule& m, const MeataxeOptions& opts) {
  IrreducibleSubmodules out;
  if (m.dim() == 0) return out;
  std::vector<GModule> types;
  for (auto& c : composition_factors(m, opts)) {
    bool seen = false;
    for (const auto& t : types) {
      if (t.dim() == c.dim() && !hom_space(c, t).empty()) {
        seen = true;
        break;
      }
    }
    if (!seen) types.push_back(std::move(c));
  }
  std::vector<SocleConstituent> socle;
  bool multiplicity_free = true;
  for (const auto& t : types) {
    const auto homs = hom_space(t, m);
    if (homs.empty()) continue;
    const std::size_t end_dim = hom_space(t, t).size();
    const std::size_t mult = homs.size() / end_dim;
    Subspace iso = Subspace::zero(m.field(), m.dim());
    for (const auto& h : homs) iso = iso + image_of(h);
    if (mult > 1) multiplicity_free = false;
    socle.push_back({t.dim(), mult, iso});
    if (mult == 1) out.submodules.push_back(make_witness(m, image_of(homs.front())));
  }
  if (!multiplicity_free) {
    out.submodules.clear();
    out.obstruction = std::move(socle);
  }
  return out;
}

namespace {

// Equivariant projection p : m -> w (w given by its subspace inside m) with
// p restricted to w equal to the identity, if one exists.
std::optional<Matrix> equivariant_projection(const GModule& m, const Subspace& w) {
  const Field& f = m.field();
  const GModule wm = m.restrict_to(w);
  const std::size_t d = w.dim(), n = m.dim();
  const std::size_t unknowns = d * n;  // p[a][b] at a*n + b
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t s = 0; s < m.action().size(); ++s) {
    const Matrix& am = m.action(s);
    const Matrix& aw = wm.action(s);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Vec row(unknowns, 0);
        for (std::size_t k = 0; k < n; ++k) row[a * n + k] = f.add(row[a * n + k], am(k, b));
        for (std::size_t k = 0; k < d; ++k) row[k * n + b] = f.sub(row[k * n + b], aw(a, k));
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec row(unknowns, 0);
      for (std::size_t k = 0; k < n; ++k) row[a * n + k] = w.basis()(j, k);
      rows.push_back(std::move(row));
      rhs.push_back(a == j ? 1 : 0);
    }
  }
  const auto sol = solve(Matrix::from_rows(f, rows, unknowns), rhs);
  if (!sol) return std::nullopt;
  return Matrix(f, d, n, sol->x);
}

}  // namespace

IrreducibleDecomposition decompose_semisimple(const GModule& m, const MeataxeOptions& opts) {
  IrreducibleDecomposition out;
  if (m.dim() == 0) return out;
  const Subspace w = minimal_submodule(m, opts);
  out.summands.push_back(make_witness(m, w));
  out.max_dim = w.dim();
  if (w.dim() == m.dim()) return out;
  const auto proj = equivariant_projection(m, w);
  if (!proj) {
    throw Error(ErrorCode::NotSemisimple,
                "a " + std::to_string(w.dim()) + "-dimensional submodule of " + m.label() +
                    " has no invariant complement");
  }
  const Subspace comp(kernel(*proj));
  if (!is_invariant(m, comp)) {
    throw Error(ErrorCode::InternalMismatch, "complement is not invariant");
  }
  const auto rest = decompose_semisimple(m.restrict_to(comp), opts);
  for (const auto& s : rest.summands) {
    out.summands.push_back(make_witness(m, pull_back(comp, s.subspace)));
  }
  out.max_dim = std::max(out.max_dim, rest.max_dim);
  return out;
}

IrreducibleDecomposition max_irreducible_dim(const MatGroup& g, std::uint64_t l,
                                             const MeataxeOptions& opts) {
  const GroupPtr core = l_power_core(g, l);
  auto d = decompose_semisimple(natural_module(core), opts);
  if (d.max_dim == 0) d.max_dim = 1;
  return d;
}

}  // namespace adq
