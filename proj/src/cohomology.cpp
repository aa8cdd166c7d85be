#include "adequacy/cohomology.hpp"

#include <string>

namespace adq {

Subspace h0(const GModule& m) {
  const auto& f = m.field();
  const std::size_t n = m.dim();
  if (m.action().empty()) return Subspace::full(f, n);
  Matrix stacked(f, m.action().size() * n, n);
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t s = 0; s < m.action().size(); ++s) {
    const Matrix d = m.action(s) - id;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) stacked(s * n + i, j) = d(i, j);
    }
  }
  return Subspace(kernel(stacked));
}

GModule trivial_module(GroupPtr g, std::size_t dim) {
  std::vector<Matrix> acts(g->generators().size(), Matrix::identity(g->field(), dim));
  return GModule(std::move(g), dim, std::move(acts), "trivial");
}

namespace {

// prod[g * order + h] = index of elements()[g] * elements()[h].
std::vector<std::size_t> product_table(const MatGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> prod(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    prod[a * n] = a;
    for (std::size_t h = 1; h < n; ++h) {
      prod[a * n + h] = g.right_mult(prod[a * n + g.tree_parent(h)], g.tree_gen(h));
    }
  }
  return prod;
}

}  // namespace

Matrix cocycle_table(const GModule& m, std::span<const Elem> generator_values) {
  const auto& g = *m.group();
  const auto& f = m.field();
  const std::size_t n = m.dim();
  if (generator_values.size() != g.generators().size() * n) {
    throw Error(ErrorCode::DimensionMismatch, "generator values have the wrong length");
  }
  const auto rho = m.element_actions();
  Matrix table(f, g.order(), n);
  for (std::size_t x = 1; x < g.order(); ++x) {
    const std::size_t p = g.tree_parent(x), s = g.tree_gen(x);
    const Vec img = rho[p] * generator_values.subspan(s * n, n);
    for (std::size_t i = 0; i < n; ++i) table(x, i) = f.add(table(p, i), img[i]);
  }
  return table;
}

bool is_cocycle(const GModule& m, const Matrix& table) {
  const auto& g = *m.group();
  const auto& f = m.field();
  const std::size_t n = m.dim(), order = g.order();
  const auto rho = m.element_actions();
  const auto prod = product_table(g);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const Vec img = rho[a] * table.row(b);
      const std::size_t ab = prod[a * order + b];
      for (std::size_t i = 0; i < n; ++i) {
        if (table(ab, i) != f.add(table(a, i), img[i])) return false;
      }
    }
  }
  return true;
}

CocycleSpace h1(const GModule& m, std::size_t cap_unknowns) {
  const auto& g = *m.group();
  const auto& f = m.field();
  const std::size_t n = m.dim(), k = g.generators().size(), order = g.order();
  if (order * n > cap_unknowns) {
    throw Error(ErrorCode::CapExceeded, "cocycle system has " + std::to_string(order * n) +
                                            " unknowns, cap is " + std::to_string(cap_unknowns));
  }
  const std::size_t width = k * n;
  CocycleSpace out;
  if (width == 0) {
    out.z1 = out.b1 = Subspace::zero(f, 0);
    return out;
  }

  // f(x) = lin[x] * u, where u stacks the generator values f(s).
  const auto rho = m.element_actions();
  std::vector<Matrix> lin(order, Matrix(f, n, width));
  for (std::size_t x = 1; x < order; ++x) {
    const std::size_t p = g.tree_parent(x), s = g.tree_gen(x);
    lin[x] = lin[p];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lin[x](i, s * n + j) = f.add(lin[x](i, s * n + j), rho[p](i, j));
    }
  }

  EchelonBuilder constraints(f, width);
  Vec row(width);
  for (std::size_t x = 0; x < order && !constraints.full(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t y = g.right_mult(x, s);
      if (y != 0 && g.tree_parent(y) == x && g.tree_gen(y) == s) continue;
      // f(y) - f(x) - rho(x) f(s) = 0
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < width; ++c) row[c] = f.sub(lin[y](i, c), lin[x](i, c));
        for (std::size_t j = 0; j < n; ++j) row[s * n + j] = f.sub(row[s * n + j], rho[x](i, j));
        constraints.add(row);
      }
    }
  }
  out.z1 = constraints.dim() == 0
               ? Subspace::full(f, width)
               : Subspace(kernel(Matrix::from_rows(f, constraints.rows(), width)));

  std::vector<Vec> cob;
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec u(width);
    for (std::size_t s = 0; s < k; ++s) {
      const Matrix d = m.action(s) - id;
      for (std::size_t i = 0; i < n; ++i) u[s * n + i] = d(i, j);
    }
    cob.push_back(std::move(u));
  }
  out.b1 = Subspace::span(f, width, cob);
  if (!out.z1.contains(out.b1)) {
    throw Error(ErrorCode::InternalMismatch, "coboundaries are not cocycles");
  }

  EchelonBuilder ext(f, width);
  for (const auto& v : out.b1.vectors()) ext.add(v);
  for (const auto& v : out.z1.vectors()) {
    if (ext.add(v)) out.representatives.push_back(v);
  }
  out.z1_dim = out.z1.dim();
  out.b1_dim = out.b1.dim();
  out.h1_dim = out.z1_dim - out.b1_dim;

  if (order <= kPairCheckOrder) {
    for (const auto& v : out.z1.vectors()) {
      if (!is_cocycle(m, cocycle_table(m, v))) {
        throw Error(ErrorCode::InternalMismatch, "solved cocycle fails the cocycle identity");
      }
    }
  }
  return out;
}

IntVec abelian_invariants(const MatGroup& g) {
  const std::size_t k = g.generators().size(), order = g.order();
  if (k == 0) return {};
  std::vector<IntVec> word(order, IntVec(k, 0));
  for (std::size_t x = 1; x < order; ++x) {
    word[x] = word[g.tree_parent(x)];
    ++word[x][g.tree_gen(x)];
  }
  // The abelianization is Z^k modulo the images of the Schreier relators,
  // one per non-tree edge. Its exponent divides |G|.
  ModularHermite lattice(k, static_cast<std::int64_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t y = g.right_mult(x, s);
      if (y != 0 && g.tree_parent(y) == x && g.tree_gen(y) == s) continue;
      IntVec rel = word[x];
      ++rel[s];
      for (std::size_t i = 0; i < k; ++i) rel[i] -= word[y][i];
      lattice.add(std::move(rel));
    }
  }
  IntVec out;
  for (auto d : smith_normal_form(lattice.basis()).invariants) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

TrivialH1 h1_trivial_coeffs(GroupPtr g, std::uint64_t l, std::size_t cap_unknowns) {
  TrivialH1 out;
  out.by_cocycles = h1(trivial_module(g), cap_unknowns).h1_dim;
  for (auto d : abelian_invariants(*g)) {
    if (static_cast<std::uint64_t>(d) % l == 0) ++out.by_abelianization;
  }
  if (out.by_cocycles != out.by_abelianization) {
    throw Error(ErrorCode::InternalMismatch,
                "H^1 with trivial coefficients: cocycles give " + std::to_string(out.by_cocycles) +
                    ", abelianization gives " + std::to_string(out.by_abelianization));
  }
  return out;
}

}  // namespace adq
