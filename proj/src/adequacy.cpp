#include "adequacy/adequacy.hpp"

#include <algorithm>
#include <map>

namespace adq {

namespace {

Vec transposed_entries(const Matrix& m) { return m.transpose().entries(); }

Subspace trace_dual(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
  if (rows.empty()) return Subspace::full(f, n * n);
  return Subspace(kernel(Matrix::from_rows(f, rows, n * n)));
}

}  // namespace

SpanVerdict condition_c_span(const MatGroup& g, std::uint64_t l) {
  const std::size_t n = g.dim();
  EchelonBuilder z(g.field(), n * n);
  for (auto i : semisimple_indices(g, l)) {
    z.add(g.elements()[i].entries());
    if (z.full()) break;
  }
  SpanVerdict out;
  out.z = z.subspace();
  out.dim = out.z.dim();
  out.holds = out.dim == n * n;
  return out;
}

AnnihilatorVerdict condition_c_annihilator(const MatGroup& g, std::uint64_t l) {
  const auto& f = g.field();
  const std::size_t n = g.dim();
  // tr(g w) is the dot product of vec(g^T) with vec(w).
  EchelonBuilder functionals(f, n * n);
  for (auto i : semisimple_indices(g, l)) {
    functionals.add(transposed_entries(g.elements()[i]));
    if (functionals.full()) break;
  }
  AnnihilatorVerdict out;
  out.u = trace_dual(f, n, functionals.rows());
  out.dim = out.u.dim();
  out.holds = out.dim == 0;

  for (const auto& w : out.u.vectors()) {
    Elem tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = f.add(tr, w[i * n + i]);
    if (tr != 0) throw Error(ErrorCode::InternalMismatch, "annihilator leaves ad0 V");
  }
  const auto z = condition_c_span(g, l);
  std::vector<Vec> zt;
  for (const auto& v : z.z.vectors()) zt.push_back(transposed_entries(unflatten(f, n, v)));
  if (trace_dual(f, n, zt) != out.u) {
    throw Error(ErrorCode::InternalMismatch, "annihilator differs from the trace-orthogonal of the span");
  }
  if (z.dim + out.dim != n * n) {
    throw Error(ErrorCode::InternalMismatch, "dim Z + dim U differs from n^2");
  }
  return out;
}

DirectVerdict condition_c_direct(GroupPtr g, std::uint64_t l, const MeataxeOptions& opts) {
  const auto& f = g->field();
  const std::size_t n = g->dim();
  DirectVerdict out;
  out.available = true;
  const auto ad0 = ad0_module(g);
  if (ad0.module.dim() == 0) {
    out.holds = true;
    return out;
  }
  auto subs = irreducible_submodules(ad0.module, opts);
  if (!subs.multiplicity_free()) {
    out.available = false;
    out.obstruction = std::move(subs.obstruction);
    return out;
  }
  std::vector<std::vector<Matrix>> bases;
  for (const auto& w : subs.submodules) {
    std::vector<Vec> flat;
    std::vector<Matrix> mats;
    for (const auto& v : w.subspace.vectors()) {
      flat.push_back(ad0.to_ad(v));
      mats.push_back(unflatten(f, n, flat.back()));
    }
    out.submodules.push_back(Subspace::span(f, n * n, flat));
    bases.push_back(std::move(mats));
  }

  struct Split {
    SplitRoots roots;
    std::optional<Embedding> emb;
    Poly cp;
  };
  std::map<std::vector<Elem>, Split> splits;
  struct Projector {
    Elem alpha;
    Matrix e;
  };
  std::map<std::size_t, std::vector<Projector>> projectors;
  auto projectors_of = [&](std::size_t idx) -> std::pair<const Split*, const std::vector<Projector>*> {
    const Matrix& m = g->elements()[idx];
    const Poly cp = char_poly(m);
    auto it = splits.find(cp.coeffs());
    if (it == splits.end()) {
      Split s{splitting_field_roots(cp, opts.seed), std::nullopt, cp};
      if (s.roots.field != f) {
        s.emb.emplace(f, s.roots.field);
        s.cp = map_poly(cp, *s.emb);
      }
      it = splits.emplace(cp.coeffs(), std::move(s)).first;
    }
    const Split& s = it->second;
    auto pit = projectors.find(idx);
    if (pit == projectors.end()) {
      const Matrix lifted = s.emb ? lift(m, *s.emb) : m;
      std::vector<Projector> ps;
      for (const auto& r : s.roots.roots) ps.push_back({r.value, eigenprojector(lifted, r.value, s.cp)});
      pit = projectors.emplace(idx, std::move(ps)).first;
    }
    return {&s, &pit->second};
  };

  const auto ss = semisimple_indices(*g, l);
  out.holds = true;
  for (std::size_t w = 0; w < bases.size() && out.holds; ++w) {
    bool found = false;
    for (std::size_t idx : ss) {
      const auto [split, ps] = projectors_of(idx);
      for (const auto& p : *ps) {
        for (std::size_t b = 0; b < bases[w].size() && !found; ++b) {
          const Matrix wb = split->emb ? lift(bases[w][b], *split->emb) : bases[w][b];
          const Elem t = trace_pairing(p.e, wb);
          if (t != 0) {
            out.witnesses.push_back({w, idx, split->roots.field, p.alpha, b, t});
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      out.holds = false;
      out.failing = w;
    }
  }
  return out;
}

bool ConditionCVerdict::agree() const {
  if (span.holds != annihilator.holds) return false;
  return !direct.available || direct.holds == span.holds;
}

ConditionCVerdict condition_c(GroupPtr g, std::uint64_t l, const MeataxeOptions& opts) {
  ConditionCVerdict out;
  out.span = condition_c_span(*g, l);
  out.annihilator = condition_c_annihilator(*g, l);
  out.direct = condition_c_direct(g, l, opts);
  return out;
}

AdequacyReport adequacy_report(GroupPtr g, std::string label, const ReportOptions& opts) {
  AdequacyReport r;
  r.label = std::move(label);
  r.field = g->field();
  r.l = r.field.prime();
  r.n = g->dim();
  r.order = g->order();
  r.dim_prime_to_l = r.n % r.l != 0;

  const auto core = l_power_core(*g, r.l, opts.cap_order);
  r.core_order = core->order();
  try {
    const auto natural = natural_module(core);
    const auto parts = decompose_semisimple(natural, opts.meataxe);
    std::size_t d = 0;
    for (const auto& w : parts.summands) {
      // Over the algebraic closure W splits into dim End(W) conjugate pieces.
      const auto sub = natural.restrict_to(w.subspace);
      d = std::max(d, w.subspace.dim() / hom_space(sub, sub).size());
    }
    r.d = d;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSemisimple) throw;
  }

  const auto natural = natural_module(g);
  r.irreducible = is_absolutely_irreducible(natural, opts.meataxe);
  if (!is_irreducible(natural, opts.meataxe).irreducible) {
    const auto subs = irreducible_submodules(natural, opts.meataxe);
    if (subs.multiplicity_free()) {
      const auto best = std::min_element(subs.submodules.begin(), subs.submodules.end(),
                                         [](const SubmoduleWitness& a, const SubmoduleWitness& b) {
                                           return a.subspace.dim() < b.subspace.dim();
                                         });
      r.reducibility_witness = best->subspace;
    } else {
      r.reducibility_witness = minimal_submodule(natural, opts.meataxe);
    }
  }
  const auto ad0 = ad0_module(g);
  r.h0_ad0 = h0(ad0.module).dim();
  r.h1_ad0 = h1(ad0.module, opts.cap_unknowns).h1_dim;
  r.h1_trivial = h1_trivial_coeffs(g, r.l, opts.cap_unknowns).by_cocycles;
  r.condition_c = condition_c(g, r.l, opts.meataxe);

  if (r.irreducible && !r.condition_c.agree()) {
    throw Error(ErrorCode::CriterionMismatch,
                r.label + ": span says " + (r.condition_c.span.holds ? "holds" : "fails") +
                    ", annihilator says " + (r.condition_c.annihilator.holds ? "holds" : "fails") +
                    (r.condition_c.direct.available
                         ? std::string(", direct says ") + (r.condition_c.direct.holds ? "holds" : "fails")
                         : std::string()));
  }
  r.hypothesis_met = r.irreducible && r.d && r.l >= 2 * (*r.d + 1);
  r.adequate = r.irreducible && r.h0_ad0 == 0 && r.h1_ad0 == 0 && r.h1_trivial == 0 &&
               r.condition_c.holds();
  r.theorem_consistent = !r.hypothesis_met || r.adequate;
  return r;
}

bool tensor_condition_c(const MatGroup& g, const MatGroup& h, std::size_t cap) {
  const auto l = g.field().prime();
  if (!condition_c_span(g, l).holds || !condition_c_span(h, l).holds) {
    throw Error(ErrorCode::InvalidArgument, "tensor factors must satisfy Condition (C)");
  }
  return condition_c_span(*tensor_image(g, h, cap), l).holds;
}

}  // namespace adq
