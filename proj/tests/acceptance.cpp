// Acceptance suite: one pass/fail line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "adequacy/expmap.hpp"
#include "adequacy/weights.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adq;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string summary;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

using Corpus = std::vector<std::pair<CorpusEntry, GroupPtr>>;

const Corpus& corpus() {
  static const Corpus c = fixture::corpus();
  return c;
}

std::string str(std::size_t v) { return std::to_string(v); }

// 1. SL2(F_l) natural module for l in {7, 11, 13}.
void sl2_suite(Tally& t) {
  std::ostringstream s;
  for (std::uint64_t l : {7, 11, 13}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = adequacy_report(fixture::sl2(l), "sl2-l" + std::to_string(l));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = "l=" + std::to_string(l) + ": ";
    t.check(r.d == 2u, tag + "d != 2");
    t.check(r.hypothesis_met, tag + "hypothesis not met");
    t.check(r.adequate, tag + "not adequate");
    t.check(r.h0_ad0 == 0, tag + "h0-ad0 = " + str(r.h0_ad0));
    t.check(r.h1_ad0 == 0, tag + "h1-ad0 = " + str(r.h1_ad0));
    t.check(r.h1_trivial == 0, tag + "h1-trivial = " + str(r.h1_trivial));
    t.check(r.condition_c.span.dim == 4, tag + "dim Z = " + str(r.condition_c.span.dim));
    t.check(r.theorem_consistent, tag + "theorem-inconsistent");
    t.check(secs < 60.0, tag + "took " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sl=%llu %.1fs", l == 7 ? "" : ", ", static_cast<unsigned long long>(l), secs);
    s << buf;
  }
  t.summary = s.str();
}

// 2. by-span, by-annihilator and by-direct agree on irreducible corpus groups.
void criteria_agree(Tally& t) {
  std::size_t groups = 0, direct = 0;
  for (const auto& [e, g] : corpus()) {
    if (!is_irreducible(natural_module(g)).irreducible) continue;
    ++groups;
    const auto l = g->characteristic();
    const auto n = g->dim();
    const auto span = condition_c_span(*g, l);
    const auto ann = condition_c_annihilator(*g, l);
    const auto dir = condition_c_direct(g, l);
    const std::string tag = e.spec.label + ": ";
    t.check(span.holds == ann.holds, tag + "span and annihilator disagree");
    t.check(span.dim + ann.dim == n * n, tag + "dim Z + dim U = " + str(span.dim + ann.dim));
    t.check(span.z.orthogonal() == ann.u, tag + "U is not the annihilator of Z");
    if (dir.available) {
      ++direct;
      t.check(dir.holds == span.holds, tag + "direct and span disagree");
    }
  }
  t.check(groups >= 25, "only " + str(groups) + " irreducible groups");
  t.summary = str(groups) + " groups, " + str(direct) + " with a direct verdict";
}

// 3. Irreducible groups of order prime to l satisfy Condition (C).
void prime_to_l(Tally& t) {
  std::size_t count = 0;
  for (const auto& [e, g] : corpus()) {
    const auto l = g->characteristic();
    if (l > 11 || std::gcd<std::uint64_t>(g->order(), l) != 1) continue;
    if (!is_irreducible(natural_module(g)).irreducible) continue;
    ++count;
    t.check(condition_c_span(*g, l).holds, e.spec.label + ": Condition (C) fails");
  }
  t.check(count >= 15, "only " + str(count) + " instances");
  t.summary = str(count) + " instances";
}

// 4. Tensor images of seeded Condition (C) pairs.
void tensor_pairs(Tally& t) {
  std::vector<GroupPtr> pool;
  for (const auto& [e, g] : corpus()) {
    if (g->order() <= 200 && condition_c_span(*g, g->characteristic()).holds) pool.push_back(g);
  }
  std::mt19937_64 rng(4);
  std::size_t done = 0, tries = 0;
  while (done < 10 && ++tries < 100000) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    if (a->field() != b->field() || a->dim() * b->dim() > 6) continue;
    t.check(tensor_condition_c(*a, *b), "pair " + str(done) + " fails");
    ++done;
  }
  t.check(done == 10, "only " + str(done) + " pairs drawn");
  t.summary = str(done) + " pairs";
}

// 5. exp/log.
std::vector<Matrix> all_nilpotent(const Field& f, std::size_t n) {
  const auto p = f.prime();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= p;
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix m(f, n, n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n * n; ++i, c /= p) m(i / n, i % n) = c % p;
    if (m.pow(n).is_zero()) out.push_back(std::move(m));
  }
  return out;
}

void exp_log(Tally& t) {
  std::size_t exhaustive = 0;
  for (std::uint64_t p : {3, 5}) {
    const Field f = make_field(p, 1);
    for (std::size_t n : {2, 3}) {
      const auto nil = all_nilpotent(f, n);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < n * n - n; ++i) expect *= p;
      t.check(nil.size() == expect, "nilpotent count for n=" + str(n) + ", p=" + str(p));
      for (const auto& x : nil) {
        const auto id = Matrix::identity(f, n);
        t.check(log_unipotent(exp_nilpotent(x)) == x, "log(exp(X)) != X:\n" + x.format());
        t.check(exp_nilpotent(log_unipotent(id + x)) == id + x, "exp(log(U)) != U:\n" + (id + x).format());
      }
      exhaustive += nil.size();
    }
  }
  std::mt19937_64 rng(5);
  for (std::uint64_t l : {5, 7, 11}) {
    const Field f = make_field(l, 1);
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 1 + rng() % l;
      const auto x = oracle::random_nilpotent(rng, f, n);
      const auto id = Matrix::identity(f, n);
      t.check(log_unipotent(exp_nilpotent(x)) == x, "sample log(exp(X)) != X");
      t.check(exp_nilpotent(log_unipotent(id + x)) == id + x, "sample exp(log(U)) != U");
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t l = std::vector<std::uint64_t>{5, 7, 11}[rng() % 3];
    const Field f = make_field(l, 1);
    const std::size_t n = 1 + rng() % 5;
    const auto x = oracle::random_nilpotent(rng, f, n);
    const Elem a = rng() % l, b = rng() % l;
    t.check(one_parameter(x, a, b), "one-parameter additivity fails");
    t.check(conjugation_equivariance(x, oracle::random_invertible(rng, f, n)), "conjugation equivariance fails");
  }
  t.summary = str(exhaustive) + " exhaustive, 1500 samples, 200 pairs";
}

// 6. Bounded characters on shipped tori, and in_image against a brute-force search.
IntMatrix l_minus_fr_t(const IntMatrix& fr, std::int64_t l) {
  IntMatrix m(fr.rows(), fr.cols());
  for (std::size_t i = 0; i < fr.rows(); ++i) {
    for (std::size_t j = 0; j < fr.cols(); ++j) m(i, j) = (i == j ? l : 0) - fr(j, i);
  }
  return m;
}

// Coordinates of any integer solution of m lambda = mu are bounded by |adj(m) mu| / |det m|.
std::int64_t solution_bound(const IntMatrix& m, const IntVec& mu) {
  const std::size_t r = m.rows();
  const std::int64_t det = std::llabs(determinant(m));
  std::int64_t best = 0;
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t cof = 1;
      if (r > 1) {
        IntMatrix minor(r - 1, r - 1);
        for (std::size_t a = 0, ma = 0; a < r; ++a) {
          if (a == i) continue;
          for (std::size_t b = 0, mb = 0; b < r; ++b) {
            if (b != j) minor(ma, mb++) = m(a, b);
          }
          ++ma;
        }
        cof = determinant(minor);
      }
      s += std::llabs(cof) * std::llabs(mu[i]);
    }
    best = std::max(best, s / det);
  }
  return best;
}

bool brute_in_image(const IntMatrix& m, const IntVec& mu) {
  const std::int64_t bound = solution_bound(m, mu);
  IntVec lam(mu.size(), -bound);
  for (;;) {
    if (m * lam == mu) return true;
    std::size_t i = 0;
    while (i < lam.size() && lam[i] == bound) lam[i++] = -bound;
    if (i == lam.size()) return false;
    ++lam[i];
  }
}

void tori(Tally& t) {
  const auto all = shipped_tori();
  for (const auto& inst : all) {
    t.check(check_bounded_characters(inst.torus, inst.l).holds, inst.label + ": bounded-character check fails");
    t.check(check_half_bound_separation(inst.torus, inst.l).holds, inst.label + ": half-bound check fails");
  }
  std::mt19937_64 rng(6);
  std::size_t done = 0, members = 0;
  while (done < 100) {
    const std::size_t r = 1 + rng() % 3;
    const std::int64_t l = std::vector<std::int64_t>{5, 7, 11}[rng() % 3];
    IntMatrix fr(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) fr(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    }
    const auto m = l_minus_fr_t(fr, l);
    if (determinant(m) == 0) continue;
    IntVec mu(r);
    if (rng() % 2 == 0) {
      IntVec lam(r);
      for (auto& x : lam) x = static_cast<std::int64_t>(rng() % 5) - 2;
      mu = m * lam;
    } else {
      for (auto& x : mu) x = static_cast<std::int64_t>(rng() % 21) - 10;
    }
    const bool expect = brute_in_image(m, mu);
    members += expect;
    t.check(in_image(mu, LatticeImage(fr, l)) == expect, "in_image disagrees with the search");
    ++done;
  }
  t.summary = str(all.size()) + " tori, " + str(done) + " membership instances (" + str(members) + " members)";
}

// 7. Cohomology.
void cohomology(Tally& t) {
  for (std::uint64_t l : {5, 7, 11, 13}) {
    const Field f = make_field(l, 1);
    const auto zl = fixture::group(f, 2, {fixture::ints(f, {{1, 1}, {0, 1}})});
    t.check(zl->order() == l, "transvection group order");
    t.check(h1(trivial_module(zl)).h1_dim == 1, "H1(Z/" + str(l) + ", trivial) != 1");
  }
  t.check(h1(ad0_module(fixture::sl2(7)).module).h1_dim == 0, "H1(SL2(7), ad0) != 0");
  std::size_t coprime = 0;
  for (const auto& [e, g] : corpus()) {
    const auto l = g->characteristic();
    const auto triv = h1_trivial_coeffs(g, l);
    t.check(triv.by_cocycles == triv.by_abelianization, e.spec.label + ": h1_trivial methods disagree");
    if (std::gcd<std::uint64_t>(g->order(), l) != 1) continue;
    ++coprime;
    t.check(h1(natural_module(g)).h1_dim == 0, e.spec.label + ": H1(G, V) != 0");
    t.check(h1(ad0_module(g).module).h1_dim == 0, e.spec.label + ": H1(G, ad0) != 0");
    t.check(h1(trivial_module(g)).h1_dim == 0, e.spec.label + ": H1(G, F) != 0");
  }
  t.summary = str(corpus().size()) + " groups, " + str(coprime) + " of order prime to l";
}

// 8. Negative controls.
void negative(Tally& t) {
  const auto pm = fixture::pm_transvection();
  const auto span = condition_c_span(*pm, 7);
  const auto ann = condition_c_annihilator(*pm, 7);
  const auto dir = condition_c_direct(pm, 7);
  t.check(pm->order() == 14, "pm-transvection order " + str(pm->order()));
  t.check(!span.holds, "by-span holds");
  t.check(span.dim == 1, "dim Z = " + str(span.dim));
  t.check(!ann.holds, "by-annihilator holds");
  t.check(ann.dim == 3, "dim U = " + str(ann.dim));
  t.check(!dir.available || !dir.holds, "by-direct holds");
  const auto pr = adequacy_report(pm, "pm-transvection-l7");
  t.check(!pr.irreducible && !pr.adequate && !pr.condition_c.holds(), "pm-transvection report");

  const Field f5 = make_field(5, 1);
  const auto s3 = fixture::group(f5, 3,
                                 {fixture::ints(f5, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                  fixture::ints(f5, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})});
  const auto r = adequacy_report(s3, "s3-perm-l5");
  t.check(!r.irreducible, "S3 permutation module reported irreducible");
  const auto ones = Subspace::span(f5, 3, {Vec{1, 1, 1}});
  t.check(r.reducibility_witness && *r.reducibility_witness == ones, "S3 witness is not the all-ones line");
  t.check(r.reducibility_witness && is_invariant(natural_module(s3), *r.reducibility_witness),
          "S3 witness not invariant");
  t.summary = "dim Z = " + str(span.dim) + ", S3 witness <(1,1,1)>";
}

// 9. Linear-algebra substrate.
Matrix sample_matrix(std::mt19937_64& rng, const Field& f, std::size_t n) {
  if (rng() % 2 == 0) return oracle::random_matrix(rng, f, n, n);
  Matrix d(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = rng() % std::min<Elem>(3, f.order());
    if (i + 1 < n && rng() % 2 == 0) d(i, i + 1) = 1;
  }
  const auto g = oracle::random_invertible(rng, f, n);
  return g * d * *inverse(g);
}

void substrate(Tally& t) {
  std::mt19937_64 rng(9);
  std::size_t mats = 0, polys = 0;
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const Field f = make_field(p, 1);
    for (int i = 0; i < 50; ++i, ++mats) {
      const std::size_t n = 1 + rng() % 6;
      const auto m = sample_matrix(rng, f, n);
      const auto cp = char_poly(m);
      const auto mp = min_poly(m, rng());
      t.check(eval_poly(cp, m).is_zero(), "Cayley-Hamilton fails");
      t.check(eval_poly(mp, m).is_zero() && (cp % mp).is_zero(), "min_poly does not divide char_poly");

      const auto split = splitting_field_roots(cp);
      const Embedding emb(f, split.field);
      const auto ml = lift(m, emb);
      const auto cpl = map_poly(cp, emb);
      const auto& g = split.field;
      Matrix sum(g, n, n);
      std::vector<Matrix> es;
      for (const auto& root : split.roots) {
        const auto e = eigenprojector(ml, root.value, cpl);
        t.check(e * e == e, "projector not idempotent");
        sum = sum + e;
        es.push_back(e);
      }
      t.check(sum == Matrix::identity(g, n), "projectors do not sum to I");
      for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = 0; b < es.size(); ++b) {
          if (a != b) t.check((es[a] * es[b]).is_zero(), "projectors not orthogonal");
        }
      }
    }
    for (int i = 0; i < 100; ++i, ++polys) {
      std::vector<Elem> c(2 + rng() % 6);
      for (auto& x : c) x = rng() % p;
      if (c.back() == 0) c.back() = 1;
      const Poly q(f, c);
      Poly prod = Poly::constant(f, q.lead());
      for (const auto& fac : factor_poly(q, rng())) {
        std::vector<oracle::i64> ic(fac.poly.coeffs().begin(), fac.poly.coeffs().end());
        t.check(oracle::irreducible_by_trial(ic, static_cast<oracle::i64>(p)), "factor is reducible");
        for (unsigned k = 0; k < fac.multiplicity; ++k) prod = prod * fac.poly;
      }
      t.check(prod == q, "factors do not remultiply to " + q.format());
    }
  }
  t.summary = str(mats) + " matrices, " + str(polys) + " polynomials";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"SL2(F_l) natural module is adequate for l = 7, 11, 13", sl2_suite},
      {"span, annihilator and direct criteria agree", criteria_agree},
      {"groups of order prime to l satisfy Condition (C)", prime_to_l},
      {"tensor images satisfy Condition (C)", tensor_pairs},
      {"truncated exp and log are inverse bijections", exp_log},
      {"bounded characters avoid the image of l - Fr", tori},
      {"cohomology dimensions match independent values", cohomology},
      {"negative controls fail as expected", negative},
      {"linear-algebra substrate identities", substrate},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %zu: %s (%s; %zu checks; %.1f s)\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), t.summary.c_str(), t.checks, secs);
    for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
