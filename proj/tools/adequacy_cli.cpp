// adequacy: batch checker for finite matrix groups over finite fields.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "adequacy/adequacy.hpp"
#include "adequacy/expmap.hpp"
#include "adequacy/harness.hpp"
#include "adequacy/weights.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t cap_order = adq::kDefaultOrderCap;
  std::size_t cap_unknowns = adq::kDefaultUnknownCap;
  bool json = false;
  bool witnesses = false;

  adq::ReportOptions report() const {
    adq::ReportOptions o;
    o.meataxe.seed = seed;
    o.cap_order = cap_order;
    o.cap_unknowns = cap_unknowns;
    return o;
  }
};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

void emit(const Globals& g, const ordered_json& j, const std::string& table) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

Outcome check_file(const std::string& path, const Globals& g) {
  Outcome o;
  try {
    const auto spec = adq::load_spec(path);
    const auto grp = adq::build_group(spec, g.cap_order);
    const auto rep = adq::adequacy_report(grp, spec.label.empty() ? fs::path(path).stem().string() : spec.label,
                                          g.report());
    auto j = adq::report_to_json(rep, g.witnesses);
    std::string table = adq::report_table(rep, g.witnesses);
    if (spec.expected) {
      const auto bad = adq::expected_mismatches(rep, *spec.expected);
      ordered_json arr = bad;
      j["expected-mismatches"] = arr;
      if (!bad.empty()) {
        o.code = 4;
        table += "  EXPECTED VERDICT MISMATCH:";
        for (const auto& b : bad) table += " " + b;
        table += "\n";
      }
    }
    if (!rep.theorem_consistent) o.code = 4;
    o.out = g.json ? j.dump(2) + "\n" : table;
  } catch (const adq::SpecError& e) {
    o.code = 1;
    o.err = path + ": " + e.what() + "\n";
  } catch (const adq::Error& e) {
    o.code = adq::exit_code_for(e.code());
    o.err = path + ": " + e.what() + "\n";
  }
  return o;
}

int run_check(const std::string& file, const std::string& dir, const Globals& g) {
  std::vector<std::string> paths;
  if (!dir.empty()) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path().string());
    }
    std::sort(paths.begin(), paths.end());
  } else {
    paths.push_back(file);
  }
  std::vector<std::future<Outcome>> jobs;
  for (const auto& p : paths) jobs.push_back(std::async(std::launch::async, check_file, p, g));
  int code = 0;
  for (auto& j : jobs) {
    const auto o = j.get();
    std::cout << o.out;
    std::cerr << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

adq::GModule pick_module(const adq::GroupPtr& grp, const std::string& which) {
  if (which == "natural") return adq::natural_module(grp);
  if (which == "ad") return adq::ad_module(grp);
  if (which == "ad0") return adq::ad0_module(grp).module;
  if (which == "trivial") return adq::trivial_module(grp);
  throw adq::Error(adq::ErrorCode::InvalidArgument, "unknown module " + which);
}

int run_spanss(const std::string& file, const Globals& g) {
  const auto spec = adq::load_spec(file);
  const auto grp = adq::build_group(spec, g.cap_order);
  const auto l = grp->characteristic();
  const auto span = adq::condition_c_span(*grp, l);
  const auto ann = adq::condition_c_annihilator(*grp, l);
  const auto ss = adq::semisimple_indices(*grp, l);
  ordered_json j;
  j["label"] = spec.label;
  j["semisimple-elements"] = ss.size();
  j["dim-Z"] = span.dim;
  j["dim-U"] = ann.dim;
  j["n-squared"] = grp->dim() * grp->dim();
  j["spans"] = span.holds;
  if (g.witnesses && ann.dim > 0) j["annihilator"] = adq::witness_to_json("ad V", ann.u);
  std::ostringstream t;
  t << spec.label << ": |G^ss| = " << ss.size() << ", dim Z = " << span.dim << ", dim U = " << ann.dim
    << ", n^2 = " << grp->dim() * grp->dim() << ", spans ad V: " << (span.holds ? "yes" : "no") << "\n";
  if (g.witnesses && ann.dim > 0) t << "  annihilator basis: " << ann.u.basis().format() << "\n";
  emit(g, j, t.str());
  return 0;
}

int run_cohomology(const std::string& file, const std::string& which, const Globals& g) {
  const auto spec = adq::load_spec(file);
  const auto grp = adq::build_group(spec, g.cap_order);
  const auto m = pick_module(grp, which);
  const auto fixed = adq::h0(m);
  const auto c = adq::h1(m, g.cap_unknowns);
  ordered_json j;
  j["label"] = spec.label;
  j["module"] = which;
  j["dim"] = m.dim();
  j["h0"] = fixed.dim();
  j["z1"] = c.z1_dim;
  j["b1"] = c.b1_dim;
  j["h1"] = c.h1_dim;
  std::ostringstream t;
  t << spec.label << " on " << which << " (dim " << m.dim() << "): h0 = " << fixed.dim() << ", z1 = " << c.z1_dim
    << ", b1 = " << c.b1_dim << ", h1 = " << c.h1_dim << "\n";
  if (which == "trivial") {
    const auto tr = adq::h1_trivial_coeffs(grp, grp->characteristic(), g.cap_unknowns);
    j["abelian-invariants"] = adq::abelian_invariants(*grp);
    j["h1-by-abelianization"] = tr.by_abelianization;
    t << "  abelianization gives h1 = " << tr.by_abelianization << "\n";
  }
  emit(g, j, t.str());
  return 0;
}

int run_closure(const std::string& file, const Globals& g) {
  const auto spec = adq::load_spec(file);
  const auto grp = adq::build_group(spec, g.cap_order);
  const auto l = grp->characteristic();
  const auto core = adq::l_power_core(*grp, l, g.cap_order);
  std::map<std::uint64_t, std::size_t> orders;
  for (std::size_t i = 0; i < grp->order(); ++i) ++orders[grp->element_order(i)];
  ordered_json j;
  j["label"] = spec.label;
  j["order"] = grp->order();
  j["semisimple"] = adq::semisimple_indices(*grp, l).size();
  j["order-core"] = core->order();
  ordered_json hist = ordered_json::object();
  for (const auto& [k, v] : orders) hist[std::to_string(k)] = v;
  j["element-orders"] = hist;
  std::ostringstream t;
  t << spec.label << ": |G| = " << grp->order() << ", |G^ss| = " << j["semisimple"].get<std::size_t>()
    << ", |G0| = " << core->order() << "\n  element orders:";
  for (const auto& [k, v] : orders) t << " " << k << "^" << v;
  t << "\n";
  emit(g, j, t.str());
  return 0;
}

int run_meataxe(const std::string& file, const std::string& which, const Globals& g) {
  const auto spec = adq::load_spec(file);
  const auto grp = adq::build_group(spec, g.cap_order);
  const auto m = pick_module(grp, which);
  adq::MeataxeOptions opts;
  opts.seed = g.seed;
  const auto v = adq::is_irreducible(m, opts);
  ordered_json j;
  j["label"] = spec.label;
  j["module"] = which;
  j["dim"] = m.dim();
  j["irreducible"] = v.irreducible;
  j["absolutely-irreducible"] = v.irreducible && adq::is_absolutely_irreducible(m, opts);
  std::ostringstream t;
  t << spec.label << " " << which << " (dim " << m.dim() << "): " << (v.irreducible ? "irreducible" : "reducible");
  if (v.irreducible) t << (j["absolutely-irreducible"].get<bool>() ? ", absolutely" : ", not absolutely");
  t << "\n";
  if (v.witness) {
    j["witness"] = adq::witness_to_json(which, v.witness->subspace);
    t << "  invariant subspace: " << v.witness->subspace.basis().format() << "\n";
  }
  ordered_json dims = ordered_json::array();
  for (const auto& c : adq::composition_factors(m, opts)) dims.push_back(c.dim());
  j["composition-factor-dims"] = dims;
  t << "  composition factor dims: " << dims.dump() << "\n";
  emit(g, j, t.str());
  return 0;
}

int run_expmap(std::uint64_t p, std::size_t n, const Globals& g) {
  if (!adq::is_prime(p)) throw adq::Error(adq::ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n > p) throw adq::Error(adq::ErrorCode::InvalidArgument, "dim must be at most p");
  const auto f = adq::make_field(p, 1);
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<adq::Elem> pick(0, p - 1);
  adq::Matrix upper(f, n, n), conj(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = pick(rng);
  }
  std::optional<adq::Matrix> inv;
  while (!inv) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) conj(i, j) = pick(rng);
    }
    inv = adq::inverse(conj);
  }
  const auto x = conj * upper * *inv;
  const auto e = adq::exp_nilpotent(x);
  const auto back = adq::log_unipotent(e);
  const bool ok = back == x && adq::exp_nilpotent(back) == e;
  ordered_json j;
  j["p"] = p;
  j["dim"] = n;
  j["seed"] = g.seed;
  j["X"] = adq::matrix_to_json(x);
  j["exp X"] = adq::matrix_to_json(e);
  j["log exp X"] = adq::matrix_to_json(back);
  j["roundtrip"] = ok;
  std::ostringstream t;
  t << "X         = " << x.format() << "\nexp X     = " << e.format() << "\nlog exp X = " << back.format()
    << "\nroundtrip: " << (ok ? "ok" : "FAILED") << "\n";
  emit(g, j, t.str());
  return ok ? 0 : 3;
}

int run_weights(std::int64_t l, std::size_t r, const std::vector<std::int64_t>& fr,
                const std::vector<std::int64_t>& delta, bool half, const Globals& g) {
  if (fr.size() != r * r) throw adq::Error(adq::ErrorCode::InvalidArgument, "--frobenius needs rank^2 integers");
  if (r == 0 || delta.size() % r != 0) {
    throw adq::Error(adq::ErrorCode::InvalidArgument, "--delta needs a multiple of rank integers");
  }
  adq::TorusData t;
  t.rank = r;
  t.frobenius = adq::IntMatrix(r, r);
  for (std::size_t i = 0; i < r * r; ++i) t.frobenius(i / r, i % r) = fr[i];
  for (std::size_t i = 0; i < delta.size(); i += r) t.cocharacters.emplace_back(delta.begin() + i, delta.begin() + i + r);
  const auto v = half ? adq::check_half_bound_separation(t, l, adq::kDefaultBoxCap)
                      : adq::check_bounded_characters(t, l, adq::kDefaultBoxCap);
  ordered_json j;
  j["l"] = l;
  j["rank"] = r;
  j["check"] = half ? "half-bound separation" : "bounded characters";
  j["pairing"] = "standard dot product in dual bases";
  j["box"] = v.box;
  j["region-points"] = v.region_points;
  j["holds"] = v.holds;
  if (v.counterexample) j["counterexample"] = *v.counterexample;
  if (v.collision_partner) j["collision-partner"] = *v.collision_partner;
  std::ostringstream s;
  s << (half ? "half-bound separation" : "bounded characters") << " for l = " << l << ", rank " << r
    << " (pairing: standard dot product)\n  box half-widths " << ordered_json(v.box).dump() << ", "
    << v.region_points << " points in region\n  " << (v.holds ? "holds" : "FAILS");
  if (v.counterexample) s << ": " << ordered_json(*v.counterexample).dump();
  if (v.collision_partner) s << " ~ " << ordered_json(*v.collision_partner).dump();
  s << "\n";
  emit(g, j, s.str());
  return v.holds ? 0 : 4;
}

int run_zoo(const std::string& out, const std::string& family, const Globals& g) {
  std::vector<adq::CorpusEntry> entries;
  if (family == "all") {
    entries = adq::zoo_all();
  } else if (family == "negative") {
    entries = adq::zoo_negative();
  } else if (family == "prime-to-l") {
    for (std::uint64_t l : {5, 7, 11}) {
      for (auto& e : adq::zoo_prime_to_l(l)) entries.push_back(std::move(e));
    }
  } else {
    for (auto& e : adq::zoo_all()) {
      if (e.constructor == (family == "sl2" ? "sl2" : "sl2-sym")) entries.push_back(std::move(e));
    }
  }
  fs::create_directories(out);
  ordered_json j = ordered_json::array();
  for (const auto& e : entries) {
    const auto path = fs::path(out) / (e.spec.label + ".json");
    std::ofstream(path) << adq::serialize_spec(e.spec);
    j.push_back({{"label", e.spec.label}, {"constructor", e.constructor}, {"note", e.note}, {"path", path.string()}});
  }
  std::ostringstream t;
  for (const auto& e : entries) t << e.spec.label << "  (" << e.constructor << "; " << e.note << ")\n";
  t << entries.size() << " spec files written to " << out << "\n";
  emit(g, j, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adequacy checks for finite matrix groups over finite fields"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized algorithms");
  app.add_option("--cap-order", g.cap_order, "Largest group order to enumerate");
  app.add_option("--cap-unknowns", g.cap_unknowns, "Largest |G| * dim for cocycle systems");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--verbose-witnesses", g.witnesses, "Include witnesses in reports");

  std::string file, dir, module = "ad0", mx_module = "natural", out, family = "all";
  auto* check = app.add_subcommand("check", "Full adequacy report for a spec file or directory");
  auto* check_file_opt = check->add_option("file", file, "Group spec file");
  check->add_option("--dir", dir, "Check every .json spec in a directory")->excludes(check_file_opt);
  auto* spanss = app.add_subcommand("spanss", "Span of the semisimple elements in ad V");
  spanss->add_option("file", file)->required();
  auto* coh = app.add_subcommand("cohomology", "H^0 and H^1 of a module");
  coh->add_option("file", file)->required();
  coh->add_option("--module", module, "natural, ad, ad0 or trivial")->check(CLI::IsMember({"natural", "ad", "ad0", "trivial"}));
  auto* clo = app.add_subcommand("closure", "Enumerate the group");
  clo->add_option("file", file)->required();
  auto* mx = app.add_subcommand("meataxe", "Irreducibility test");
  mx->add_option("file", file)->required();
  mx->add_option("--module", mx_module, "natural, ad, ad0 or trivial")->check(CLI::IsMember({"natural", "ad", "ad0", "trivial"}));
  std::uint64_t p = 5;
  std::size_t n = 3;
  auto* ex = app.add_subcommand("expmap", "exp/log roundtrip on a random nilpotent matrix");
  ex->add_option("--p", p, "Characteristic")->required();
  ex->add_option("--dim", n, "Matrix size (at most p)");
  auto* wt = app.add_subcommand("weights", "Character-lattice checks");
  auto* bounded = wt->add_subcommand("bounded", "No nonzero bounded character is trivial on T(F_l)");
  wt->require_subcommand(1);
  std::int64_t l = 5;
  std::size_t rank = 1;
  std::vector<std::int64_t> fr, delta;
  bool half = false;
  bounded->add_option("--l", l)->required();
  bounded->add_option("--rank", rank)->required();
  bounded->add_option("--frobenius", fr, "rank*rank integers, row-major")->required();
  bounded->add_option("--delta", delta, "Cocharacters, rank integers each")->required();
  bounded->add_flag("--half", half, "Check separation under the half bound instead");
  auto* zoo = app.add_subcommand("zoo", "Write corpus spec files");
  zoo->add_option("--out", out, "Target directory")->required();
  zoo->add_option("--family", family)->check(CLI::IsMember({"all", "sl2", "sym", "prime-to-l", "negative"}));
  app.fallthrough();
  for (auto* sub : {check, spanss, coh, clo, mx, ex, wt, bounded, zoo}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*check) {
      if (file.empty() && dir.empty()) throw CLI::RequiredError("file or --dir");
      return run_check(file, dir, g);
    }
    if (*spanss) return run_spanss(file, g);
    if (*coh) return run_cohomology(file, module, g);
    if (*clo) return run_closure(file, g);
    if (*mx) return run_meataxe(file, mx_module, g);
    if (*ex) return run_expmap(p, n, g);
    if (*bounded) return run_weights(l, rank, fr, delta, half, g);
    if (*zoo) return run_zoo(out, family, g);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const adq::SpecError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 1;
  } catch (const adq::Error& e) {
    std::cerr << e.what() << "\n";
    return adq::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
