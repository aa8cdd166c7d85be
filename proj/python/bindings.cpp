#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adequacy/adequacy.hpp"
#include "adequacy/expmap.hpp"
#include "adequacy/harness.hpp"
#include "adequacy/weights.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

adq::GModule pick_module(const adq::GroupPtr& g, const std::string& which) {
  if (which == "natural") return adq::natural_module(g);
  if (which == "ad") return adq::ad_module(g);
  if (which == "ad0") return adq::ad0_module(g).module;
  if (which == "trivial") return adq::trivial_module(g);
  throw adq::Error(adq::ErrorCode::InvalidArgument, "unknown module " + which);
}

adq::Matrix from_rows(std::uint64_t p, const Rows& rows) {
  if (!adq::is_prime(p)) throw adq::Error(adq::ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const auto f = adq::make_field(p, 1);
  const std::size_t n = rows.size();
  adq::Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw adq::Error(adq::ErrorCode::NotSquare, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Rows to_rows(const adq::Matrix& m) {
  Rows out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  }
  return out;
}

std::string report(const std::string& text, std::uint64_t seed, std::size_t cap_order, std::size_t cap_unknowns,
                   bool witnesses) {
  const auto spec = adq::parse_spec(text);
  adq::ReportOptions o;
  o.meataxe.seed = seed;
  o.cap_order = cap_order;
  o.cap_unknowns = cap_unknowns;
  py::gil_scoped_release release;
  const auto r = adq::adequacy_report(adq::build_group(spec, cap_order), spec.label, o);
  auto j = adq::report_to_json(r, witnesses);
  if (spec.expected) j["expected-mismatches"] = adq::expected_mismatches(r, *spec.expected);
  return j.dump();
}

std::string closure(const std::string& text, std::size_t cap_order) {
  const auto g = adq::build_group(adq::parse_spec(text), cap_order);
  const auto l = g->characteristic();
  ordered_json j;
  j["order"] = g->order();
  j["semisimple"] = adq::semisimple_indices(*g, l).size();
  j["order-core"] = adq::l_power_core(*g, l, cap_order)->order();
  return j.dump();
}

std::string condition_c(const std::string& text, std::size_t cap_order) {
  const auto g = adq::build_group(adq::parse_spec(text), cap_order);
  const auto v = adq::condition_c(g, g->characteristic());
  ordered_json j;
  j["holds"] = v.holds();
  j["dim-Z"] = v.span.dim;
  j["dim-U"] = v.annihilator.dim;
  j["by-span"] = v.span.holds;
  j["by-annihilator"] = v.annihilator.holds;
  j["by-direct"] = v.direct.available ? ordered_json(v.direct.holds) : ordered_json();
  return j.dump();
}

std::string cohomology(const std::string& text, const std::string& which, std::size_t cap_order,
                       std::size_t cap_unknowns) {
  const auto g = adq::build_group(adq::parse_spec(text), cap_order);
  const auto m = pick_module(g, which);
  const auto c = adq::h1(m, cap_unknowns);
  ordered_json j;
  j["module"] = which;
  j["dim"] = m.dim();
  j["h0"] = adq::h0(m).dim();
  j["z1"] = c.z1_dim;
  j["b1"] = c.b1_dim;
  j["h1"] = c.h1_dim;
  return j.dump();
}

std::string meataxe(const std::string& text, const std::string& which, std::uint64_t seed, std::size_t cap_order) {
  const auto g = adq::build_group(adq::parse_spec(text), cap_order);
  const auto m = pick_module(g, which);
  adq::MeataxeOptions o;
  o.seed = seed;
  const auto v = adq::is_irreducible(m, o);
  ordered_json j;
  j["irreducible"] = v.irreducible;
  j["absolutely-irreducible"] = v.irreducible && adq::is_absolutely_irreducible(m, o);
  if (v.witness) j["witness"] = adq::witness_to_json(which, v.witness->subspace);
  return j.dump();
}

std::string bounded_characters(std::int64_t l, const Rows& frobenius, const Rows& delta, bool half,
                               std::size_t box_cap) {
  adq::TorusData t;
  t.rank = frobenius.size();
  t.frobenius = adq::IntMatrix(t.rank, t.rank);
  for (std::size_t i = 0; i < t.rank; ++i) {
    if (frobenius[i].size() != t.rank) throw adq::Error(adq::ErrorCode::NotSquare, "frobenius is not square");
    for (std::size_t k = 0; k < t.rank; ++k) t.frobenius(i, k) = frobenius[i][k];
  }
  t.cocharacters.assign(delta.begin(), delta.end());
  const auto v = half ? adq::check_half_bound_separation(t, l, box_cap) : adq::check_bounded_characters(t, l, box_cap);
  ordered_json j;
  j["holds"] = v.holds;
  j["box"] = v.box;
  j["region-points"] = v.region_points;
  if (v.counterexample) j["counterexample"] = *v.counterexample;
  if (v.collision_partner) j["collision-partner"] = *v.collision_partner;
  return j.dump();
}

std::vector<std::string> zoo(const std::string& family) {
  std::vector<adq::CorpusEntry> entries;
  if (family == "all") {
    entries = adq::zoo_all();
  } else if (family == "negative") {
    entries = adq::zoo_negative();
  } else if (family == "prime-to-l") {
    for (std::uint64_t l : {5, 7, 11}) {
      for (auto& e : adq::zoo_prime_to_l(l)) entries.push_back(std::move(e));
    }
  } else if (family == "sl2" || family == "sym") {
    for (auto& e : adq::zoo_all()) {
      if (e.constructor == (family == "sl2" ? "sl2" : "sl2-sym")) entries.push_back(std::move(e));
    }
  } else {
    throw adq::Error(adq::ErrorCode::InvalidArgument, "unknown family " + family);
  }
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(adq::serialize_spec(e.spec));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adequacy checks for finite matrix groups over finite fields";

  static PyObject* error = py::exception<adq::Error>(m, "AdequacyError").ptr();
  static PyObject* cap_error = py::exception<adq::Error>(m, "CapError", error).ptr();
  static PyObject* spec_error = py::exception<adq::SpecError>(m, "SpecError", error).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const adq::SpecError& e) {
      py::object inst = py::handle(spec_error)(e.what());
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      inst.attr("kind") = std::string(adq::error_code_name(e.code()));
      PyErr_SetObject(spec_error, inst.ptr());
    } catch (const adq::Error& e) {
      PyObject* type = adq::exit_code_for(e.code()) == 2 ? cap_error : error;
      py::object inst = py::handle(type)(e.what());
      inst.attr("kind") = std::string(adq::error_code_name(e.code()));
      PyErr_SetObject(type, inst.ptr());
    }
  });

  m.attr("DEFAULT_ORDER_CAP") = adq::kDefaultOrderCap;
  m.attr("DEFAULT_UNKNOWN_CAP") = adq::kDefaultUnknownCap;
  m.attr("DEFAULT_BOX_CAP") = adq::kDefaultBoxCap;

  m.def("normalize_spec", [](const std::string& text) { return adq::serialize_spec(adq::parse_spec(text)); });
  m.def("report", &report, py::arg("spec"), py::arg("seed") = 0, py::arg("cap_order") = adq::kDefaultOrderCap,
        py::arg("cap_unknowns") = adq::kDefaultUnknownCap, py::arg("witnesses") = false);
  m.def("closure", &closure, py::arg("spec"), py::arg("cap_order") = adq::kDefaultOrderCap);
  m.def("condition_c", &condition_c, py::arg("spec"), py::arg("cap_order") = adq::kDefaultOrderCap);
  m.def("cohomology", &cohomology, py::arg("spec"), py::arg("module"), py::arg("cap_order") = adq::kDefaultOrderCap,
        py::arg("cap_unknowns") = adq::kDefaultUnknownCap);
  m.def("meataxe", &meataxe, py::arg("spec"), py::arg("module"), py::arg("seed") = 0,
        py::arg("cap_order") = adq::kDefaultOrderCap);
  m.def("tensor_condition_c", [](const std::string& a, const std::string& b, std::size_t cap) {
    return adq::tensor_condition_c(*adq::build_group(adq::parse_spec(a), cap),
                                   *adq::build_group(adq::parse_spec(b), cap), cap);
  }, py::arg("a"), py::arg("b"), py::arg("cap_order") = adq::kDefaultOrderCap);
  m.def("exp_nilpotent", [](std::uint64_t p, const Rows& x) { return to_rows(adq::exp_nilpotent(from_rows(p, x))); },
        py::arg("p"), py::arg("x"));
  m.def("log_unipotent", [](std::uint64_t p, const Rows& u) { return to_rows(adq::log_unipotent(from_rows(p, u))); },
        py::arg("p"), py::arg("u"));
  m.def("bounded_characters", &bounded_characters, py::arg("l"), py::arg("frobenius"), py::arg("delta"),
        py::arg("half") = false, py::arg("box_cap") = adq::kDefaultBoxCap);
  m.def("zoo", &zoo, py::arg("family") = "all");
}
