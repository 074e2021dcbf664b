#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "mckay/basis.hpp"
#include "mckay/clusters.hpp"
#include "mckay/quiver.hpp"
#include "mckay/render.hpp"
#include "mckay/resolution.hpp"
#include "mckay/validate.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

using Pair = std::pair<Int, Int>;

Pair pair_of(const Monomial& t) { return {t.m, t.n}; }
Pair pair_of(const ExponentVector& w) { return {w.m, w.n}; }
Pair pair_of(const NLatticePoint& u) { return {u.p, u.q}; }

std::vector<Pair> pairs_of(const MonomialSet& s) {
  std::vector<Pair> out;
  for (const Monomial& t : s) out.push_back(pair_of(t));
  return out;
}

std::vector<Int> ints_of(const std::vector<CharIndex>& v) {
  std::vector<Int> out;
  for (const CharIndex c : v) out.push_back(c.value);
  return out;
}

const char* coeff_name(DeformationRelation::Coeff c) {
  switch (c) {
    case DeformationRelation::Coeff::Alpha:
      return "alpha";
    case DeformationRelation::Coeff::Beta:
      return "beta";
    case DeformationRelation::Coeff::AlphaBeta:
      return "alpha*beta";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "special representations, toric resolutions, torus-fixed clusters and McKay "
            "quivers of cyclic quotient surface singularities";

  py::register_exception<Error>(m, "Error");

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__repr__", [](const Rational& v) { return v.str(); });

  py::class_<GroupParams>(m, "GroupParams")
      .def(py::init(&make_group), py::arg("r"), py::arg("a"))
      .def_property_readonly("r", &GroupParams::r)
      .def_property_readonly("a", &GroupParams::a)
      .def_property_readonly("sl2", &is_in_sl2)
      .def("__repr__", [](const GroupParams& g) {
        return "GroupParams(r=" + std::to_string(g.r()) + ", a=" + std::to_string(g.a()) + ")";
      });

  m.def("make_group", &make_group, py::arg("r"), py::arg("a"),
        "validate (r, a) and build the group C_{r,a}");
  m.def("is_in_sl2", &is_in_sl2);
  m.def("monomial_weight", &monomial_weight, py::arg("g"), py::arg("m"), py::arg("n"));
  m.def(
      "monomial_character",
      [](const GroupParams& g, Int mm, Int nn) { return monomial_character(g, mm, nn).value; },
      py::arg("g"), py::arg("m"), py::arg("n"));
  m.def(
      "age", [](const GroupParams& g, Int k) { return age(g, make_element(g, k)); }, py::arg("g"),
      py::arg("k"));
  m.def("natural_rep_summands", [](const GroupParams& g) {
    const auto [c1, c2] = natural_rep_summands(g);
    return Pair{c1.value, c2.value};
  });

  m.def("invariant_generators",
        [](const GroupParams& g) { return pairs_of(invariant_generators(g)); });
  m.def("g_basis", [](const GroupParams& g) { return pairs_of(g_basis(g)); });
  m.def("l_space", [](const GroupParams& g) { return pairs_of(l_space(g)); });
  m.def(
      "module_generators",
      [](const GroupParams& g, Int i) { return pairs_of(module_generators(g, char_index(g, i))); },
      py::arg("g"), py::arg("i"));
  m.def(
      "surjectivity_oracle",
      [](const GroupParams& g, Int i) { return surjectivity_oracle(g, CharIndex{i}); },
      py::arg("g"), py::arg("i"));

  py::class_<SpecialReport>(m, "SpecialReport")
      .def_property_readonly("specials",
                             [](const SpecialReport& r) { return ints_of(r.specials); })
      .def_property_readonly("generator_pairs",
                             [](const SpecialReport& r) {
                               std::map<Int, std::pair<Pair, Pair>> out;
                               for (const auto& [i, pr] : r.generator_pairs)
                                 out[i.value] = {pair_of(pr.first), pair_of(pr.second)};
                               return out;
                             })
      .def_property_readonly("nonspecial_witnesses",
                             [](const SpecialReport& r) {
                               std::map<Int, Pair> out;
                               for (const auto& [i, t] : r.nonspecial_witnesses)
                                 out[i.value] = pair_of(t);
                               return out;
                             })
      .def("is_special", [](const SpecialReport& r, Int i) { return r.is_special(CharIndex{i}); });
  m.def("special_reps", &special_reps);

  m.def("hj_expansion", [](const GroupParams& g) { return hj_expansion(g).coeffs; });
  m.def("newton_boundary", [](const GroupParams& g) {
    std::vector<Pair> out;
    for (const auto& u : newton_boundary(g)) out.push_back(pair_of(u));
    return out;
  });
  m.def("self_intersections", [](const GroupParams& g) {
    return self_intersections(newton_boundary(g));
  });

  py::class_<ExceptionalCurve>(m, "ExceptionalCurve")
      .def_readonly("index", &ExceptionalCurve::index)
      .def_property_readonly("ray", [](const ExceptionalCurve& c) { return pair_of(c.ray); })
      .def_readonly("self_intersection", &ExceptionalCurve::self_intersection)
      .def_property_readonly("special_rep",
                             [](const ExceptionalCurve& c) { return c.special_rep.value; })
      .def_property_readonly("ratio_pair", [](const ExceptionalCurve& c) {
        return std::pair<Pair, Pair>{pair_of(c.ratio_pair.first), pair_of(c.ratio_pair.second)};
      });

  py::class_<FanChart>(m, "FanChart")
      .def_readonly("index", &FanChart::index)
      .def_property_readonly("rays",
                             [](const FanChart& c) {
                               return std::pair<Pair, Pair>{pair_of(c.ray_x_side),
                                                            pair_of(c.ray_y_side)};
                             })
      .def_property_readonly("alpha", [](const FanChart& c) { return pair_of(c.alpha); })
      .def_property_readonly("beta", [](const FanChart& c) { return pair_of(c.beta); });

  py::class_<ResolutionData>(m, "ResolutionData")
      .def_readonly("curves", &ResolutionData::curves)
      .def_readonly("charts", &ResolutionData::charts);
  m.def("build_resolution", &build_resolution);
  m.def("dual_graph", [](const GroupParams& g) {
    std::vector<Pair> out;  // (self-intersection, label) per node in chain order
    for (const auto& node : dual_graph(build_resolution(g).curves).nodes)
      out.emplace_back(node.self_intersection, node.rep.value);
    return out;
  });

  py::class_<GCluster>(m, "GCluster")
      .def_readonly("columns", &GCluster::columns)
      .def_property_readonly("chars", [](const GCluster& c) { return ints_of(c.chars); })
      .def("__repr__", [](const GCluster& c) {
        std::string out = "GCluster(columns=[";
        for (std::size_t i = 0; i < c.columns.size(); ++i)
          out += (i ? ", " : "") + std::to_string(c.columns[i]);
        return out + "])";
      });
  m.def("enumerate_clusters", &enumerate_clusters);

  py::class_<ClusterIdeal>(m, "ClusterIdeal")
      .def_property_readonly("generators",
                             [](const ClusterIdeal& ci) { return pairs_of(ci.generators); })
      .def_property_readonly("cotangent",
                             [](const ClusterIdeal& ci) { return ints_of(ci.cotangent); });
  m.def("cluster_ideal", &cluster_ideal);
  m.def("cotangent_decomposition", [](const GroupParams& g, const ClusterIdeal& ci) {
    return ints_of(cotangent_decomposition(g, ci));
  });

  py::class_<ChartDeformation>(m, "ChartDeformation")
      .def_property_readonly("relations",
                             [](const ChartDeformation& d) {
                               std::vector<std::tuple<Pair, std::string, Pair>> out;
                               for (const auto& rel : d.relations)
                                 out.emplace_back(pair_of(rel.lhs), coeff_name(rel.coeff),
                                                  pair_of(rel.rhs));
                               return out;
                             })
      .def_property_readonly("alpha_exponent",
                             [](const ChartDeformation& d) { return pair_of(d.alpha_exponent); })
      .def_property_readonly("beta_exponent",
                             [](const ChartDeformation& d) { return pair_of(d.beta_exponent); });
  m.def("chart_deformation", &chart_deformation);

  py::class_<ReconstructedChain>(m, "ReconstructedChain")
      .def_property_readonly("nodes",
                             [](const ReconstructedChain& c) { return ints_of(c.nodes); })
      .def_property_readonly("edges",
                             [](const ReconstructedChain& c) {
                               std::vector<Pair> out;
                               for (const auto& [u, v] : c.edges) out.emplace_back(u.value, v.value);
                               return out;
                             })
      .def_readonly("end_cluster_indices", &ReconstructedChain::end_cluster_indices);
  m.def("reconstruct_chain", &reconstruct_chain);
  m.def("an_corollary_check", &an_corollary_check);

  m.def("tensor_matrix", [](const GroupParams& g) { return tensor_matrix(g).entries; });
  py::class_<CartanData>(m, "CartanData")
      .def_readonly("cartan", &CartanData::cartan)
      .def_readonly("intersection", &CartanData::intersection)
      .def_readonly("opposite", &CartanData::opposite);
  m.def("cartan_matrix", &cartan_matrix);
  m.def("intersection_matrix", &intersection_matrix);
  m.def("is_negative_definite", &is_negative_definite);
  m.def("quiver_graph", [](const GroupParams& g) {
    std::vector<std::tuple<Int, Int, Int>> out;
    for (const auto& e : quiver_graph(g).edges) out.emplace_back(e.from, e.to, e.multiplicity);
    return out;
  });

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail);
  py::class_<ValidationCounts>(m, "ValidationCounts")
      .def_readonly("specials", &ValidationCounts::specials)
      .def_readonly("curves", &ValidationCounts::curves)
      .def_readonly("clusters", &ValidationCounts::clusters)
      .def_readonly("hj_length", &ValidationCounts::hj_length);
  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("group", &ValidationReport::group)
      .def_readonly("checks", &ValidationReport::checks)
      .def_readonly("counts", &ValidationReport::counts)
      .def("all_pass", &ValidationReport::all_pass);
  m.def("check_group", &check_group);
  m.def("sweep", &sweep, py::arg("r_max"));

  m.def("report_json", [](const GroupParams& g) { return report_json(g).dump(2) + "\n"; });
  m.def("dual_graph_dot", &dual_graph_dot);
  m.def("quiver_dot", &quiver_dot);
  m.def("newton_svg", &newton_svg);
  m.def("clusters_svg", &clusters_svg);
  m.def("specials_text", &specials_text);
  m.def("bg_chart_text", &bg_chart_text);
  m.def("resolution_text", &resolution_text);
  m.def("clusters_text", &clusters_text);
  m.def("quiver_text", &quiver_text);
  m.def(
      "write_report",
      [](const GroupParams& g, const std::string& dir) { write_bundle(emit(g), dir); },
      py::arg("g"), py::arg("dir"), "write the full document bundle for one group");

#ifdef VERSION_INFO
#define MCKAY_STR_(x) #x
#define MCKAY_STR(x) MCKAY_STR_(x)
  m.attr("__version__") = MCKAY_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
