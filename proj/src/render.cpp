#include "mckay/render.hpp"

#include <fstream>
#include <sstream>

#include "mckay/basis.hpp"
#include "mckay/clusters.hpp"
#include "mckay/quiver.hpp"
#include "mckay/resolution.hpp"

namespace mckay {
namespace {

using nlohmann::json;

json pair_json(Int m, Int n) { return json::array({m, n}); }
json monomial_json(const Monomial& t) { return pair_json(t.m, t.n); }
json exponent_json(const ExponentVector& w) { return pair_json(w.m, w.n); }

json monomial_list_json(const MonomialSet& s) {
  json out = json::array();
  for (const Monomial& t : s) out.push_back(monomial_json(t));
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

std::string group_tag(const GroupParams& g) {
  return "C(" + std::to_string(g.r()) + "," + std::to_string(g.a()) + ")";
}

std::string relation_str(const DeformationRelation& rel) {
  std::string rhs = coeff_name(rel.coeff);
  if (!(rel.rhs == Monomial{0, 0})) rhs += " " + to_string(rel.rhs);
  return to_string(rel.lhs) + " = " + rhs;
}

}  // namespace

json group_json(const GroupParams& g) {
  return json{{"r", g.r()}, {"a", g.a()}, {"sl2", is_in_sl2(g)}};
}

json basis_json(const GroupParams& g) {
  const MonomialSet basis = g_basis(g);
  const MonomialSet l = l_space(g);
  json doc;
  doc["invariant_generators"] = monomial_list_json(invariant_generators(g));
  doc["b_g"] = monomial_list_json(basis);
  json bml = json::array();
  for (const Monomial& t : basis)
    if (!l.contains(t)) bml.push_back(monomial_json(t));
  doc["b_minus_l"] = bml;
  doc["l_size"] = l.size();
  return doc;
}

json specials_json(const GroupParams& g) {
  const SpecialReport specials = special_reps(g);
  json doc = json::array();
  for (Int i = 1; i < g.r(); ++i) {
    json entry;
    entry["index"] = i;
    if (specials.is_special(CharIndex{i})) {
      entry["special"] = true;
      const auto& [xs, ys] = specials.generator_pairs.at(CharIndex{i});
      entry["pair"] = json::array({monomial_json(xs), monomial_json(ys)});
    } else {
      entry["special"] = false;
      entry["witness"] = monomial_json(specials.nonspecial_witnesses.at(CharIndex{i}));
    }
    doc.push_back(entry);
  }
  return doc;
}

json resolution_json(const GroupParams& g) {
  const HJExpansion hj = hj_expansion(g);
  const ResolutionData res = build_resolution(g);
  const auto boundary = newton_boundary(g);
  json doc;
  doc["hj"] = hj.coeffs;
  doc["denominator"] = g.r();
  json boundary_doc = json::array();
  for (const auto& u : boundary) boundary_doc.push_back(pair_json(u.p, u.q));
  doc["boundary"] = boundary_doc;
  json curves_doc = json::array();
  for (const auto& c : res.curves) {
    json entry;
    entry["ray"] = pair_json(c.ray.p, c.ray.q);
    entry["self_int"] = c.self_intersection;
    entry["rep"] = c.special_rep.value;
    entry["ratio"] = json::array({monomial_json(c.ratio_pair.first), monomial_json(c.ratio_pair.second)});
    curves_doc.push_back(entry);
  }
  doc["curves"] = curves_doc;
  json charts_doc = json::array();
  for (const auto& chart : res.charts) {
    json entry;
    entry["rays"] = json::array({pair_json(chart.ray_x_side.p, chart.ray_x_side.q),
                                 pair_json(chart.ray_y_side.p, chart.ray_y_side.q)});
    entry["dual"] = json::array({exponent_json(chart.alpha), exponent_json(chart.beta)});
    charts_doc.push_back(entry);
  }
  doc["charts"] = charts_doc;
  return doc;
}

json clusters_json(const GroupParams& g) {
  json doc = json::array();
  for (const GCluster& c : enumerate_clusters(g)) {
    const ClusterIdeal ideal = cluster_ideal(g, c);
    json entry;
    entry["columns"] = c.columns;
    entry["ideal"] = monomial_list_json(ideal.generators);
    json cot = json::array();
    for (const CharIndex cc : ideal.cotangent) cot.push_back(cc.value);
    entry["cotangent"] = cot;
    const ChartDeformation def = chart_deformation(g, ideal);
    json rel_doc = json::array();
    for (const auto& rel : def.relations) {
      rel_doc.push_back(json{{"lhs", monomial_json(rel.lhs)},
                             {"coeff", coeff_name(rel.coeff)},
                             {"rhs", monomial_json(rel.rhs)}});
    }
    entry["deformation"] = {{"relations", rel_doc},
                            {"alpha", exponent_json(def.alpha_exponent)},
                            {"beta", exponent_json(def.beta_exponent)}};
    doc.push_back(entry);
  }
  return doc;
}

json quiver_json(const GroupParams& g) {
  json doc;
  doc["a_matrix"] = tensor_matrix(g).entries;
  if (is_in_sl2(g)) {
    const CartanData cartan = cartan_matrix(g);
    doc["cartan"] = cartan.cartan;
    doc["intersection"] = cartan.intersection;
    doc["opposite"] = cartan.opposite;
  }
  return doc;
}

json report_json(const GroupParams& g) {
  const ValidationReport checks = check_group(g);
  json doc;
  doc["group"] = group_json(g);
  doc["basis"] = basis_json(g);
  doc["specials"] = specials_json(g);
  doc["resolution"] = resolution_json(g);
  doc["clusters"] = clusters_json(g);
  doc["quiver"] = quiver_json(g);
  json checks_doc = json::array();
  for (const CheckResult& c : checks.checks)
    checks_doc.push_back(
        json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  doc["checks"] = checks_doc;
  doc["counts"] = {{"specials", checks.counts.specials},
                   {"curves", checks.counts.curves},
                   {"clusters", checks.counts.clusters},
                   {"hj_length", checks.counts.hj_length}};
  return doc;
}

json validation_json(const ValidationReport& rep) {
  json doc;
  doc["group"] = {{"r", rep.group.r()}, {"a", rep.group.a()}, {"sl2", is_in_sl2(rep.group)}};
  json checks_doc = json::array();
  for (const CheckResult& c : rep.checks)
    checks_doc.push_back(
        json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  doc["checks"] = checks_doc;
  doc["counts"] = {{"specials", rep.counts.specials},
                   {"curves", rep.counts.curves},
                   {"clusters", rep.counts.clusters},
                   {"hj_length", rep.counts.hj_length}};
  doc["status"] = rep.all_pass() ? "pass" : "fail";
  return doc;
}

std::string dual_graph_dot(const GroupParams& g) {
  const ResolutionData res = build_resolution(g);
  const ChainGraph graph = dual_graph(res.curves);
  std::ostringstream out;
  out << "graph dual_graph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  out << "  axis_x [shape=plaintext, label=\"" << graph.ends[0] << "\"];\n";
  out << "  axis_y [shape=plaintext, label=\"" << graph.ends[1] << "\"];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    out << "  E" << i + 1 << " [label=\"E" << i + 1 << " (" << graph.nodes[i].self_intersection
        << ") ρ" << graph.nodes[i].rep.value << "\"];\n";
  out << "  axis_x -- E1;\n";
  for (std::size_t i = 0; i + 1 < graph.nodes.size(); ++i)
    out << "  E" << i + 1 << " -- E" << i + 2 << ";\n";
  out << "  E" << graph.nodes.size() << " -- axis_y;\n";
  out << "}\n";
  return out.str();
}

std::string quiver_dot(const GroupParams& g) {
  const QuiverGraph q = quiver_graph(g);
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  layout=circo;\n";
  for (Int i = 0; i < q.node_count; ++i)
    out << "  n" << i << " [label=\"ρ" << i << "\"];\n";
  for (const auto& e : q.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.multiplicity << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string newton_svg(const GroupParams& g) {
  const Int r = g.r();
  const auto boundary = newton_boundary(g);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 " << r + 2 << " " << r + 2
      << "\" width=\"" << 40 * (r + 2) << "\" height=\"" << 40 * (r + 2) << "\">\n";
  // y axis points up: draw at (p, r - q)
  out << "  <line x1=\"0\" y1=\"" << r << "\" x2=\"" << r << "\" y2=\"" << r
      << "\" stroke=\"#999\" stroke-width=\"0.04\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << r << "\" x2=\"0\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.04\"/>\n";
  for (Int p = 0; p <= r; ++p) {
    const Int q = p == 0 ? r : mod_reduce(g.a() * p, r);
    out << "  <circle cx=\"" << p << "\" cy=\"" << r - q << "\" r=\"0.1\" fill=\"#bbb\"/>\n";
  }
  out << "  <polyline points=\"";
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (i > 0) out << " ";
    out << boundary[i].p << "," << r - boundary[i].q;
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.06\"/>\n";
  for (const auto& u : boundary)
    out << "  <circle cx=\"" << u.p << "\" cy=\"" << r - u.q << "\" r=\"0.15\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string clusters_svg(const GroupParams& g) {
  const auto clusters = enumerate_clusters(g);
  Int width = 1;
  Int height = 1;
  for (const GCluster& c : clusters) {
    width += static_cast<Int>(c.columns.size()) + 1;
    height = std::max(height, c.columns.empty() ? Int{0} : c.columns.front() + 2);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
      << "\" width=\"" << 32 * width << "\" height=\"" << 32 * height << "\">\n";
  Int offset = 1;
  for (const GCluster& c : clusters) {
    const Int top = c.columns.empty() ? 0 : c.columns.front();
    for (Int m = 0; m < static_cast<Int>(c.columns.size()); ++m)
      for (Int j = 0; j < c.columns[static_cast<std::size_t>(m)]; ++j) {
        const Int x = offset + m;
        const Int y = top - j;  // one unit of headroom above the diagram
        out << "  <rect x=\"" << x << "\" y=\"" << y
            << "\" width=\"1\" height=\"1\" fill=\"#eee\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
        out << "  <text x=\"" << x << ".5\" y=\"" << y
            << ".7\" font-size=\"0.45\" text-anchor=\"middle\">"
            << mod_reduce(m + g.a() * j, g.r()) << "</text>\n";
      }
    offset += static_cast<Int>(c.columns.size()) + 1;
  }
  out << "</svg>\n";
  return out.str();
}

std::string specials_text(const GroupParams& g) {
  const SpecialReport specials = special_reps(g);
  std::ostringstream out;
  out << group_tag(g) << "  special representations: " << specials.specials.size() << " of "
      << g.r() - 1 << " nontrivial\n";
  for (Int i = 1; i < g.r(); ++i) {
    out << "rho_" << i;
    if (specials.is_special(CharIndex{i})) {
      const auto& [xs, ys] = specials.generator_pairs.at(CharIndex{i});
      out << "  special      module generators " << to_string(xs) << ", " << to_string(ys) << "\n";
    } else {
      out << "  not special  witness " << to_string(specials.nonspecial_witnesses.at(CharIndex{i}))
          << " in B(G)\\L(G)\n";
    }
  }
  return out.str();
}

std::string bg_chart_text(const GroupParams& g) {
  const Int r = g.r();
  const MonomialSet basis = g_basis(g);
  const MonomialSet l = l_space(g);
  Int max_m = 0, max_n = 0;
  for (const Monomial& t : basis) {
    max_m = std::max(max_m, t.m);
    max_n = std::max(max_n, t.n);
  }
  const int w = r > 10 ? 2 : 1;
  std::ostringstream out;
  out << group_tag(g) << "  G-basis with characters; [c] marks B(G)\\L(G)\n";
  for (Int n = max_n; n >= 0; --n) {
    out << "y^" << n << (n > 9 ? " " : "  ") << "|";
    for (Int m = 0; m <= max_m; ++m) {
      const Monomial t{m, n};
      std::string cell;
      if (!basis.contains(t)) {
        cell = ".";
      } else {
        cell = std::to_string(monomial_character(g, m, n).value);
        if (!l.contains(t)) cell = "[" + cell + "]";
      }
      while (static_cast<int>(cell.size()) < w + 2) cell = " " + cell;
      out << cell << " ";
    }
    out << "\n";
  }
  return out.str();
}

std::string resolution_text(const GroupParams& g) {
  const HJExpansion hj = hj_expansion(g);
  const auto boundary = newton_boundary(g);
  const ResolutionData res = build_resolution(g);
  std::ostringstream out;
  out << group_tag(g) << "  minimal resolution\n";
  out << "hj(" << g.r() << "/" << g.a() << ") = [";
  for (std::size_t i = 0; i < hj.coeffs.size(); ++i)
    out << (i ? ", " : "") << hj.coeffs[i];
  out << "]\n";
  out << "newton boundary (/" << g.r() << "):";
  for (const auto& u : boundary) out << " (" << u.p << "," << u.q << ")";
  out << "\n";
  out << "curves:\n";
  for (const auto& c : res.curves)
    out << "  E" << c.index << "  ray (" << c.ray.p << "," << c.ray.q << ")  self-intersection "
        << c.self_intersection << "  rho_" << c.special_rep.value << "  ratio "
        << to_string(c.ratio_pair.first) << " : " << to_string(c.ratio_pair.second) << "\n";
  out << "charts:\n";
  for (const auto& chart : res.charts)
    out << "  chart " << chart.index << "  rays (" << chart.ray_x_side.p << ","
        << chart.ray_x_side.q << "),(" << chart.ray_y_side.p << "," << chart.ray_y_side.q
        << ")  alpha = " << to_string(chart.alpha) << "  beta = " << to_string(chart.beta) << "\n";
  return out.str();
}

std::string clusters_text(const GroupParams& g) {
  const auto clusters = enumerate_clusters(g);
  std::ostringstream out;
  out << group_tag(g) << "  torus-fixed clusters: " << clusters.size() << "\n";
  const int w = g.r() > 10 ? 2 : 1;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const GCluster& c = clusters[k];
    const ClusterIdeal ideal = cluster_ideal(g, c);
    out << "\ncluster " << k + 1 << ": columns [";
    for (std::size_t i = 0; i < c.columns.size(); ++i) out << (i ? ", " : "") << c.columns[i];
    out << "]\n";
    const Int top = c.columns.front();
    for (Int j = top - 1; j >= 0; --j) {
      std::string shape, chars;
      for (std::size_t m = 0; m < c.columns.size(); ++m) {
        if (c.columns[m] > j) {
          shape += "#";
          std::string cc = std::to_string(mod_reduce(static_cast<Int>(m) + g.a() * j, g.r()));
          while (static_cast<int>(cc.size()) < w + 1) cc = " " + cc;
          chars += cc;
        }
      }
      out << "  " << shape;
      for (std::size_t pad = shape.size(); pad < c.columns.size() + 2; ++pad) out << " ";
      out << chars << "\n";
    }
    out << "  ideal: (";
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
      out << (i ? ", " : "") << to_string(ideal.generators.elements()[i]);
    out << ")\n";
    out << "  cotangent characters:";
    for (const CharIndex cc : ideal.cotangent) out << " " << cc.value;
    out << "\n";
    const ChartDeformation def = chart_deformation(g, ideal);
    out << "  deformation: ";
    for (std::size_t i = 0; i < def.relations.size(); ++i)
      out << (i ? ", " : "") << relation_str(def.relations[i]);
    out << "\n";
  }
  return out.str();
}

std::string quiver_text(const GroupParams& g) {
  const TensorMatrix t = tensor_matrix(g);
  std::ostringstream out;
  out << group_tag(g) << "  McKay quiver tensor matrix\n";
  for (const auto& row : t.entries) {
    out << " ";
    for (const Int v : row) out << " " << v;
    out << "\n";
  }
  if (is_in_sl2(g)) {
    const CartanData cartan = cartan_matrix(g);
    out << "cartan (2I - A on nontrivial indices):\n";
    for (const auto& row : cartan.cartan) {
      out << " ";
      for (const Int v : row) out << " " << v;
      out << "\n";
    }
    out << "intersection matrix:\n";
    for (const auto& row : cartan.intersection) {
      out << " ";
      for (const Int v : row) out << " " << v;
      out << "\n";
    }
    out << "intersection = -cartan: " << (cartan.opposite ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string checks_text(const ValidationReport& rep) {
  Int passed = 0;
  for (const CheckResult& c : rep.checks) passed += c.pass ? 1 : 0;
  std::ostringstream out;
  out << group_tag(rep.group) << "  checks: " << passed << " pass, "
      << rep.checks.size() - static_cast<std::size_t>(passed) << " fail\n";
  for (const CheckResult& c : rep.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    for (std::size_t pad = c.name.size(); pad < 26; ++pad) out << " ";
    out << " " << c.detail << "\n";
  }
  return out.str();
}

std::map<std::string, std::string> ReportBundle::files() const {
  std::map<std::string, std::string> all;
  all["report.json"] = json_document;
  for (const auto& [name, body] : dot_documents) all[name] = body;
  for (const auto& [name, body] : svg_documents) all[name] = body;
  for (const auto& [name, body] : text_tables) all[name] = body;
  return all;
}

ReportBundle emit(const GroupParams& g) {
  ReportBundle bundle;
  bundle.json_document = report_json(g).dump(2) + "\n";
  bundle.dot_documents["dual_graph.dot"] = dual_graph_dot(g);
  bundle.dot_documents["quiver.dot"] = quiver_dot(g);
  bundle.svg_documents["newton.svg"] = newton_svg(g);
  bundle.svg_documents["clusters.svg"] = clusters_svg(g);
  bundle.text_tables["specials.txt"] = specials_text(g);
  bundle.text_tables["bg_chart.txt"] = bg_chart_text(g);
  bundle.text_tables["resolution.txt"] = resolution_text(g);
  bundle.text_tables["clusters.txt"] = clusters_text(g);
  bundle.text_tables["quiver.txt"] = quiver_text(g);
  bundle.text_tables["checks.txt"] = checks_text(check_group(g));
  return bundle;
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  for (const auto& [name, body] : bundle.files()) {
    std::ofstream out(dir / name, std::ios::binary);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw IoError("cannot write " + (dir / name).string());
  }
}

}  // namespace mckay
