#include "mckay/validate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "mckay/basis.hpp"
#include "mckay/clusters.hpp"
#include "mckay/quiver.hpp"
#include "mckay/resolution.hpp"

namespace mckay {
namespace {

std::string join_counts(std::initializer_list<std::pair<const char*, Int>> items) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : items) {
    if (!first) out << " ";
    out << name << "=" << value;
    first = false;
  }
  return out.str();
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidationReport check_group(const GroupParams& g) {
  ValidationReport report(g);
  const auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  };

  const Int r = g.r();
  const bool sl2 = is_in_sl2(g);

  // Monomial side.
  const SpecialReport specials = special_reps(g);
  const MonomialSet basis = g_basis(g);
  const MonomialSet l = l_space(g);
  const HJExpansion hj = hj_expansion(g);

  // Geometric side; hull failures are recorded, not thrown.
  std::optional<ResolutionData> res;
  std::vector<NLatticePoint> boundary;
  std::string geometry_error;
  try {
    boundary = newton_boundary(g);
    res = build_resolution(g);
  } catch (const Error& e) {
    geometry_error = e.what();
  }

  // Cluster side.
  std::vector<GCluster> clusters;
  std::string cluster_error;
  try {
    clusters = enumerate_clusters(g);
  } catch (const Error& e) {
    cluster_error = e.what();
  }
  std::vector<ClusterIdeal> ideals;
  for (const GCluster& c : clusters) ideals.push_back(cluster_ideal(g, c));

  report.counts.specials = static_cast<Int>(specials.specials.size());
  report.counts.hj_length = static_cast<Int>(hj.coeffs.size());
  report.counts.curves = res ? static_cast<Int>(res->curves.size()) : 0;
  report.counts.clusters = static_cast<Int>(clusters.size());

  // fallback message for checks that need both sides
  std::string side_error = cluster_error;
  if (side_error.empty()) side_error = geometry_error;
  if (side_error.empty()) side_error = "cluster/chart count mismatch";

  // (a) one count through four routes
  if (res) {
    const Int interior = static_cast<Int>(boundary.size()) - 2;
    const bool ok = report.counts.specials == report.counts.hj_length &&
                    report.counts.hj_length == report.counts.curves &&
                    report.counts.curves == interior;
    add("wunram_count", ok,
        join_counts({{"specials", report.counts.specials},
                     {"hj", report.counts.hj_length},
                     {"curves", report.counts.curves},
                     {"interior", interior}}));
  } else {
    add("wunram_count", false, geometry_error);
  }

  // curve labels biject onto the special characters
  if (res) {
    std::set<Int> labels;
    for (const auto& c : res->curves) labels.insert(c.special_rep.value);
    std::set<Int> special_set;
    for (const CharIndex c : specials.specials) special_set.insert(c.value);
    const bool ok = labels.size() == res->curves.size() && labels == special_set;
    add("curve_labels", ok, ok ? "labels match the special set" : "label/special mismatch");
  } else {
    add("curve_labels", false, geometry_error);
  }

  // (b) three speciality criteria agree for every nontrivial character
  {
    bool ok = true;
    std::string detail = "all characters agree";
    for (Int i = 1; i < r && ok; ++i) {
      const bool by_bl = specials.is_special(CharIndex{i});
      const bool by_count = module_generators(g, CharIndex{i}).size() == 2;
      const bool by_oracle = surjectivity_oracle(g, CharIndex{i});
      if (by_bl != by_count || by_count != by_oracle) {
        ok = false;
        detail = "mismatch at character " + std::to_string(i);
      }
    }
    add("triple_criterion", ok, detail);
  }

  // (c) fixed points = charts
  if (res && cluster_error.empty()) {
    const bool ok = clusters.size() == res->curves.size() + 1;
    add("cluster_count", ok,
        join_counts({{"clusters", report.counts.clusters}, {"curves", report.counts.curves}}));
  } else {
    add("cluster_count", false, cluster_error.empty() ? geometry_error : cluster_error);
  }

  // (d) every cluster carries the regular representation; recomputed from
  // the column heights rather than trusting the stored characters
  {
    bool ok = cluster_error.empty();
    std::string detail = cluster_error.empty() ? "all clusters regular" : cluster_error;
    for (const GCluster& c : clusters) {
      std::vector<Int> counts(static_cast<std::size_t>(r), 0);
      std::vector<CharIndex> recomputed;
      for (Int m = 0; m < static_cast<Int>(c.columns.size()); ++m)
        for (Int j = 0; j < c.columns[static_cast<std::size_t>(m)]; ++j) {
          const CharIndex cc = monomial_character(g, m, j);
          counts[static_cast<std::size_t>(cc.value)] += 1;
          recomputed.push_back(cc);
        }
      const bool regular =
          std::all_of(counts.begin(), counts.end(), [](Int k) { return k == 1; }) &&
          recomputed == c.chars;
      if (!regular) {
        ok = false;
        detail = "cluster with columns of size " + std::to_string(c.columns.size()) +
                 " is not the regular representation";
        break;
      }
    }
    add("regular_representation", ok, detail);
  }

  // (e) cotangent characters: one trivial, the rest special, chain shape
  {
    bool ok = cluster_error.empty();
    std::string detail = cluster_error.empty() ? "cotangent data consistent" : cluster_error;
    Int single = 0, dbl = 0;
    for (std::size_t i = 0; i < ideals.size() && ok; ++i) {
      try {
        const auto chars = cotangent_decomposition(g, ideals[i]);
        const auto nontrivial = static_cast<Int>(
            std::count_if(chars.begin(), chars.end(), [](CharIndex c) { return c.value != 0; }));
        if (nontrivial == 1)
          ++single;
        else if (nontrivial == 2)
          ++dbl;
        else {
          ok = false;
          detail = "cluster " + std::to_string(i) + " touches " + std::to_string(nontrivial) +
                   " curves";
        }
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    if (ok && !(single == 2 && dbl == static_cast<Int>(ideals.size()) - 2)) {
      ok = false;
      detail = join_counts({{"single", single}, {"double", dbl}});
    }
    add("cotangent_special", ok, detail);
  }

  // (f) chain from cluster data alone equals the toric dual graph
  if (res && cluster_error.empty()) {
    try {
      const ReconstructedChain chain = reconstruct_chain(g, clusters);
      const ChainGraph graph = dual_graph(res->curves);
      bool ok = chain.nodes.size() == graph.nodes.size();
      for (std::size_t i = 0; ok && i < chain.nodes.size(); ++i)
        ok = chain.nodes[i] == graph.nodes[i].rep;
      add("chain_agreement", ok,
          ok ? "cluster chain matches the toric chain" : "chain label sequences differ");
    } catch (const Error& e) {
      add("chain_agreement", false, e.what());
    }
  } else {
    add("chain_agreement", false, side_error);
  }

  // (g) cluster deformations reproduce the fan charts
  if (res && cluster_error.empty() && clusters.size() == res->charts.size()) {
    bool ok = true;
    std::string detail = "deformations match the charts";
    for (std::size_t i = 0; i < clusters.size() && ok; ++i) {
      try {
        const ChartDeformation def = chart_deformation(g, ideals[i]);
        const FanChart& chart = res->charts[i];
        const std::set<std::pair<Int, Int>> got{{def.alpha_exponent.m, def.alpha_exponent.n},
                                                {def.beta_exponent.m, def.beta_exponent.n}};
        const std::set<std::pair<Int, Int>> want{{chart.alpha.m, chart.alpha.n},
                                                 {chart.beta.m, chart.beta.n}};
        if (got != want) {
          ok = false;
          detail = "chart " + std::to_string(i) + " dual pair differs";
        }
        // the chart's interior-ray labels are the cluster's curve set
        std::set<Int> labels;
        if (i > 0) labels.insert(mod_reduce(chart.ray_x_side.q, r));
        if (i + 1 < clusters.size()) labels.insert(mod_reduce(chart.ray_y_side.q, r));
        std::set<Int> touched;
        for (const CharIndex c : ideals[i].cotangent)
          if (c.value != 0) touched.insert(c.value);
        if (ok && labels != touched) {
          ok = false;
          detail = "chart " + std::to_string(i) + " labels differ from cluster cotangent";
        }
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    add("chart_agreement", ok, detail);
  } else {
    add("chart_agreement", false, side_error);
  }

  // (h) smoothness of every cone
  if (res) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < boundary.size() && ok; ++i)
      ok = boundary[i].p * boundary[i + 1].q - boundary[i].q * boundary[i + 1].p == r;
    add("unimodular_cones", ok, ok ? "all consecutive determinants equal r" : "non-unimodular cone");
  } else {
    add("unimodular_cones", false, geometry_error);
  }

  // alpha = beta = 0 degenerates every deformation back to its ideal
  {
    bool ok = cluster_error.empty();
    std::string detail = cluster_error.empty() ? "all deformations degenerate to their ideals"
                                               : cluster_error;
    for (std::size_t i = 0; i < ideals.size() && ok; ++i) {
      try {
        const ChartDeformation def = chart_deformation(g, ideals[i]);
        std::vector<Monomial> lhs;
        for (const auto& rel : def.relations) lhs.push_back(rel.lhs);
        if (!(divisibility_minimal(lhs) == ideals[i].generators)) {
          ok = false;
          detail = "cluster " + std::to_string(i) + " degeneration differs from its ideal";
        }
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    add("deformation_degeneration", ok, detail);
  }

  // (i) three equivalent descriptions of the SL(2) case
  {
    const bool b_eq_l = basis == l;
    const bool all_special = static_cast<Int>(specials.specials.size()) == r - 1;
    const bool ok = b_eq_l == sl2 && sl2 == all_special;
    add("sl2_equivalences", ok,
        join_counts({{"b_eq_l", b_eq_l}, {"sl2", sl2}, {"all_special", all_special}}));
  }

  // reversal under a -> a^{-1}
  {
    HJExpansion reversed = hj;
    std::reverse(reversed.coeffs.begin(), reversed.coeffs.end());
    const HJExpansion inverse = hj_expansion(make_group(r, mod_inverse(g.a(), r)));
    add("hj_reversal", reversed == inverse,
        reversed == inverse ? "expansion reverses under inverting a" : "reversal identity fails");
  }

  // tensor rows and columns sum to the dimension; symmetry detects SL(2)
  {
    const TensorMatrix t = tensor_matrix(g);
    bool sums = true;
    for (Int i = 0; i < r && sums; ++i) {
      Int row = 0, col = 0;
      for (Int j = 0; j < r; ++j) {
        row += t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        col += t.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      sums = row == 2 && col == 2;
    }
    const bool ok = sums && is_symmetric(t) == sl2;
    add("tensor_matrix", ok, ok ? "row/column sums 2, symmetry iff SL(2)" : "tensor identity fails");
  }

  // intersection form is negative definite
  if (res) {
    const bool ok = is_negative_definite(intersection_matrix(g));
    add("negative_definite", ok,
        ok ? "all leading minors of the negated form positive" : "form is not negative definite");
  } else {
    add("negative_definite", false, geometry_error);
  }

  // (j) SL(2) only: the quiver recovers the intersection form, and the
  // clusters are the hook diagrams
  if (sl2) {
    try {
      const CartanData cartan = cartan_matrix(g);
      add("cartan_opposition", cartan.opposite,
          cartan.opposite ? "intersection = -Cartan" : "matrices differ");
    } catch (const Error& e) {
      add("cartan_opposition", false, e.what());
    }
    try {
      const bool ok = an_corollary_check(g);
      add("an_corollary", ok, ok ? "hook-shaped clusters with ideals (x^k, y^{r-k+1}, xy)" : "cluster family differs");
    } catch (const Error& e) {
      add("an_corollary", false, e.what());
    }
  } else {
    add("cartan_opposition", true, "not applicable outside SL(2)");
    add("an_corollary", true, "not applicable outside SL(2)");
  }

  return report;
}

std::vector<ValidationReport> sweep(Int r_max) {
  if (r_max < 2) throw Error("sweep needs r_max >= 2");
  std::vector<ValidationReport> reports;
  for (Int r = 2; r <= r_max; ++r)
    for (Int a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      reports.push_back(check_group(make_group(r, a)));
    }
  return reports;
}

}  // namespace mckay
