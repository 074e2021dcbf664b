#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "mckay/resolution.hpp"

using namespace mckay;
using testutil::small_groups;

namespace {

std::vector<NLatticePoint> points(Int r, std::vector<std::pair<Int, Int>> pq) {
  std::vector<NLatticePoint> out;
  for (const auto& [p, q] : pq) out.push_back({p, q, r});
  return out;
}

}  // namespace

TEST_SUITE("resolution") {
  TEST_CASE("hj expansions") {
    CHECK(hj_expansion(make_group(7, 3)).coeffs == std::vector<Int>{3, 2, 2});
    CHECK(hj_expansion(make_group(4, 1)).coeffs == std::vector<Int>{4});
    CHECK(hj_expansion(make_group(5, 2)).coeffs == std::vector<Int>{3, 2});
    for (const Int r : {2, 3, 4, 9})
      CHECK(hj_expansion(make_group(r, r - 1)).coeffs ==
            std::vector<Int>(static_cast<std::size_t>(r - 1), 2));
  }

  TEST_CASE("expansions evaluate back to r/a with every coefficient >= 2") {
    for (const GroupParams& g : small_groups(40)) {
      const HJExpansion e = hj_expansion(g);
      for (const Int b : e.coeffs) CHECK(b >= 2);
      CHECK(evaluate_hj(e) == Rational(g.r(), g.a()));
    }
  }

  TEST_CASE("newton boundary frozen examples") {
    CHECK(newton_boundary(make_group(7, 3)) ==
          points(7, {{7, 0}, {5, 1}, {3, 2}, {1, 3}, {0, 7}}));
    CHECK(newton_boundary(make_group(2, 1)) == points(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(newton_boundary(make_group(4, 1)) == points(4, {{4, 0}, {1, 1}, {0, 4}}));
  }

  TEST_CASE("boundary is the lower hull of the lattice candidates") {
    for (const GroupParams& g : small_groups(18)) {
      const Int r = g.r();
      const auto boundary = newton_boundary(g);

      CHECK(boundary.front() == NLatticePoint{r, 0, r});
      CHECK(boundary.back() == NLatticePoint{0, r, r});
      for (const auto& u : boundary) CHECK(mod_reduce(g.a() * u.p - u.q, r) == 0);

      // every candidate lattice point sits on or above each boundary segment
      std::vector<NLatticePoint> candidates;
      candidates.push_back({0, r, r});
      for (Int p = 1; p <= r; ++p) candidates.push_back({p, mod_reduce(g.a() * p, r), r});
      for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
        const auto& u = boundary[i];
        const auto& v = boundary[i + 1];
        for (const auto& c : candidates) {
          const Int cross = (v.p - u.p) * (c.q - u.q) - (v.q - u.q) * (c.p - u.p);
          CHECK(cross <= 0);
        }
      }

      // interior point count matches the expansion length
      CHECK(boundary.size() == hj_expansion(g).coeffs.size() + 2);
    }
  }

  TEST_CASE("self intersections") {
    CHECK(self_intersections(newton_boundary(make_group(7, 3))) == std::vector<Int>{-2, -2, -3});
    CHECK(self_intersections(newton_boundary(make_group(2, 1))) == std::vector<Int>{-2});
    for (const Int r : {3, 5, 8})
      CHECK(self_intersections(newton_boundary(make_group(r, r - 1))) ==
            std::vector<Int>(static_cast<std::size_t>(r - 1), -2));

    // a point off the hull breaks the three-term relation
    CHECK_THROWS_AS(self_intersections(points(4, {{4, 0}, {3, 1}, {0, 4}})),
                    NonIntegralRelationError);
  }

  TEST_CASE("worked example resolution") {
    const ResolutionData res = build_resolution(make_group(7, 3));
    REQUIRE(res.curves.size() == 3);
    CHECK(res.curves[0].ray == NLatticePoint{5, 1, 7});
    CHECK(res.curves[1].ray == NLatticePoint{3, 2, 7});
    CHECK(res.curves[2].ray == NLatticePoint{1, 3, 7});
    CHECK(res.curves[0].special_rep == CharIndex{1});
    CHECK(res.curves[1].special_rep == CharIndex{2});
    CHECK(res.curves[2].special_rep == CharIndex{3});
    CHECK(res.curves[0].self_intersection == -2);
    CHECK(res.curves[1].self_intersection == -2);
    CHECK(res.curves[2].self_intersection == -3);
    CHECK(res.curves[1].ratio_pair == std::pair{Monomial{2, 0}, Monomial{0, 3}});

    REQUIRE(res.charts.size() == 4);
    CHECK(res.charts[0].alpha == ExponentVector{1, -5});
    CHECK(res.charts[0].beta == ExponentVector{0, 7});
    CHECK(res.charts[1].alpha == ExponentVector{2, -3});
    CHECK(res.charts[1].beta == ExponentVector{-1, 5});
    CHECK(res.charts[2].alpha == ExponentVector{3, -1});
    CHECK(res.charts[2].beta == ExponentVector{-2, 3});
    CHECK(res.charts[3].alpha == ExponentVector{7, 0});
    CHECK(res.charts[3].beta == ExponentVector{-3, 1});
  }

  TEST_CASE("charts are unimodular, dual pairs pair correctly and glue") {
    for (const GroupParams& g : small_groups(20)) {
      const Int r = g.r();
      const ResolutionData res = build_resolution(g);
      const auto boundary = newton_boundary(g);

      for (std::size_t i = 0; i + 1 < boundary.size(); ++i)
        CHECK(boundary[i].p * boundary[i + 1].q - boundary[i].q * boundary[i + 1].p == r);

      for (const FanChart& chart : res.charts) {
        CHECK(pairing_times_r(chart.alpha, chart.ray_x_side) == r);
        CHECK(pairing_times_r(chart.alpha, chart.ray_y_side) == 0);
        CHECK(pairing_times_r(chart.beta, chart.ray_x_side) == 0);
        CHECK(pairing_times_r(chart.beta, chart.ray_y_side) == r);
        // dual lattice membership
        CHECK(mod_reduce(chart.alpha.m + g.a() * chart.alpha.n, r) == 0);
        CHECK(mod_reduce(chart.beta.m + g.a() * chart.beta.n, r) == 0);
      }

      // adjacent charts share one exponent vector up to sign
      for (std::size_t i = 0; i + 1 < res.charts.size(); ++i) {
        CHECK(res.charts[i + 1].beta == ExponentVector{-res.charts[i].alpha.m,
                                                       -res.charts[i].alpha.n});
      }

      // curve labels are the second ray coordinates
      for (const auto& c : res.curves) {
        CHECK(c.special_rep == char_index(g, c.ray.q));
        CHECK(mod_reduce(g.a() * c.ray.p - c.ray.q, r) == 0);
        CHECK(c.self_intersection <= -2);
      }
    }
  }

  TEST_CASE("reversal under inverting a") {
    for (const GroupParams& g : small_groups(25)) {
      HJExpansion reversed = hj_expansion(g);
      std::reverse(reversed.coeffs.begin(), reversed.coeffs.end());
      CHECK(reversed == hj_expansion(make_group(g.r(), mod_inverse(g.a(), g.r()))));
    }
  }

  TEST_CASE("dual graph") {
    const ChainGraph graph = dual_graph(build_resolution(make_group(7, 3)).curves);
    REQUIRE(graph.nodes.size() == 3);
    CHECK(graph.nodes[0] == ChainGraph::Node{-2, CharIndex{1}});
    CHECK(graph.nodes[1] == ChainGraph::Node{-2, CharIndex{2}});
    CHECK(graph.nodes[2] == ChainGraph::Node{-3, CharIndex{3}});
    CHECK(graph.ends[0] == "x-axis");
    CHECK(graph.ends[1] == "y-axis");

    const ChainGraph a1 = dual_graph(build_resolution(make_group(2, 1)).curves);
    REQUIRE(a1.nodes.size() == 1);
    CHECK(a1.nodes[0] == ChainGraph::Node{-2, CharIndex{1}});
  }
}
