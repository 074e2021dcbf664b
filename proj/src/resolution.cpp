#include "mckay/resolution.hpp"

#include <array>
#include <string>

namespace mckay {
namespace {

std::string point_str(Int p, Int q) {
  return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

}  // namespace

HJExpansion hj_expansion(const GroupParams& g) {
  HJExpansion e;
  Int num = g.r(), den = g.a();
  while (den > 0) {
    const Int b = (num + den - 1) / den;  // ceil(num/den)
    e.coeffs.push_back(b);
    const Int next = b * den - num;
    num = den;
    den = next;
  }
  if (!(evaluate_hj(e) == Rational(g.r(), g.a())))
    throw Error("continued fraction expansion failed to evaluate back to r/a");
  return e;
}

Rational evaluate_hj(const HJExpansion& e) {
  if (e.coeffs.empty()) throw Error("empty continued fraction");
  Rational value(e.coeffs.back());
  for (auto it = std::next(e.coeffs.rbegin()); it != e.coeffs.rend(); ++it)
    value = Rational(*it) - value.reciprocal();
  return value;
}

std::vector<NLatticePoint> newton_boundary(const GroupParams& g) {
  const Int r = g.r(), a = g.a();

  // The lowest lattice point above each p: q = a*p mod r, except that the
  // p = 0 column contributes (0, r).  Everything on the boundary lies in
  // this list because boundary points minimize q for their p.
  std::vector<std::array<Int, 2>> pts;
  pts.push_back({0, r});
  for (Int p = 1; p <= r; ++p) pts.push_back({p, mod_reduce(a * p, r)});

  // Lower-left convex chain; collinear lattice points stay on the chain.
  std::vector<std::array<Int, 2>> chain;
  for (const auto& pt : pts) {
    while (chain.size() >= 2) {
      const auto& u = chain[chain.size() - 2];
      const auto& v = chain[chain.size() - 1];
      const Int cross =
          (v[0] - u[0]) * (pt[1] - v[1]) - (v[1] - u[1]) * (pt[0] - v[0]);
      if (cross < 0)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(pt);
  }

  std::vector<NLatticePoint> boundary;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    boundary.push_back(NLatticePoint{(*it)[0], (*it)[1], r});
  return boundary;
}

std::vector<Int> self_intersections(const std::vector<NLatticePoint>& boundary) {
  std::vector<Int> result;
  for (std::size_t i = 1; i + 1 < boundary.size(); ++i) {
    const auto& prev = boundary[i - 1];
    const auto& cur = boundary[i];
    const auto& next = boundary[i + 1];
    const Int sp = prev.p + next.p;
    const Int sq = prev.q + next.q;
    if (cur.p <= 0 || sp % cur.p != 0)
      throw NonIntegralRelationError("boundary relation fails at " + point_str(cur.p, cur.q));
    const Int b = sp / cur.p;
    if (b * cur.q != sq || b < 2)
      throw NonIntegralRelationError("boundary relation fails at " + point_str(cur.p, cur.q) +
                                     ": u_{i-1} + u_{i+1} = " + point_str(sp, sq));
    result.push_back(-b);
  }
  return result;
}

Int pairing_times_r(const ExponentVector& w, const NLatticePoint& u) {
  return w.m * u.p + w.n * u.q;
}

ResolutionData build_resolution(const GroupParams& g) {
  const Int r = g.r();
  const auto boundary = newton_boundary(g);
  const auto selfint = self_intersections(boundary);

  ResolutionData data;
  for (std::size_t i = 1; i + 1 < boundary.size(); ++i) {
    const auto& ray = boundary[i];
    ExceptionalCurve curve;
    curve.index = static_cast<Int>(i);
    curve.ray = ray;
    curve.self_intersection = selfint[i - 1];
    curve.special_rep = char_index(g, ray.q);
    curve.ratio_pair = {Monomial{ray.q, 0}, Monomial{0, ray.p}};
    data.curves.push_back(curve);
  }

  for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
    const auto& u = boundary[i];
    const auto& v = boundary[i + 1];
    const Int det = u.p * v.q - u.q * v.p;
    if (det != r)
      throw NonIntegralRelationError("cone " + point_str(u.p, u.q) + ", " + point_str(v.p, v.q) +
                                     " is not unimodular: det = " + std::to_string(det));
    FanChart chart;
    chart.index = static_cast<Int>(i);
    chart.ray_x_side = u;
    chart.ray_y_side = v;
    chart.alpha = ExponentVector{v.q, -v.p};
    chart.beta = ExponentVector{-u.q, u.p};
    // dual-basis pairings, exact
    if (pairing_times_r(chart.alpha, u) != r || pairing_times_r(chart.alpha, v) != 0 ||
        pairing_times_r(chart.beta, u) != 0 || pairing_times_r(chart.beta, v) != r)
      throw NonIntegralRelationError("dual pair fails pairing conditions on chart " +
                                     std::to_string(i));
    data.charts.push_back(chart);
  }
  return data;
}

ChainGraph dual_graph(const std::vector<ExceptionalCurve>& curves) {
  ChainGraph graph;
  for (const auto& c : curves)
    graph.nodes.push_back(ChainGraph::Node{c.self_intersection, c.special_rep});
  return graph;
}

}  // namespace mckay
