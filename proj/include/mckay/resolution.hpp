#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mckay/monomial.hpp"

namespace mckay {

/// The point (p/r, q/r) of the lattice N = Z^2 + Z*(1,a)/r.  Membership
/// means q = a*p mod r; the origin is excluded.
struct NLatticePoint {
  Int p = 0;
  Int q = 0;
  Int r = 1;
  friend bool operator==(const NLatticePoint&, const NLatticePoint&) = default;
};

/// Hirzebruch-Jung expansion r/a = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2.
struct HJExpansion {
  std::vector<Int> coeffs;
  friend bool operator==(const HJExpansion&, const HJExpansion&) = default;
};

HJExpansion hj_expansion(const GroupParams& g);

/// Evaluates b_1 - 1/(b_2 - ...) exactly.
Rational evaluate_hj(const HJExpansion& e);

/// Boundary lattice points of the convex hull of N cap (first quadrant)
/// minus the origin, ordered from (r,0)/r on the x-axis side to (0,r)/r.
/// Collinear boundary lattice points are kept; the interior points are the
/// exceptional curves.
std::vector<NLatticePoint> newton_boundary(const GroupParams& g);

/// For each interior boundary point u_i the integer b_i >= 2 with
/// u_{i-1} + u_{i+1} = b_i * u_i, returned as the list of -b_i in boundary
/// order.  Throws NonIntegralRelationError if the relation fails.
std::vector<Int> self_intersections(const std::vector<NLatticePoint>& boundary);

/// r times the pairing <w, u> = (w.m * u.p + w.n * u.q) / r.
Int pairing_times_r(const ExponentVector& w, const NLatticePoint& u);

/// Smooth affine chart of the fan, spanned by two consecutive boundary
/// rays.  The dual pair (alpha, beta) solves the unimodular pairing
/// conditions <alpha, ray_x_side> = 1, <alpha, ray_y_side> = 0 and
/// symmetrically for beta.
struct FanChart {
  Int index = 0;
  NLatticePoint ray_x_side;
  NLatticePoint ray_y_side;
  ExponentVector alpha;
  ExponentVector beta;
};

/// Exceptional curve attached to an interior boundary ray (p,q)/r.  Its
/// points are cut out by the ratio x^q : y^p, whose two monomials share
/// the character q mod r; that character is the curve's special label.
struct ExceptionalCurve {
  Int index = 0;  // 1-based position along the chain, x-axis end first
  NLatticePoint ray;
  Int self_intersection = 0;
  CharIndex special_rep;
  std::pair<Monomial, Monomial> ratio_pair;
};

struct ResolutionData {
  std::vector<ExceptionalCurve> curves;
  std::vector<FanChart> charts;
};

ResolutionData build_resolution(const GroupParams& g);

/// The dual graph of the exceptional divisor: a path, x-axis end first,
/// with the strict transforms of the two axes marking the ends.
struct ChainGraph {
  struct Node {
    Int self_intersection = 0;
    CharIndex rep;
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Node> nodes;
  std::array<std::string, 2> ends{"x-axis", "y-axis"};
};

ChainGraph dual_graph(const std::vector<ExceptionalCurve>& curves);

}  // namespace mckay
