#pragma once

#include <vector>

#include "mckay/group.hpp"

namespace mckay {

using IntMatrix = std::vector<std::vector<Int>>;

/// a_{ij} = multiplicity of rho_j in rho_i tensor (natural representation).
/// For C_{r,a} this is [j = i+1] + [j = i+a] mod r; every row and column
/// sums to 2.
struct TensorMatrix {
  Int r = 0;
  IntMatrix entries;
};

TensorMatrix tensor_matrix(const GroupParams& g);
bool is_symmetric(const TensorMatrix& t);

/// 2I - A restricted to nontrivial indices, next to the intersection
/// matrix of the exceptional curves (tridiagonal, diagonal -b_i, ones on
/// the off-diagonals).  `opposite` records whether the intersection matrix
/// equals -cartan once the chain is aligned by its special labels.
struct CartanData {
  IntMatrix cartan;
  IntMatrix intersection;
  bool opposite = false;
};

/// Throws NotSL2Error for groups outside SL(2,C).
CartanData cartan_matrix(const GroupParams& g);

/// Intersection matrix of the exceptional chain; defined for every small
/// cyclic group.
IntMatrix intersection_matrix(const GroupParams& g);

/// Exact test that -m is positive definite (all leading principal minors
/// positive), via fraction-free elimination.
bool is_negative_definite(const IntMatrix& m);

/// McKay quiver: r nodes, a_{ij} parallel arrows i -> j stored as one edge
/// with a multiplicity.
struct QuiverGraph {
  struct Edge {
    Int from = 0;
    Int to = 0;
    Int multiplicity = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  Int node_count = 0;
  std::vector<Edge> edges;  // sorted by (from, to)
};

QuiverGraph quiver_graph(const GroupParams& g);

}  // namespace mckay
