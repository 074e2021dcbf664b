#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "mckay/basis.hpp"

namespace mckay {

/// Torus-fixed G-cluster: a Young diagram of r cells carrying the regular
/// representation.  columns[m] is the height of column m (weakly
/// decreasing, positive); cell (m, j) is the monomial x^m y^j and chars
/// lists the cell characters column-major, each class appearing once.
struct GCluster {
  std::vector<Int> columns;
  std::vector<CharIndex> chars;

  Int cell_count() const;
  friend bool operator==(const GCluster&, const GCluster&) = default;
};

/// All torus-fixed G-clusters, found by depth-first search over weakly
/// decreasing column heights with incremental character-collision pruning.
/// Ordered by column count ascending, which runs along the exceptional
/// chain starting from the chart at the x-axis end (the (x, y^r) cluster).
std::vector<GCluster> enumerate_clusters(const GroupParams& g);

/// Monomial ideal of a cluster: the divisibility-minimal monomials outside
/// the staircase, with their characters in the same order.
struct ClusterIdeal {
  MonomialSet generators;
  std::vector<CharIndex> cotangent;
};

ClusterIdeal cluster_ideal(const GroupParams& g, const GCluster& c);

/// Characters of the minimal generators (the cotangent classes I/mI).
/// Exactly one is trivial, and every nontrivial one must be special;
/// throws NonSpecialCotangentError otherwise since that is a theorem.
std::vector<CharIndex> cotangent_decomposition(const GroupParams& g,
                                               const ClusterIdeal& ci);

/// One relation of a two-parameter cluster deformation.
struct DeformationRelation {
  enum class Coeff { Alpha, Beta, AlphaBeta };
  Monomial lhs;
  Coeff coeff = Coeff::Alpha;
  Monomial rhs;  // the paired pure power; 1 when the coefficient stands alone
  friend bool operator==(const DeformationRelation&,
                         const DeformationRelation&) = default;
};

/// The affine-chart deformation of a cluster ideal: x^A = alpha y^C,
/// y^B = beta x^D and x^{A-D} y^{B-C} = alpha beta, where each pure-power
/// generator is paired with the unique pure power of the opposite variable
/// carrying the same character.  Setting alpha = beta = 0 recovers the
/// ideal.  The exponent vectors of alpha and beta lie in the dual lattice
/// and reproduce the fan chart's dual pair.
struct ChartDeformation {
  std::vector<DeformationRelation> relations;
  ExponentVector alpha_exponent;
  ExponentVector beta_exponent;
};

/// Throws TooManyGeneratorsError when the ideal has more than three
/// minimal generators.
ChartDeformation chart_deformation(const GroupParams& g,
                                   const ClusterIdeal& ci);

/// The exceptional chain reconstructed from cluster cotangent data alone:
/// nodes are the nontrivial cotangent characters, an edge joins the two
/// characters of each interior cluster, and the two single-character
/// clusters are the ends.  Node order starts at the (x, y^r)-type end.
struct ReconstructedChain {
  std::vector<CharIndex> nodes;
  std::vector<std::pair<CharIndex, CharIndex>> edges;
  std::array<std::size_t, 2> end_cluster_indices{0, 0};
};

/// Throws NotAChainError if the incidence data is not a simple path.
ReconstructedChain reconstruct_chain(const GroupParams& g,
                                     const std::vector<GCluster>& clusters);

/// For SL(2) members only: checks that the clusters are exactly the r
/// hook-shaped diagrams with ideals (x^k, y^{r-k+1}, xy), redundant
/// generators dropped.  Throws NotSL2Error otherwise.
bool an_corollary_check(const GroupParams& g);

}  // namespace mckay
