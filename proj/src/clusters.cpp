#include "mckay/clusters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace mckay {

Int GCluster::cell_count() const {
  return std::accumulate(columns.begin(), columns.end(), Int{0});
}

std::vector<GCluster> enumerate_clusters(const GroupParams& g) {
  const Int r = g.r(), a = g.a();
  std::vector<GCluster> found;
  std::vector<Int> cols;
  std::vector<char> used(static_cast<std::size_t>(r), 0);

  const auto cell_char = [&](Int m, Int j) { return mod_reduce(m + a * j, r); };

  const auto record = [&]() {
    GCluster c;
    c.columns = cols;
    for (Int m = 0; m < static_cast<Int>(cols.size()); ++m)
      for (Int j = 0; j < cols[static_cast<std::size_t>(m)]; ++j)
        c.chars.push_back(CharIndex{cell_char(m, j)});
    found.push_back(std::move(c));
  };

  // Depth-first search over weakly decreasing column heights, pruning as
  // soon as a cell character repeats.
  const auto extend = [&](auto&& self, Int m, Int cap, Int remaining) -> void {
    if (remaining == 0) {
      record();
      return;
    }
    // grow this column until a collision or the caps stop us
    Int h = 0;
    const Int hmax = std::min(cap, remaining);
    while (h < hmax && !used[static_cast<std::size_t>(cell_char(m, h))]) {
      used[static_cast<std::size_t>(cell_char(m, h))] = 1;
      ++h;
    }
    for (Int height = h; height >= 1; --height) {
      cols.push_back(height);
      self(self, m + 1, height, remaining - height);
      cols.pop_back();
      used[static_cast<std::size_t>(cell_char(m, height - 1))] = 0;
    }
  };
  extend(extend, 0, r, r);

  std::sort(found.begin(), found.end(), [](const GCluster& lhs, const GCluster& rhs) {
    return lhs.columns.size() < rhs.columns.size();
  });
  for (std::size_t i = 0; i + 1 < found.size(); ++i)
    if (found[i].columns.size() == found[i + 1].columns.size())
      throw Error("two clusters share a column count; chain order is broken");
  return found;
}

ClusterIdeal cluster_ideal(const GroupParams& g, const GCluster& c) {
  const auto& cols = c.columns;
  if (cols.empty()) throw Error("cluster has no columns");
  const Int ncols = static_cast<Int>(cols.size());

  std::vector<Monomial> gens;
  gens.push_back({ncols, 0});
  gens.push_back({0, cols.front()});
  for (Int m = 1; m < ncols; ++m)
    if (cols[static_cast<std::size_t>(m)] < cols[static_cast<std::size_t>(m - 1)])
      gens.push_back({m, cols[static_cast<std::size_t>(m)]});

  ClusterIdeal ideal;
  ideal.generators = MonomialSet(std::move(gens));
  for (const Monomial& t : ideal.generators)
    ideal.cotangent.push_back(character_of(g, t));
  return ideal;
}

std::vector<CharIndex> cotangent_decomposition(const GroupParams& g, const ClusterIdeal& ci) {
  std::vector<CharIndex> chars;
  Int trivial = 0;
  const SpecialReport specials = special_reps(g);
  for (const Monomial& t : ci.generators) {
    const CharIndex c = character_of(g, t);
    chars.push_back(c);
    if (c.value == 0) {
      ++trivial;
    } else if (!specials.is_special(c)) {
      throw NonSpecialCotangentError("generator " + to_string(t) + " has non-special character " +
                                     std::to_string(c.value));
    }
  }
  if (trivial != 1)
    throw NonSpecialCotangentError("cluster ideal must have exactly one invariant generator, found " +
                                   std::to_string(trivial));
  return chars;
}

ChartDeformation chart_deformation(const GroupParams& g, const ClusterIdeal& ci) {
  const auto& gens = ci.generators.elements();
  if (gens.size() > 3)
    throw TooManyGeneratorsError("cluster ideal has " + std::to_string(gens.size()) +
                                 " minimal generators; the two-parameter shape needs at most 3");
  if (gens.size() < 2) throw Error("cluster ideal needs at least two generators");

  const Monomial* xpow = nullptr;
  const Monomial* ypow = nullptr;
  const Monomial* corner = nullptr;
  for (const Monomial& t : gens) {
    if (t.n == 0)
      xpow = &t;
    else if (t.m == 0)
      ypow = &t;
    else
      corner = &t;
  }
  if (xpow == nullptr || ypow == nullptr)
    throw Error("cluster ideal must contain a pure power of each variable");

  // Pure-power partner of matching character among the module generators;
  // exponent 0 when the generator is itself invariant.
  const auto y_partner = [&](CharIndex c) -> Int {
    if (c.value == 0) return 0;
    for (const Monomial& t : module_generators(g, c))
      if (t.m == 0) return t.n;
    throw Error("no pure y-power of character " + std::to_string(c.value));
  };
  const auto x_partner = [&](CharIndex c) -> Int {
    if (c.value == 0) return 0;
    for (const Monomial& t : module_generators(g, c))
      if (t.n == 0) return t.m;
    throw Error("no pure x-power of character " + std::to_string(c.value));
  };

  const Int A = xpow->m;
  const Int B = ypow->n;
  const Int C = y_partner(character_of(g, *xpow));
  const Int D = x_partner(character_of(g, *ypow));
  if (A < D || B < C)
    throw Error("deformation pairing gives negative exponents for " + to_string(*xpow) + ", " +
                to_string(*ypow));

  const Monomial third{A - D, B - C};
  if (character_of(g, third).value != 0)
    throw Error("product relation " + to_string(third) + " is not invariant");
  if (corner != nullptr && !(*corner == third))
    throw Error("corner generator " + to_string(*corner) + " does not match the relation " +
                to_string(third));
  if (corner == nullptr && !divides(*xpow, third) && !divides(*ypow, third))
    throw Error("relation " + to_string(third) + " escapes the two-generator ideal");

  ChartDeformation d;
  d.relations = {
      {*xpow, DeformationRelation::Coeff::Alpha, Monomial{0, C}},
      {*ypow, DeformationRelation::Coeff::Beta, Monomial{D, 0}},
      {third, DeformationRelation::Coeff::AlphaBeta, Monomial{0, 0}},
  };
  d.alpha_exponent = ExponentVector{A, -C};
  d.beta_exponent = ExponentVector{-D, B};
  return d;
}

ReconstructedChain reconstruct_chain(const GroupParams& g, const std::vector<GCluster>& clusters) {
  std::vector<std::vector<Int>> nontrivial(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (const CharIndex c : cluster_ideal(g, clusters[i]).cotangent)
      if (c.value != 0) nontrivial[i].push_back(c.value);
    std::sort(nontrivial[i].begin(), nontrivial[i].end());
    if (nontrivial[i].empty() || nontrivial[i].size() > 2)
      throw NotAChainError("cluster " + std::to_string(i) + " touches " +
                           std::to_string(nontrivial[i].size()) + " curves");
  }

  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if (nontrivial[i].size() == 1) ends.push_back(i);
  if (ends.size() != 2)
    throw NotAChainError("expected exactly 2 end clusters, found " + std::to_string(ends.size()));

  std::map<Int, std::vector<Int>> adjacency;
  for (const auto& nt : nontrivial)
    for (const Int c : nt) adjacency.try_emplace(c);

  std::vector<std::pair<Int, Int>> edge_list;
  for (const auto& nt : nontrivial) {
    if (nt.size() != 2) continue;
    if (nt[0] == nt[1]) throw NotAChainError("cluster joins a curve to itself");
    const auto edge = std::make_pair(nt[0], nt[1]);
    if (std::find(edge_list.begin(), edge_list.end(), edge) != edge_list.end())
      throw NotAChainError("duplicate intersection edge");
    edge_list.push_back(edge);
    adjacency[nt[0]].push_back(nt[1]);
    adjacency[nt[1]].push_back(nt[0]);
  }

  if (edge_list.size() + 1 != adjacency.size())
    throw NotAChainError("incidence data is not a tree");
  for (const auto& [node, nbrs] : adjacency)
    if (nbrs.size() > 2)
      throw NotAChainError("curve " + std::to_string(node) + " meets more than two others");

  // Anchor the walk at the single-column end cluster, the (x, y^r) one.
  std::size_t start_end = ends[0], other_end = ends[1];
  if (clusters[other_end].columns.size() == 1) std::swap(start_end, other_end);
  if (clusters[start_end].columns.size() != 1)
    throw NotAChainError("no single-column end cluster to anchor the chain");

  ReconstructedChain chain;
  chain.end_cluster_indices = {start_end, other_end};
  Int prev = -1;
  Int cur = nontrivial[start_end][0];
  while (true) {
    chain.nodes.push_back(CharIndex{cur});
    Int next = -1;
    for (const Int nbr : adjacency[cur])
      if (nbr != prev) next = nbr;
    if (next == -1) break;
    chain.edges.emplace_back(CharIndex{cur}, CharIndex{next});
    prev = std::exchange(cur, next);
  }
  if (chain.nodes.size() != adjacency.size())
    throw NotAChainError("incidence data is not connected");
  if (chain.nodes.back().value != nontrivial[other_end][0])
    throw NotAChainError("walk does not finish at the second end cluster");
  return chain;
}

bool an_corollary_check(const GroupParams& g) {
  if (!is_in_sl2(g))
    throw NotSL2Error("C_{" + std::to_string(g.r()) + "," + std::to_string(g.a()) +
                      "} is not in SL(2,C)");
  const Int r = g.r();
  const auto clusters = enumerate_clusters(g);
  if (static_cast<Int>(clusters.size()) != r) return false;

  std::vector<MonomialSet> actual;
  for (const GCluster& c : clusters) actual.push_back(cluster_ideal(g, c).generators);

  std::vector<MonomialSet> expected;
  for (Int k = 1; k <= r; ++k)
    expected.push_back(divisibility_minimal({Monomial{k, 0}, Monomial{0, r - k + 1}, Monomial{1, 1}}));

  const auto key = [](const MonomialSet& s) {
    std::vector<std::pair<Int, Int>> v;
    for (const Monomial& t : s) v.emplace_back(t.m, t.n);
    return v;
  };
  auto by_key = [&](const MonomialSet& lhs, const MonomialSet& rhs) { return key(lhs) < key(rhs); };
  std::sort(actual.begin(), actual.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);
  return actual == expected;
}

}  // namespace mckay
