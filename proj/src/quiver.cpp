#include "mckay/quiver.hpp"

#include <string>

#include "mckay/resolution.hpp"

namespace mckay {

TensorMatrix tensor_matrix(const GroupParams& g) {
  const Int r = g.r();
  TensorMatrix t;
  t.r = r;
  t.entries.assign(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(r), 0));
  const auto [c1, c2] = natural_rep_summands(g);
  for (Int i = 0; i < r; ++i) {
    t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(mod_reduce(i + c1.value, r))] += 1;
    t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(mod_reduce(i + c2.value, r))] += 1;
  }
  return t;
}

bool is_symmetric(const TensorMatrix& t) {
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = i + 1; j < t.entries.size(); ++j)
      if (t.entries[i][j] != t.entries[j][i]) return false;
  return true;
}

IntMatrix intersection_matrix(const GroupParams& g) {
  const auto resolution = build_resolution(g);
  const std::size_t s = resolution.curves.size();
  IntMatrix m(s, std::vector<Int>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    m[i][i] = resolution.curves[i].self_intersection;
    if (i + 1 < s) {
      m[i][i + 1] = 1;
      m[i + 1][i] = 1;
    }
  }
  return m;
}

CartanData cartan_matrix(const GroupParams& g) {
  if (!is_in_sl2(g))
    throw NotSL2Error("Cartan comparison is defined for SL(2,C) members only, got C_{" +
                      std::to_string(g.r()) + "," + std::to_string(g.a()) + "}");
  const Int r = g.r();
  const TensorMatrix t = tensor_matrix(g);

  CartanData data;
  const std::size_t n = static_cast<std::size_t>(r - 1);
  data.cartan.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      data.cartan[i][j] = (i == j ? 2 : 0) - t.entries[i + 1][j + 1];

  data.intersection = intersection_matrix(g);

  // Align the chain with the representation labels, then compare.
  const auto resolution = build_resolution(g);
  data.opposite = resolution.curves.size() == n;
  if (data.opposite) {
    for (std::size_t i = 0; i < n && data.opposite; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ci = static_cast<std::size_t>(resolution.curves[i].special_rep.value - 1);
        const std::size_t cj = static_cast<std::size_t>(resolution.curves[j].special_rep.value - 1);
        if (data.intersection[i][j] != -data.cartan[ci][cj]) {
          data.opposite = false;
          break;
        }
      }
  }
  return data;
}

bool is_negative_definite(const IntMatrix& m) {
  const std::size_t n = m.size();
  // Fraction-free elimination on -m; the pivot reached at step k is the
  // (k+1)-th leading principal minor, which must stay positive.
  IntMatrix a(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m[i][j];

  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

QuiverGraph quiver_graph(const GroupParams& g) {
  const TensorMatrix t = tensor_matrix(g);
  QuiverGraph q;
  q.node_count = t.r;
  for (Int i = 0; i < t.r; ++i)
    for (Int j = 0; j < t.r; ++j) {
      const Int mult = t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (mult > 0) q.edges.push_back({i, j, mult});
    }
  return q;
}

}  // namespace mckay
