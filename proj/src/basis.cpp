#include "mckay/basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace mckay {
namespace {

struct BasisTables {
  MonomialSet invariant_gens;
  MonomialSet basis;
  std::vector<std::vector<Monomial>> by_char;  // graded-lex buckets per character
};

// Per-group memo; entries are immutable once inserted, so concurrent
// readers only contend on the lookup lock.
const BasisTables& tables_for(const GroupParams& g) {
  static std::mutex mu;
  static std::map<std::pair<Int, Int>, std::unique_ptr<const BasisTables>> cache;

  std::scoped_lock lock(mu);
  const auto key = std::make_pair(g.r(), g.a());
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  const Int r = g.r();
  auto t = std::make_unique<BasisTables>();

  // Nonconstant invariant monomials in the box [0, r]^2.  The box is
  // sufficient since x^r and y^r are invariant.
  std::vector<Monomial> invariants;
  for (Int m = 0; m <= r; ++m)
    for (Int n = 0; n <= r; ++n) {
      if (m == 0 && n == 0) continue;
      if (monomial_character(g, m, n).value == 0) invariants.push_back({m, n});
    }
  t->invariant_gens = divisibility_minimal(invariants);

  std::vector<Monomial> basis;
  for (Int m = 0; m <= r; ++m)
    for (Int n = 0; n <= r; ++n) {
      const Monomial cand{m, n};
      const bool reducible =
          std::any_of(t->invariant_gens.begin(), t->invariant_gens.end(),
                      [&](const Monomial& d) { return divides(d, cand); });
      if (!reducible) basis.push_back(cand);
    }
  t->basis = MonomialSet(std::move(basis));
  for (const Monomial& b : t->basis)
    if (b.m >= r || b.n >= r) throw Error("G-basis scan bound violated at " + to_string(b));

  t->by_char.resize(static_cast<std::size_t>(r));
  for (const Monomial& b : t->basis)
    t->by_char[static_cast<std::size_t>(character_of(g, b).value)].push_back(b);

  auto [pos, inserted] = cache.emplace(key, std::move(t));
  return *pos->second;
}

}  // namespace

MonomialSet invariant_generators(const GroupParams& g) { return tables_for(g).invariant_gens; }

MonomialSet g_basis(const GroupParams& g) { return tables_for(g).basis; }

MonomialSet l_space(const GroupParams& g) {
  std::vector<Monomial> elems;
  elems.push_back({0, 0});
  for (Int k = 1; k < g.r(); ++k) {
    elems.push_back({k, 0});
    elems.push_back({0, k});
  }
  return MonomialSet(std::move(elems));
}

MonomialSet module_generators(const GroupParams& g, CharIndex i) {
  const auto& t = tables_for(g);
  const Int c = mod_reduce(i.value, g.r());
  return MonomialSet(t.by_char[static_cast<std::size_t>(c)]);
}

bool surjectivity_oracle(const GroupParams& g, CharIndex i) {
  const Int r = g.r();
  const Int ic = mod_reduce(i.value, r);
  if (ic == 0) throw TrivialIndexError("surjectivity oracle needs a nontrivial character");

  // Targets live in character i - (a+1); each of their module generators
  // must factor as (character-i divisor) * (complementary part).
  const CharIndex target = char_index(g, ic - g.a() - 1);
  for (const Monomial& t : module_generators(g, target)) {
    bool factors = false;
    for (Int m = 0; m <= t.m && !factors; ++m)
      for (Int n = 0; n <= t.n; ++n)
        if (mod_reduce(m + g.a() * n, r) == ic) {
          factors = true;
          break;
        }
    if (!factors) return false;
  }
  return true;
}

SpecialReport special_reps(const GroupParams& g) {
  const auto& t = tables_for(g);
  const MonomialSet l = l_space(g);
  const Int r = g.r();
  const Int a_inv = mod_inverse(g.a(), r);

  SpecialReport report;
  for (Int i = 1; i < r; ++i) {
    const Monomial* witness = nullptr;
    for (const Monomial& b : t.by_char[static_cast<std::size_t>(i)])
      if (!l.contains(b)) {
        witness = &b;
        break;
      }
    if (witness != nullptr) {
      report.nonspecial_witnesses.emplace(CharIndex{i}, *witness);
    } else {
      report.specials.push_back(CharIndex{i});
      const Int j = mod_reduce(a_inv * i, r);
      report.generator_pairs.emplace(CharIndex{i},
                                     std::make_pair(Monomial{i, 0}, Monomial{0, j}));
    }
  }
  return report;
}

}  // namespace mckay
