#include "mforge/weyl.hpp"

#include <algorithm>
#include <deque>

namespace mforge::weyl {

IntVector reflect(const IntVector& a, const IntVector& v) {
  if (a.is_zero()) throw ZeroRoot("reflect: zero root");
  const mpz_class num = 2 * dot(v, a);
  const mpz_class den = dot(a, a);
  if (num % den != 0) {
    mpq_class ratio(num, den);
    ratio.canonicalize();
    throw NotMinusculeValue("reflect: coefficient 2(v.a)/(a.a) = " +
                                ratio.get_str() + " is not an integer",
                            ratio);
  }
  mpz_class coeff = num / den;
  return v - coeff * a;
}

namespace {

// s_a acts on a validated Psi as v -> v - c(v, a) a, a permutation of the
// vertex indices.
std::vector<std::vector<std::size_t>> reflection_tables(const MinusculeSystem& sys) {
  std::vector<std::vector<std::size_t>> tables;
  tables.reserve(sys.delta().size());
  for (const auto& root : sys.delta()) {
    std::vector<std::size_t> perm(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const int c = sys.c(i, root.vector);
      const IntVector image =
          c == 0 ? sys.vertex(i) : sys.vertex(i) - mpz_class(c) * root.vector;
      perm[i] = sys.index_of(image).value();
    }
    tables.push_back(std::move(perm));
  }
  return tables;
}

}  // namespace

std::vector<IntVector> orbit(const MinusculeSystem& sys, const IntVector& seed) {
  const auto seed_index = sys.index_of(seed);
  if (!seed_index) throw SeedNotInPsi("seed " + seed.str() + " is not in Psi");

  const auto tables = reflection_tables(sys);
  std::vector<bool> seen(sys.size(), false);
  std::deque<std::size_t> frontier{*seed_index};
  seen[*seed_index] = true;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& perm : tables) {
      const std::size_t j = perm[i];
      if (!seen[j]) {
        seen[j] = true;
        frontier.push_back(j);
      }
    }
  }
  std::vector<IntVector> result;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (seen[i]) result.push_back(sys.vertex(i));
  return result;
}

OrbitPartition orbits_on_pairs(const MinusculeSystem& sys) {
  const auto tables = reflection_tables(sys);
  const std::size_t n = sys.size();
  std::vector<bool> seen(n * n, false);
  OrbitPartition partition;

  for (std::size_t start = 0; start < n * n; ++start) {
    if (seen[start]) continue;
    PairOrbit orbit;
    std::deque<std::size_t> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t code = frontier.front();
      frontier.pop_front();
      orbit.pairs.emplace_back(code / n, code % n);
      for (const auto& perm : tables) {
        const std::size_t next = perm[code / n] * n + perm[code % n];
        if (!seen[next]) {
          seen[next] = true;
          frontier.push_back(next);
        }
      }
    }
    std::sort(orbit.pairs.begin(), orbit.pairs.end());
    const auto& [i, j] = orbit.pairs.front();
    orbit.representative = {sys.vertex(i), sys.vertex(j)};
    orbit.squared_distance = squared_distance(sys.vertex(i), sys.vertex(j));
    partition.orbits.push_back(std::move(orbit));
  }

  std::sort(partition.orbits.begin(), partition.orbits.end(),
            [](const PairOrbit& a, const PairOrbit& b) {
              return a.representative < b.representative;
            });
  return partition;
}

bool EdgeRootStats::uniform_multiplicity() const {
  if (multiplicity.empty()) return true;
  const std::size_t first = multiplicity.begin()->second;
  for (const auto& [root, count] : multiplicity)
    if (count != first) return false;
  return true;
}

EdgeRootStats edge_root_system(const MinusculeSystem& sys, const mpz_class& sq_dist) {
  EdgeRootStats stats;
  for (const auto& v1 : sys.psi())
    for (const auto& v2 : sys.psi()) {
      if (v1 == v2) continue;
      if (squared_distance(v1, v2) == sq_dist) {
        ++stats.edge_count;
        ++stats.multiplicity[v1 - v2];
      }
    }
  for (const auto& [root, count] : stats.multiplicity)
    stats.distinct_roots.push_back(root);
  return stats;
}

}  // namespace mforge::weyl
