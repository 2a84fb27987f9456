#ifndef MFORGE_WEYL_HPP
#define MFORGE_WEYL_HPP

#include <map>
#include <utility>
#include <vector>

#include "mforge/system.hpp"

namespace mforge::weyl {

/// The reflection s_a(v) = v - (2(v.a)/(a.a)) a.  The coefficient must be
/// an integer (always true on minuscule systems and root systems).
IntVector reflect(const IntVector& a, const IntVector& v);

/// Closure of the seed under the simple reflections; always a subset of
/// Psi, returned canonically sorted.
std::vector<IntVector> orbit(const MinusculeSystem& sys, const IntVector& seed);

struct PairOrbit {
  std::pair<IntVector, IntVector> representative;  // smallest pair in the orbit
  mpz_class squared_distance;                      // common to the whole orbit
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // vertex index pairs
};

struct OrbitPartition {
  std::vector<PairOrbit> orbits;  // sorted by representative
};

/// Orbits of the diagonal action on ordered pairs Psi x Psi.
OrbitPartition orbits_on_pairs(const MinusculeSystem& sys);

struct EdgeRootStats {
  std::size_t edge_count = 0;  // ordered pairs at the given squared distance
  std::vector<IntVector> distinct_roots;
  std::map<IntVector, std::size_t> multiplicity;

  bool uniform_multiplicity() const;
};

/// Difference vectors of vertex pairs at the given squared distance.
EdgeRootStats edge_root_system(const MinusculeSystem& sys, const mpz_class& sq_dist);

}  // namespace mforge::weyl

#endif
