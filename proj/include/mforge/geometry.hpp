#ifndef MFORGE_GEOMETRY_HPP
#define MFORGE_GEOMETRY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mforge/operators.hpp"
#include "mforge/system.hpp"

namespace mforge::geometry {

/// Intersection number of the Del Pezzo lines attached to two distinct
/// 56-vertex polytope points: |v1 - v2|^2 / 32 - 1.
mpz_class intersection_number(const IntVector& v1, const IntVector& v2);

/// Hartshorne label of a line on the cubic surface: E_i, F_{ij}, or G_i.
struct LineLabel {
  enum Kind { E, F, G };
  Kind kind;
  int i;
  int j = 0;  // used by F only; i < j

  bool operator==(const LineLabel&) const = default;
  std::string str() const;
};

/// The fixed bijection between the 27 line labels and the 27 vertices of
/// the level-8 slice: E_i <-> v_{0,i}, F_{ij} <-> -v_{i,j}, G_i <-> v_{i,7}.
std::vector<std::pair<LineLabel, IntVector>> line_labels();

enum class IndexHalf { K0, K7 };  // {0,1,2,3} and {4,5,6,7}

/// The bifid transformation: +-v_{i,j} -> -+v_{K \ {i,j}} when {i,j} is
/// inside the chosen half, identity otherwise.
IntVector bifid(IndexHalf half, const IntVector& v);

/// True iff every generator (and every single commutator of generators)
/// maps b_v into the span of b_v and the vertices at squared distance 32.
bool support_check(const GeneratorFamily& fam);

}  // namespace mforge::geometry

#endif
