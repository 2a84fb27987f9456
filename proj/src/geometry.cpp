#include "mforge/geometry.hpp"

#include <algorithm>

#include "mforge/catalog.hpp"

namespace mforge::geometry {

namespace {

const MinusculeSystem& hesse() {
  static const MinusculeSystem sys = catalog::build({.name = "hesse"});
  return sys;
}

void require_on_polytope(const IntVector& v) {
  if (!hesse().contains(v))
    throw NotOnPolytope("vertex " + v.str() + " is not on the 56-vertex polytope");
}

// Decomposes v = sign * v_{i,j}; every vertex has a unique such form.
struct VertexForm {
  int sign;
  int i, j;
};

VertexForm decompose(const IntVector& v) {
  require_on_polytope(v);
  // +v_{i,j} has two coordinates equal to 3; -v_{i,j} has two equal to -3.
  VertexForm form{0, -1, -1};
  for (int idx = 0; idx < 8; ++idx) {
    if (v[idx] == 3 || v[idx] == -3) {
      form.sign = v[idx] == 3 ? 1 : -1;
      if (form.i < 0)
        form.i = idx;
      else
        form.j = idx;
    }
  }
  return form;
}

}  // namespace

mpz_class intersection_number(const IntVector& v1, const IntVector& v2) {
  require_on_polytope(v1);
  require_on_polytope(v2);
  if (v1 == v2) throw EqualVertices("intersection number needs distinct vertices");
  const mpz_class d2 = squared_distance(v1, v2);
  if (d2 % 32 != 0)
    throw NotALineDistance("squared distance " + d2.get_str() +
                           " is not a multiple of 32");
  return d2 / 32 - 1;
}

std::string LineLabel::str() const {
  switch (kind) {
    case E:
      return "E" + std::to_string(i);
    case F:
      return "F" + std::to_string(i) + std::to_string(j);
    case G:
      return "G" + std::to_string(i);
  }
  return "?";
}

std::vector<std::pair<LineLabel, IntVector>> line_labels() {
  std::vector<std::pair<LineLabel, IntVector>> table;
  for (int i = 1; i <= 6; ++i)
    table.emplace_back(LineLabel{LineLabel::E, i}, catalog::hesse_vertex(0, i));
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      table.emplace_back(LineLabel{LineLabel::F, i, j}, -catalog::hesse_vertex(i, j));
  for (int i = 1; i <= 6; ++i)
    table.emplace_back(LineLabel{LineLabel::G, i}, catalog::hesse_vertex(i, 7));
  return table;
}

IntVector bifid(IndexHalf half, const IntVector& v) {
  const VertexForm form = decompose(v);
  const int lo = half == IndexHalf::K0 ? 0 : 4;
  if (form.i < lo || form.j >= lo + 4) return v;  // indices straddle the halves
  // complement {i,j} within the half, flip the sign
  std::vector<int> rest;
  for (int idx = lo; idx < lo + 4; ++idx)
    if (idx != form.i && idx != form.j) rest.push_back(idx);
  IntVector image = catalog::hesse_vertex(rest[0], rest[1]);
  return form.sign > 0 ? -image : image;
}

bool support_check(const GeneratorFamily& fam) {
  const MinusculeSystem& sys = fam.system;
  for (const auto& v : sys.psi())
    if (!hesse().contains(v))
      throw WrongSystem("support check applies to the 56-vertex polytope and its slices");

  auto supported = [&](const LinearOperator& op) {
    for (std::size_t j = 0; j < op.dim(); ++j)
      for (const auto& [row, coeff] : op.column(j)) {
        if (row == j) continue;
        if (squared_distance(sys.vertex(row), sys.vertex(j)) != 32) return false;
      }
    return true;
  };

  std::vector<const LinearOperator*> generators;
  for (const auto& e : fam.E) generators.push_back(&e);
  for (const auto& f : fam.F) generators.push_back(&f);
  for (const auto& h : fam.H) generators.push_back(&h);

  for (const auto* g : generators)
    if (!supported(*g)) return false;
  for (const auto* a : generators)
    for (const auto* b : generators)
      if (!supported(commutator(*a, *b))) return false;
  return true;
}

}  // namespace mforge::geometry
