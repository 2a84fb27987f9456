#include "mforge/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mforge::catalog {

namespace {

IntVector basis(std::size_t dim, std::size_t i, long value) {
  std::vector<mpz_class> c(dim, 0);
  c[i] = value;
  return IntVector(std::move(c));
}

// alpha_i = 4(e_{i-1} - e_i), the shared chain roots of sections 4-6.
IntVector chain_root(std::size_t dim, std::size_t from, std::size_t to) {
  std::vector<mpz_class> c(dim, 0);
  c[from] = 4;
  c[to] = -4;
  return IntVector(std::move(c));
}

std::vector<IntVector> hypercube_vertices(int n) {
  std::vector<IntVector> psi;
  psi.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<mpz_class> c(n);
    for (int i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? -2 : 2;
    psi.emplace_back(std::move(c));
  }
  return psi;
}

int minus_two_count(const IntVector& v) {
  int k = 0;
  for (const auto& c : v.coords())
    if (c == -2) ++k;
  return k;
}

SimpleSystem hypercube_delta(int n) {
  std::vector<SimpleRoot> roots;
  {
    std::vector<mpz_class> c(n, 0);
    c[0] = -4;
    c[1] = -4;
    roots.push_back({"alpha0", IntVector(std::move(c))});
  }
  for (int i = 1; i < n; ++i)
    roots.push_back({"alpha" + std::to_string(i), chain_root(n, i - 1, i)});
  roots.push_back({"alpha" + std::to_string(n), basis(n, n - 1, 4)});
  return SimpleSystem(n, std::move(roots));
}

// Delta_D: alpha_0 .. alpha_{n-1} plus alpha'_n = 4(e_{n-2} + e_{n-1}).
SimpleSystem d_type_delta(int n) {
  std::vector<SimpleRoot> roots;
  {
    std::vector<mpz_class> c(n, 0);
    c[0] = -4;
    c[1] = -4;
    roots.push_back({"alpha0", IntVector(std::move(c))});
  }
  for (int i = 1; i < n; ++i)
    roots.push_back({"alpha" + std::to_string(i), chain_root(n, i - 1, i)});
  {
    std::vector<mpz_class> c(n, 0);
    c[n - 2] = 4;
    c[n - 1] = 4;
    roots.push_back({"alpha" + std::to_string(n) + "'", IntVector(std::move(c))});
  }
  return SimpleSystem(n, std::move(roots));
}

SimpleSystem c_type_delta(int n) {
  std::vector<SimpleRoot> roots;
  roots.push_back({"alpha0''", basis(n, 0, -8)});
  for (int i = 1; i < n; ++i)
    roots.push_back({"alpha" + std::to_string(i), chain_root(n, i - 1, i)});
  roots.push_back({"alpha" + std::to_string(n) + "''", basis(n, n - 1, 8)});
  return SimpleSystem(n, std::move(roots));
}

std::vector<IntVector> cross_vertices(int n) {
  std::vector<IntVector> psi;
  for (int i = 0; i < n; ++i) {
    psi.push_back(basis(n, i, 4));
    psi.push_back(basis(n, i, -4));
  }
  return psi;
}

MinusculeSystem build_hesse() {
  std::vector<IntVector> psi;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      IntVector v = hesse_vertex(i, j);
      psi.push_back(v);
      psi.push_back(-v);
    }
  std::vector<SimpleRoot> roots;
  for (int i = 0; i < 7; ++i)
    roots.push_back({"alpha" + std::to_string(i), chain_root(8, i, i + 1)});
  roots.push_back({"alpha7", IntVector{-2, -2, -2, -2, 2, 2, 2, 2}});
  return MinusculeSystem::build(std::move(psi), SimpleSystem(8, std::move(roots)));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterOutOfRange(msg);
}

bool valid_e6_level(int l) { return l == 24 || l == 8 || l == -8 || l == -24; }

MinusculeSystem build_a_slice(int n, int k, bool affine) {
  require(n >= 3, "a_slice requires n >= 3");
  require(k >= 0 && k <= n, "a_slice requires 0 <= k <= n");
  std::vector<IntVector> psi;
  for (auto& v : hypercube_vertices(n))
    if (minus_two_count(v) == k) psi.push_back(std::move(v));
  std::vector<SimpleRoot> roots;
  for (int i = 1; i < n; ++i)
    roots.push_back({"alpha" + std::to_string(i), chain_root(n, i - 1, i)});
  if (affine) roots.push_back({"alpha", chain_root(n, n - 1, 0)});
  return MinusculeSystem::build(std::move(psi), SimpleSystem(n, std::move(roots)));
}

MinusculeSystem build_e6(int level, bool affine) {
  require(valid_e6_level(level), "e6 slice level must be one of 24, 8, -8, -24");
  MinusculeSystem hesse = build_hesse();
  MinusculeSystem sliced = slice(hesse, {hesse_slice_normal(), level});
  if (!affine) return sliced;
  std::vector<SimpleRoot> roots(sliced.delta().begin(), sliced.delta().end());
  // 4(e_0 - e_7): orthogonal to the surviving chain roots and pairing to -1
  // with the branch root, which completes the affine E6 diagram.
  roots.push_back({"alpha", chain_root(8, 0, 7)});
  return MinusculeSystem::build(sliced.psi(), SimpleSystem(8, std::move(roots)));
}

}  // namespace

IntVector hesse_vertex(int i, int j) {
  std::vector<mpz_class> c(8, -1);
  c[i] += 4;
  c[j] += 4;
  return IntVector(std::move(c));
}

IntVector hesse_slice_normal() { return hesse_vertex(0, 7); }

std::vector<EntryInfo> list_entries() {
  return {
      {"hesse", "(none)", "E7^(1)", "56"},
      {"e6_slice", "level in {24, 8, -8, -24}", "E6", "27 (levels +-8), 1 (levels +-24)"},
      {"e6_affine", "level in {24, 8, -8, -24}", "E6^(1)", "27 (levels +-8), 1 (levels +-24)"},
      {"hypercube", "n >= 3", "B_n^(1)", "2^n"},
      {"a_slice", "n >= 3, 0 <= k <= n", "A_{n-1}", "C(n, k)"},
      {"a_affine", "n >= 3, 0 <= k <= n", "A_{n-1}^(1)", "C(n, k)"},
      {"halfcube", "n >= 4, parity + or -", "D_n^(1)", "2^(n-1)"},
      {"cross_d", "n >= 4", "D_n^(1)", "2n"},
      {"cross_c", "n >= 2", "C_n^(1)", "2n"},
  };
}

MinusculeSystem build(const EntrySpec& spec) {
  if (spec.name == "hesse") return build_hesse();
  if (spec.name == "e6_slice") return build_e6(spec.level, false);
  if (spec.name == "e6_affine") return build_e6(spec.level, true);
  if (spec.name == "hypercube") {
    require(spec.n >= 3, "hypercube requires n >= 3");
    return MinusculeSystem::build(hypercube_vertices(spec.n),
                                  hypercube_delta(spec.n));
  }
  if (spec.name == "a_slice") return build_a_slice(spec.n, spec.k, false);
  if (spec.name == "a_affine") return build_a_slice(spec.n, spec.k, true);
  if (spec.name == "halfcube") {
    require(spec.n >= 4, "halfcube requires n >= 4");
    require(spec.parity == '+' || spec.parity == '-', "halfcube parity must be + or -");
    const int want = spec.parity == '+' ? 0 : 1;
    std::vector<IntVector> psi;
    for (auto& v : hypercube_vertices(spec.n))
      if (minus_two_count(v) % 2 == want) psi.push_back(std::move(v));
    return MinusculeSystem::build(std::move(psi), d_type_delta(spec.n));
  }
  if (spec.name == "cross_d") {
    require(spec.n >= 4, "cross_d requires n >= 4");
    return MinusculeSystem::build(cross_vertices(spec.n), d_type_delta(spec.n));
  }
  if (spec.name == "cross_c") {
    require(spec.n >= 2, "cross_c requires n >= 2");
    return MinusculeSystem::build(cross_vertices(spec.n), c_type_delta(spec.n));
  }
  throw ParameterOutOfRange("unknown catalog entry: " + spec.name);
}

MinusculeSystem restrict_system(const MinusculeSystem& sys,
                                const std::vector<std::string>& keep) {
  if (keep.empty()) throw EmptyRestriction("restriction keeps no roots");
  std::set<std::string> wanted(keep.begin(), keep.end());
  for (const auto& label : wanted)
    if (!sys.delta().has_label(label))
      throw UnknownLabel("no root labelled " + label);
  std::vector<SimpleRoot> roots;
  for (const auto& r : sys.delta())
    if (wanted.count(r.label)) roots.push_back(r);
  // Dropping roots cannot break the axioms.
  return MinusculeSystem::trusted(sys.psi(),
                                  SimpleSystem(sys.delta().dim(), std::move(roots)));
}

MinusculeSystem drop_root(const MinusculeSystem& sys, const std::string& label) {
  if (!sys.delta().has_label(label)) throw UnknownLabel("no root labelled " + label);
  std::vector<std::string> keep;
  for (const auto& r : sys.delta())
    if (r.label != label) keep.push_back(r.label);
  return restrict_system(sys, keep);
}

MinusculeSystem slice(const MinusculeSystem& sys, const SliceSpec& spec) {
  std::vector<IntVector> psi;
  for (const auto& v : sys.psi())
    if (dot(v, spec.normal) == spec.level) psi.push_back(v);
  if (psi.empty())
    throw EmptySlice("no vertex satisfies v.n = " + spec.level.get_str());
  std::vector<SimpleRoot> roots;
  for (const auto& r : sys.delta())
    if (dot(r.vector, spec.normal) == 0) roots.push_back(r);
  if (roots.empty())
    throw EmptySimpleSlice("no simple root is orthogonal to " + spec.normal.str());
  return MinusculeSystem::build(std::move(psi),
                                SimpleSystem(sys.delta().dim(), std::move(roots)));
}

bool subsystem_check(const MinusculeSystem& sys,
                     const std::vector<IntVector>& psi_sub,
                     const std::vector<std::string>& delta_sub) {
  if (psi_sub.empty() || delta_sub.empty())
    throw NotSubsets("subsystem check requires nonempty subsets");
  std::vector<IntVector> sorted(psi_sub);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted)
    if (!sys.contains(v))
      throw NotSubsets("vertex " + v.str() + " is not in Psi");
  std::vector<IntVector> roots;
  for (const auto& label : delta_sub) {
    if (!sys.delta().has_label(label))
      throw NotSubsets("label " + label + " is not in Delta");
    roots.push_back(sys.delta().vector_of(label));
  }
  for (const auto& v : sorted) {
    for (const auto& a : roots) {
      const int c = c_value(v, a);
      if (c == -1 && !std::binary_search(sorted.begin(), sorted.end(), v + a))
        return false;
      if (c == 1 && !std::binary_search(sorted.begin(), sorted.end(), v - a))
        return false;
    }
  }
  return true;
}

std::vector<std::pair<mpz_class, MinusculeSystem>> partition_by_slices(
    const MinusculeSystem& sys, const IntVector& normal) {
  std::map<mpz_class, std::vector<IntVector>> parts;
  for (const auto& v : sys.psi()) parts[dot(v, normal)].push_back(v);

  std::vector<SimpleRoot> roots;
  for (const auto& r : sys.delta())
    if (dot(r.vector, normal) == 0) roots.push_back(r);
  SimpleSystem delta(sys.delta().dim(), roots);

  std::vector<std::pair<mpz_class, MinusculeSystem>> out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    out.emplace_back(it->first,
                     MinusculeSystem::trusted(std::move(it->second), delta));
  return out;
}

}  // namespace mforge::catalog
