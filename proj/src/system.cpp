#include "mforge/system.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace mforge {

SimpleSystem::SimpleSystem(std::size_t dim, std::vector<SimpleRoot> roots)
    : dim_(dim), roots_(std::move(roots)) {
  std::set<std::string> labels;
  std::set<IntVector> vectors;
  for (const auto& r : roots_) {
    if (r.vector.dim() != dim_)
      throw DimensionMismatch("simple system: root " + r.label + " has dimension " +
                              std::to_string(r.vector.dim()) + ", expected " +
                              std::to_string(dim_));
    if (r.vector.is_zero())
      throw ZeroRoot("simple system: root " + r.label + " is the zero vector");
    if (!labels.insert(r.label).second)
      throw Error("simple system: duplicate label " + r.label);
    if (!vectors.insert(r.vector).second)
      throw Error("simple system: duplicate root vector " + r.vector.str() +
                  " under label " + r.label);
  }
}

SimpleSystem::SimpleSystem(std::vector<SimpleRoot> roots)
    : SimpleSystem(roots.empty()
                       ? throw Error("simple system: cannot infer dimension from no roots")
                       : roots.front().vector.dim(),
                   std::move(roots)) {}

bool SimpleSystem::has_label(const std::string& label) const {
  for (const auto& r : roots_)
    if (r.label == label) return true;
  return false;
}

std::size_t SimpleSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].label == label) return i;
  throw UnknownLabel("no root labelled " + label);
}

const IntVector& SimpleSystem::vector_of(const std::string& label) const {
  return roots_[index_of(label)].vector;
}

std::optional<int> c_value_opt(const IntVector& v, const IntVector& a) {
  if (a.is_zero()) throw ZeroRoot("c_value: zero root");
  const mpz_class num = 2 * dot(v, a);
  const mpz_class den = dot(a, a);
  if (num == 0) return 0;
  if (num == den) return 1;
  if (num == -den) return -1;
  return std::nullopt;
}

int c_value(const IntVector& v, const IntVector& a) {
  auto c = c_value_opt(v, a);
  if (!c) {
    mpq_class ratio(2 * dot(v, a), dot(a, a));
    ratio.canonicalize();
    throw NotMinusculeValue("c(" + v.str() + ", " + a.str() +
                                ") = " + ratio.get_str() + " is not in {-1, 0, +1}",
                            ratio);
  }
  return *c;
}

namespace {

bool sorted_contains(const std::vector<IntVector>& psi, const IntVector& v) {
  return std::binary_search(psi.begin(), psi.end(), v);
}

}  // namespace

ValidationReport validate_system(const std::vector<IntVector>& psi,
                                 const SimpleSystem& delta) {
  std::vector<IntVector> sorted(psi);
  std::sort(sorted.begin(), sorted.end());

  ValidationReport report;
  for (const auto& v : sorted) {
    if (v.dim() != delta.dim()) {
      report.violations.push_back(
          {v, "", "vertex dimension " + std::to_string(v.dim()) +
                      " differs from simple system dimension " +
                      std::to_string(delta.dim())});
      continue;
    }
    for (const auto& root : delta) {
      const auto c = c_value_opt(v, root.vector);
      if (!c) {
        mpq_class ratio(2 * dot(v, root.vector), dot(root.vector, root.vector));
        ratio.canonicalize();
        report.violations.push_back(
            {v, root.label, "2(v.a)/(a.a) = " + ratio.get_str() + " is not in {-1, 0, +1}"});
        continue;
      }
      const bool plus = sorted_contains(sorted, v + root.vector);
      const bool minus = sorted_contains(sorted, v - root.vector);
      if (plus != (*c == -1))
        report.violations.push_back(
            {v, root.label,
             std::string("c = ") + std::to_string(*c) + " but v + a is " +
                 (plus ? "in" : "not in") + " Psi"});
      if (minus != (*c == 1))
        report.violations.push_back(
            {v, root.label,
             std::string("c = ") + std::to_string(*c) + " but v - a is " +
                 (minus ? "in" : "not in") + " Psi"});
    }
  }
  return report;
}

MinusculeSystem::MinusculeSystem(std::vector<IntVector> psi, SimpleSystem delta)
    : psi_(std::move(psi)), delta_(std::move(delta)) {
  std::sort(psi_.begin(), psi_.end());
  psi_.erase(std::unique(psi_.begin(), psi_.end()), psi_.end());
}

MinusculeSystem MinusculeSystem::build(std::vector<IntVector> psi,
                                       SimpleSystem delta) {
  if (psi.empty()) throw Error("minuscule system: empty vertex set");
  auto report = validate_system(psi, delta);
  if (!report.ok()) {
    std::string msg = "minuscule system axioms fail with " +
                      std::to_string(report.violations.size()) + " violation(s); first: (" +
                      report.violations.front().vertex.str() + ", " +
                      report.violations.front().root_label + "): " +
                      report.violations.front().reason;
    throw ValidationError(std::move(msg), std::move(report));
  }
  return MinusculeSystem(std::move(psi), std::move(delta));
}

MinusculeSystem MinusculeSystem::trusted(std::vector<IntVector> psi,
                                         SimpleSystem delta) {
  assert(validate_system(psi, delta).ok());
  return MinusculeSystem(std::move(psi), std::move(delta));
}

std::optional<std::size_t> MinusculeSystem::index_of(const IntVector& v) const {
  auto it = std::lower_bound(psi_.begin(), psi_.end(), v);
  if (it == psi_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - psi_.begin());
}

}  // namespace mforge
