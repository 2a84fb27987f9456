#ifndef MFORGE_SYSTEM_HPP
#define MFORGE_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mforge/int_vector.hpp"

namespace mforge {

struct SimpleRoot {
  std::string label;
  IntVector vector;
};

/// An ordered, label-indexed list of candidate simple roots.  All vectors
/// must be nonzero, share one dimension, and be pairwise distinct; labels
/// must be unique.
class SimpleSystem {
 public:
  SimpleSystem(std::size_t dim, std::vector<SimpleRoot> roots);
  explicit SimpleSystem(std::vector<SimpleRoot> roots);

  std::size_t size() const { return roots_.size(); }
  std::size_t dim() const { return dim_; }
  const SimpleRoot& operator[](std::size_t i) const { return roots_[i]; }
  auto begin() const { return roots_.begin(); }
  auto end() const { return roots_.end(); }

  bool has_label(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel
  const IntVector& vector_of(const std::string& label) const;

 private:
  std::size_t dim_;
  std::vector<SimpleRoot> roots_;
};

/// The eigenvalue c(v, a) with 2(v.a) = c(a.a).  Returns nullopt when no
/// such c exists in {-1, 0, +1}.
std::optional<int> c_value_opt(const IntVector& v, const IntVector& a);

/// Throwing variant: NotMinusculeValue carries the offending ratio.
int c_value(const IntVector& v, const IntVector& a);

struct Violation {
  IntVector vertex;
  std::string root_label;
  std::string reason;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Total check of the minuscule-system axioms over every (vertex, root)
/// pair.  Violations are reported in canonical (vertex, root) order.
ValidationReport validate_system(const std::vector<IntVector>& psi,
                                 const SimpleSystem& delta);

struct ValidationError : Error {
  ValidationError(std::string msg, ValidationReport r)
      : Error(std::move(msg)), report(std::move(r)) {}
  ValidationReport report;
};

/// A validated pair (Psi, Delta).  Psi is stored sorted, so basis indices
/// are canonical and reports are reproducible.
class MinusculeSystem {
 public:
  /// Validates and seals; throws ValidationError with the full report on
  /// failure.
  static MinusculeSystem build(std::vector<IntVector> psi, SimpleSystem delta);

  /// Skips validation.  For subsystem constructions whose validity is
  /// guaranteed; asserts the axioms in debug builds.
  static MinusculeSystem trusted(std::vector<IntVector> psi, SimpleSystem delta);

  const std::vector<IntVector>& psi() const { return psi_; }
  const SimpleSystem& delta() const { return delta_; }
  std::size_t size() const { return psi_.size(); }
  std::size_t dim() const { return delta_.dim(); }

  bool contains(const IntVector& v) const { return index_of(v).has_value(); }
  std::optional<std::size_t> index_of(const IntVector& v) const;
  const IntVector& vertex(std::size_t i) const { return psi_[i]; }

  /// c(psi[i], a) for a validated pair; never fails.
  int c(std::size_t vertex_index, const IntVector& a) const {
    return c_value(psi_[vertex_index], a);
  }

 private:
  MinusculeSystem(std::vector<IntVector> psi, SimpleSystem delta);

  std::vector<IntVector> psi_;  // sorted, duplicate-free
  SimpleSystem delta_;
};

}  // namespace mforge

#endif
