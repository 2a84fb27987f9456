#ifndef MFORGE_ANALYSIS_HPP
#define MFORGE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mforge/system.hpp"

namespace mforge::analysis {

/// The tuple (c(v, a))_{a in Delta}, i.e. the H-eigenvalues of b_v.
struct Weight {
  std::vector<std::string> labels;
  std::vector<int> values;

  bool operator==(const Weight& o) const { return values == o.values && labels == o.labels; }
  bool is_zero() const {
    for (int x : values)
      if (x) return false;
    return true;
  }
  /// True when the weight is the indicator of exactly one label (a
  /// fundamental-weight pattern); returns that label.
  std::optional<std::string> indicator_label() const;
};

Weight weight(const MinusculeSystem& sys, const IntVector& v);  // NotInPsi

struct ExtremeVectors {
  std::vector<IntVector> highest;  // no raising operator applies
  std::vector<IntVector> lowest;   // no lowering operator applies
};

ExtremeVectors extreme_vectors(const MinusculeSystem& sys);

struct IrreducibilityCertificate {
  enum Verdict { Irreducible, Inconclusive };
  std::vector<IntVector> highest;
  bool weights_distinct = false;
  bool graph_connected = false;
  Verdict verdict = Inconclusive;
  std::string reason;  // set when Inconclusive
};

/// Sufficient criterion: a unique highest weight vertex, injective weights,
/// and a connected vertex graph force irreducibility.  Never claims
/// reducibility.  Requires a finite-type simple system.
IrreducibilityCertificate irreducibility_certificate(const MinusculeSystem& sys);

struct CrystalEdge {
  std::size_t from, to;  // vertex indices; vertex(to) - vertex(from) = root
  std::string label;
};

struct CrystalGraph {
  std::vector<IntVector> vertices;
  std::vector<CrystalEdge> edges;

  bool connected() const;
};

CrystalGraph crystal_graph(const MinusculeSystem& sys);

/// The order v1 <= v2 iff v2 - v1 is a nonnegative rational combination of
/// the simple roots, with brute-forced meet/join tables.
class WeightPoset {
 public:
  std::size_t size() const { return vertices_.size(); }
  const std::vector<IntVector>& vertices() const { return vertices_; }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> join(std::size_t i, std::size_t j) const;
  bool is_lattice() const { return lattice_; }
  bool is_distributive() const { return distributive_; }

 private:
  friend WeightPoset weight_poset(const MinusculeSystem&);

  std::vector<IntVector> vertices_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;  // -1 when absent
  bool lattice_ = false;
  bool distributive_ = false;
};

/// Requires Delta linearly independent (DependentSimpleSystem otherwise).
WeightPoset weight_poset(const MinusculeSystem& sys);

}  // namespace mforge::analysis

#endif
