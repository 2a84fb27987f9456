#ifndef MFORGE_OPERATORS_HPP
#define MFORGE_OPERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mforge/cartan.hpp"
#include "mforge/system.hpp"

namespace mforge {

/// Exact column-sparse endomorphism over the rationals.  Columns hold
/// (row, coefficient) entries sorted by row with no zero coefficients, so
/// equality is structural.
class LinearOperator {
 public:
  using Entry = std::pair<std::size_t, mpq_class>;
  using Column = std::vector<Entry>;

  explicit LinearOperator(std::size_t dim) : columns_(dim) {}

  std::size_t dim() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_[j]; }

  /// Adds coeff at (row, col), merging and dropping zeros.
  void add_entry(std::size_t row, std::size_t col, const mpq_class& coeff);

  bool is_zero() const;
  bool is_diagonal() const;
  /// True when every stored coefficient is an integer.
  bool has_integer_coefficients() const;

  LinearOperator operator+(const LinearOperator& o) const;
  LinearOperator operator-(const LinearOperator& o) const;
  /// Composition: (*this) after o.
  LinearOperator operator*(const LinearOperator& o) const;
  LinearOperator scaled(const mpq_class& s) const;

  bool operator==(const LinearOperator& o) const { return columns_ == o.columns_; }

  /// Index of the first column on which the two operators differ.
  std::optional<std::size_t> first_differing_column(const LinearOperator& o) const;

  std::vector<std::vector<mpq_class>> dense() const;

 private:
  std::vector<Column> columns_;
};

LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator add(const LinearOperator& a, const LinearOperator& b);
LinearOperator scale(const mpq_class& s, const LinearOperator& a);
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// The raising/lowering/diagonal generator triples on V_Psi, indexed
/// parallel to the simple system.
struct GeneratorFamily {
  MinusculeSystem system;
  std::vector<LinearOperator> E, F, H;

  const LinearOperator& e(const std::string& label) const {
    return E[system.delta().index_of(label)];
  }
  const LinearOperator& f(const std::string& label) const {
    return F[system.delta().index_of(label)];
  }
  const LinearOperator& h(const std::string& label) const {
    return H[system.delta().index_of(label)];
  }
};

GeneratorFamily build_operators(const MinusculeSystem& sys);

struct RelationVerdict {
  std::string relation;                // e.g. "generator(5)" or "serre-e"
  std::vector<std::string> roots;      // labels involved
  bool pass = false;
  std::optional<IntVector> counterexample;  // first violating basis vector
};

struct RelationReport {
  std::vector<RelationVerdict> verdicts;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Verifies the twelve pairwise generator identities for all applicable ordered
/// pairs of simple roots.
RelationReport check_generator_identities(const GeneratorFamily& fam);

/// Verifies the defining presentation relations (commutation, bracket,
/// and Serre relations) as operator identities.
RelationReport check_presentation(const GeneratorFamily& fam, const CartanMatrix& A);

}  // namespace mforge

#endif
