#ifndef MFORGE_CARTAN_HPP
#define MFORGE_CARTAN_HPP

#include <string>
#include <vector>

#include "mforge/system.hpp"

namespace mforge {

/// An integer generalized Cartan matrix with a symmetrizability witness
/// d_a = (a.a)/2 per root.
struct CartanMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<mpz_class>> entries;
  std::vector<mpq_class> symmetrizer;

  std::size_t rank() const { return labels.size(); }
  const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// A_{a,b} = 2(a.b)/(a.a).  Throws NonIntegerEntry when the quotient is not
/// an integer and GcmViolation when the sign or zero-pattern conditions fail.
CartanMatrix cartan_matrix(const SimpleSystem& delta);

/// Dynkin type of a GCM, up to relabelling of the nodes.
struct TypeLabel {
  enum Family { A, B, C, D, E, F, G, Unknown };
  Family family = Unknown;
  int rank = 0;
  bool affine = false;

  bool operator==(const TypeLabel&) const = default;
  std::string str() const;

  static TypeLabel finite(Family f, int n) { return {f, n, false}; }
  static TypeLabel affine_type(Family f, int n) { return {f, n, true}; }
  static TypeLabel unknown() { return {}; }
};

/// Matches the unlabelled Dynkin diagram of A against the built-in table of
/// finite and untwisted affine diagrams.  Returns Unknown when nothing fits.
TypeLabel classify_cartan(const CartanMatrix& A);

}  // namespace mforge

#endif
