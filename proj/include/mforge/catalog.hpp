#ifndef MFORGE_CATALOG_HPP
#define MFORGE_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "mforge/cartan.hpp"
#include "mforge/system.hpp"

namespace mforge::catalog {

/// Parameters selecting one catalog system.
///
/// Names and parameters:
///   hesse                        56 vertices, affine E7 simple system
///   e6_slice   level in {24, 8, -8, -24}        E6 slices of the 56-vertex set
///   e6_affine  level as above                   same slices, affine E6 roots
///   hypercube  n >= 3                           2^n vertices, affine B_n roots
///   a_slice    n >= 3, 0 <= k <= n              A_{n-1} hypercube slice
///   a_affine   n >= 3, 0 <= k <= n              same slice, affine A_{n-1} roots
///   halfcube   n >= 4, parity '+' or '-'        2^{n-1} vertices, affine D_n roots
///   cross_d    n >= 4                           2n vertices, affine D_n roots
///   cross_c    n >= 2                           2n vertices, affine C_n roots
struct EntrySpec {
  std::string name;
  int n = 0;
  int k = 0;
  int level = 0;
  char parity = '+';
};

struct EntryInfo {
  std::string name;
  std::string parameters;
  std::string expected_type;   // of the full (affine) simple system
  std::string dimension;       // |Psi| as a formula
};

std::vector<EntryInfo> list_entries();

MinusculeSystem build(const EntrySpec& spec);

/// Same vertex set, simple system restricted to the kept labels.
MinusculeSystem restrict_system(const MinusculeSystem& sys,
                                const std::vector<std::string>& keep);

/// Convenience: drop one label (the usual passage from affine to finite type).
MinusculeSystem drop_root(const MinusculeSystem& sys, const std::string& label);

struct SliceSpec {
  IntVector normal;
  mpz_class level;
};

/// Psi(n, l) with Delta(n); both must be nonempty.
MinusculeSystem slice(const MinusculeSystem& sys, const SliceSpec& spec);

/// Closure conditions for (psiSub, deltaSub) inside sys.
bool subsystem_check(const MinusculeSystem& sys,
                     const std::vector<IntVector>& psi_sub,
                     const std::vector<std::string>& delta_sub);

/// Groups Psi by v.normal; levels sorted descending.  Each part carries the
/// simple roots orthogonal to the normal.
std::vector<std::pair<mpz_class, MinusculeSystem>> partition_by_slices(
    const MinusculeSystem& sys, const IntVector& normal);

// Frequently needed hesse data.
IntVector hesse_vertex(int i, int j);                // v_{i,j}, 0 <= i < j <= 7
IntVector hesse_slice_normal();                      // v_{0,7}

}  // namespace mforge::catalog

#endif
