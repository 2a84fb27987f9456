#ifndef MFORGE_INT_VECTOR_HPP
#define MFORGE_INT_VECTOR_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mforge/errors.hpp"

namespace mforge {

/// A point of the ambient lattice: a fixed-length tuple of arbitrary
/// precision integers.  Ordering is lexicographic, which gives every
/// vertex set a canonical indexing.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<mpz_class> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> xs) {
    coords_.reserve(xs.size());
    for (long x : xs) coords_.emplace_back(x);
  }

  std::size_t dim() const { return coords_.size(); }
  const mpz_class& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<mpz_class>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  IntVector operator+(const IntVector& o) const {
    check_dim(o);
    std::vector<mpz_class> r(coords_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return IntVector(std::move(r));
  }

  IntVector operator-(const IntVector& o) const {
    check_dim(o);
    std::vector<mpz_class> r(coords_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
    return IntVector(std::move(r));
  }

  IntVector operator-() const {
    std::vector<mpz_class> r(coords_);
    for (auto& c : r) c = -c;
    return IntVector(std::move(r));
  }

  friend IntVector operator*(const mpz_class& s, const IntVector& v) {
    std::vector<mpz_class> r(v.coords_);
    for (auto& c : r) c *= s;
    return IntVector(std::move(r));
  }

  bool operator==(const IntVector& o) const { return coords_ == o.coords_; }

  std::strong_ordering operator<=>(const IntVector& o) const {
    const std::size_t n = std::min(coords_.size(), o.coords_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int c = cmp(coords_[i], o.coords_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return coords_.size() <=> o.coords_.size();
  }

  /// Renders as "(3, 3, -1, ...)".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].get_str();
    }
    s += ")";
    return s;
  }

 private:
  void check_dim(const IntVector& o) const {
    if (coords_.size() != o.coords_.size())
      throw DimensionMismatch("vector dimensions differ: " +
                              std::to_string(coords_.size()) + " vs " +
                              std::to_string(o.coords_.size()));
  }

  std::vector<mpz_class> coords_;
};

/// Exact scalar product.
inline mpz_class dot(const IntVector& u, const IntVector& v) {
  if (u.dim() != v.dim())
    throw DimensionMismatch("dot: dimensions differ: " + std::to_string(u.dim()) +
                            " vs " + std::to_string(v.dim()));
  mpz_class s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

inline mpz_class squared_distance(const IntVector& u, const IntVector& v) {
  IntVector d = u - v;
  return dot(d, d);
}

}  // namespace mforge

#endif
