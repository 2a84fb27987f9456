#include "mforge/cartan.hpp"

#include <algorithm>
#include <map>

namespace mforge {

CartanMatrix cartan_matrix(const SimpleSystem& delta) {
  const std::size_t n = delta.size();
  CartanMatrix A;
  A.labels.reserve(n);
  for (const auto& r : delta) A.labels.push_back(r.label);
  A.entries.assign(n, std::vector<mpz_class>(n));
  A.symmetrizer.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    const IntVector& a = delta[i].vector;
    const mpz_class norm = dot(a, a);
    A.symmetrizer.emplace_back(mpq_class(norm, 2));
    A.symmetrizer.back().canonicalize();
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class num = 2 * dot(a, delta[j].vector);
      if (num % norm != 0)
        throw NonIntegerEntry("entry (" + delta[i].label + ", " + delta[j].label +
                              ") = " + num.get_str() + "/" + norm.get_str() +
                              " is not an integer");
      A.entries[i][j] = num / norm;
    }
  }

  std::string problems;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (A.entries[i][j] > 0)
        problems += "entry (" + A.labels[i] + ", " + A.labels[j] + ") = " +
                    A.entries[i][j].get_str() + " is positive; ";
      if ((A.entries[i][j] == 0) != (A.entries[j][i] == 0))
        problems += "zero pattern asymmetric at (" + A.labels[i] + ", " +
                    A.labels[j] + "); ";
    }
  }
  if (!problems.empty()) throw GcmViolation(problems);
  return A;
}

std::string TypeLabel::str() const {
  static const char* names = "ABCDEFG";
  if (family == Unknown) return "Unknown";
  std::string s(1, names[family]);
  s += std::to_string(rank);
  if (affine) s += "^(1)";
  return s;
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat blank(std::size_t n) {
  Mat m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

void edge(Mat& m, std::size_t i, std::size_t j, int aij = -1, int aji = -1) {
  m[i][j] = aij;
  m[j][i] = aji;
}

void path(Mat& m, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) edge(m, i, i + 1);
}

// One concrete Cartan matrix per diagram; classification is up to node
// relabelling, so any valid labelling works here.
Mat diagram(TypeLabel t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  const std::size_t size = t.affine ? n + 1 : n;
  Mat m = blank(size);
  switch (t.family) {
    case TypeLabel::A:
      if (!t.affine) {
        path(m, 0, n - 1);
      } else if (n == 1) {
        edge(m, 0, 1, -2, -2);
      } else {
        path(m, 0, n);
        edge(m, n, 0);
      }
      break;
    case TypeLabel::B:
      if (!t.affine) {
        path(m, 0, n - 2);
        edge(m, n - 2, n - 1, -1, -2);
      } else {
        edge(m, 0, 2);
        edge(m, 1, 2);
        path(m, 2, n - 1);
        edge(m, n - 1, n, -1, -2);
      }
      break;
    case TypeLabel::C:
      if (!t.affine) {
        path(m, 0, n - 2);
        edge(m, n - 2, n - 1, -2, -1);
      } else {
        edge(m, 0, 1, -1, -2);
        path(m, 1, n - 1);
        edge(m, n - 1, n, -2, -1);
      }
      break;
    case TypeLabel::D:
      if (!t.affine) {
        path(m, 0, n - 3);
        edge(m, n - 3, n - 2);
        edge(m, n - 3, n - 1);
      } else {
        edge(m, 0, 2);
        edge(m, 1, 2);
        path(m, 2, n - 2);
        edge(m, n - 2, n - 1);
        edge(m, n - 2, n);
      }
      break;
    case TypeLabel::E:
      if (n == 6 && !t.affine) {
        path(m, 0, 4);
        edge(m, 5, 2);
      } else if (n == 6 && t.affine) {
        path(m, 0, 4);
        edge(m, 5, 2);
        edge(m, 6, 5);
      } else if (n == 7 && !t.affine) {
        path(m, 0, 5);
        edge(m, 6, 2);
      } else if (n == 7 && t.affine) {
        path(m, 0, 6);
        edge(m, 7, 3);
      } else if (n == 8 && !t.affine) {
        path(m, 0, 6);
        edge(m, 7, 2);
      } else {
        path(m, 0, 7);
        edge(m, 8, 2);
      }
      break;
    case TypeLabel::F:
      if (!t.affine) {
        edge(m, 0, 1);
        edge(m, 1, 2, -1, -2);
        edge(m, 2, 3);
      } else {
        path(m, 0, 2);
        edge(m, 2, 3, -1, -2);
        edge(m, 3, 4);
      }
      break;
    case TypeLabel::G:
      if (!t.affine) {
        edge(m, 0, 1, -1, -3);
      } else {
        edge(m, 0, 1);
        edge(m, 1, 2, -1, -3);
      }
      break;
    case TypeLabel::Unknown:
      break;
  }
  return m;
}

// Per-node multiset of incident (a_ij, a_ji) pairs.
std::vector<std::vector<std::pair<int, int>>> signatures(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::pair<int, int>>> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j] != 0) sig[i].emplace_back(m[i][j], m[j][i]);
    }
    std::sort(sig[i].begin(), sig[i].end());
  }
  return sig;
}

bool extend(const Mat& x, const Mat& y, std::vector<int>& map,
            std::vector<bool>& used,
            const std::vector<std::vector<std::pair<int, int>>>& sx,
            const std::vector<std::vector<std::pair<int, int>>>& sy,
            std::size_t i) {
  const std::size_t n = x.size();
  if (i == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand] || sx[i] != sy[cand]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k)
      ok = x[i][k] == y[cand][map[k]] && x[k][i] == y[map[k]][cand];
    if (!ok) continue;
    map[i] = static_cast<int>(cand);
    used[cand] = true;
    if (extend(x, y, map, used, sx, sy, i + 1)) return true;
    used[cand] = false;
  }
  return false;
}

bool isomorphic(const Mat& x, const Mat& y) {
  if (x.size() != y.size()) return false;
  auto sx = signatures(x), sy = signatures(y);
  auto sorted_x = sx, sorted_y = sy;
  std::sort(sorted_x.begin(), sorted_x.end());
  std::sort(sorted_y.begin(), sorted_y.end());
  if (sorted_x != sorted_y) return false;
  std::vector<int> map(x.size(), -1);
  std::vector<bool> used(x.size(), false);
  return extend(x, y, map, used, sx, sy, 0);
}

}  // namespace

TypeLabel classify_cartan(const CartanMatrix& A) {
  const std::size_t n = A.rank();
  Mat m(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!A.entries[i][j].fits_sint_p()) return TypeLabel::unknown();
      m[i][j] = static_cast<int>(A.entries[i][j].get_si());
    }

  std::vector<TypeLabel> candidates;
  for (bool affine : {false, true}) {
    const int nodes = static_cast<int>(n);
    const int r = affine ? nodes - 1 : nodes;
    if (r < 1) continue;
    if (r >= 1) candidates.push_back({TypeLabel::A, r, affine});
    if (r >= 2) candidates.push_back({TypeLabel::C, r, affine});
    if (r >= 3) candidates.push_back({TypeLabel::B, r, affine});
    if (r >= 4) candidates.push_back({TypeLabel::D, r, affine});
    if (r >= 6 && r <= 8) candidates.push_back({TypeLabel::E, r, affine});
    if (r == 4) candidates.push_back({TypeLabel::F, r, affine});
    if (r == 2) candidates.push_back({TypeLabel::G, r, affine});
  }
  for (const auto& t : candidates)
    if (isomorphic(m, diagram(t))) return t;
  return TypeLabel::unknown();
}

}  // namespace mforge
