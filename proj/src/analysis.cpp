#include "mforge/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mforge/cartan.hpp"

namespace mforge::analysis {

std::optional<std::string> Weight::indicator_label() const {
  std::optional<std::string> hit;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    if (values[i] != 1 || hit) return std::nullopt;
    hit = labels[i];
  }
  return hit;
}

Weight weight(const MinusculeSystem& sys, const IntVector& v) {
  if (!sys.contains(v)) throw NotInPsi("vertex " + v.str() + " is not in Psi");
  Weight w;
  for (const auto& root : sys.delta()) {
    w.labels.push_back(root.label);
    w.values.push_back(c_value(v, root.vector));
  }
  return w;
}

ExtremeVectors extreme_vectors(const MinusculeSystem& sys) {
  ExtremeVectors result;
  for (const auto& v : sys.psi()) {
    bool raisable = false, lowerable = false;
    for (const auto& root : sys.delta()) {
      if (sys.contains(v + root.vector)) raisable = true;
      if (sys.contains(v - root.vector)) lowerable = true;
    }
    if (!raisable) result.highest.push_back(v);
    if (!lowerable) result.lowest.push_back(v);
  }
  return result;
}

namespace {

// Undirected connectivity of the graph v ~ v +- a.
bool vertex_graph_connected(const MinusculeSystem& sys) {
  if (sys.size() == 0) return true;
  std::vector<bool> seen(sys.size(), false);
  std::deque<std::size_t> frontier{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& root : sys.delta()) {
      for (const IntVector& u :
           {sys.vertex(i) + root.vector, sys.vertex(i) - root.vector}) {
        if (auto j = sys.index_of(u); j && !seen[*j]) {
          seen[*j] = true;
          ++visited;
          frontier.push_back(*j);
        }
      }
    }
  }
  return visited == sys.size();
}

}  // namespace

IrreducibilityCertificate irreducibility_certificate(const MinusculeSystem& sys) {
  const TypeLabel type = classify_cartan(cartan_matrix(sys.delta()));
  if (type.family == TypeLabel::Unknown || type.affine)
    throw NotFiniteType("the simple system is not of finite type (" + type.str() + ")");

  IrreducibilityCertificate cert;
  cert.highest = extreme_vectors(sys).highest;

  std::map<std::vector<int>, int> counts;
  for (const auto& v : sys.psi()) ++counts[weight(sys, v).values];
  cert.weights_distinct = true;
  for (const auto& [w, n] : counts)
    if (n > 1) cert.weights_distinct = false;

  cert.graph_connected = vertex_graph_connected(sys);

  if (sys.size() == 1 && weight(sys, sys.vertex(0)).is_zero()) {
    cert.verdict = IrreducibilityCertificate::Inconclusive;
    cert.reason = "TrivialModule";
  } else if (cert.highest.size() != 1) {
    cert.verdict = IrreducibilityCertificate::Inconclusive;
    cert.reason = "expected exactly one highest weight vertex, found " +
                  std::to_string(cert.highest.size());
  } else if (!cert.weights_distinct) {
    cert.verdict = IrreducibilityCertificate::Inconclusive;
    cert.reason = "weights are not multiplicity-free";
  } else if (!cert.graph_connected) {
    cert.verdict = IrreducibilityCertificate::Inconclusive;
    cert.reason = "vertex graph is disconnected";
  } else {
    cert.verdict = IrreducibilityCertificate::Irreducible;
  }
  return cert;
}

bool CrystalGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::deque<std::size_t> frontier{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        ++visited;
        frontier.push_back(j);
      }
  }
  return visited == vertices.size();
}

CrystalGraph crystal_graph(const MinusculeSystem& sys) {
  CrystalGraph g;
  g.vertices = sys.psi();
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (const auto& root : sys.delta())
      if (auto j = sys.index_of(sys.vertex(i) + root.vector))
        g.edges.push_back({i, *j, root.label});
  return g;
}

namespace {

// Exact solver for M x = d where M's columns are the simple roots.
// Precomputes the row reduction once; solutions are unique because the
// columns are required to be linearly independent.
class ConeSolver {
 public:
  explicit ConeSolver(const SimpleSystem& delta)
      : rows_(delta.dim()), cols_(delta.size()) {
    std::vector<std::vector<mpq_class>> m(rows_, std::vector<mpq_class>(cols_, 0));
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) m[i][j] = delta[j].vector[i];
    transform_.assign(rows_, std::vector<mpq_class>(rows_, 0));
    for (std::size_t i = 0; i < rows_; ++i) transform_[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && m[pivot][col] == 0) ++pivot;
      if (pivot == rows_)
        throw DependentSimpleSystem("simple roots are linearly dependent");
      std::swap(m[pivot], m[row]);
      std::swap(transform_[pivot], transform_[row]);
      const mpq_class inv = 1 / m[row][col];
      for (auto& x : m[row]) x *= inv;
      for (auto& x : transform_[row]) x *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || m[r][col] == 0) continue;
        const mpq_class factor = m[r][col];
        for (std::size_t cc = 0; cc < cols_; ++cc) m[r][cc] -= factor * m[row][cc];
        for (std::size_t cc = 0; cc < rows_; ++cc)
          transform_[r][cc] -= factor * transform_[row][cc];
      }
      ++row;
    }
    if (row < cols_)
      throw DependentSimpleSystem("simple roots are linearly dependent");
  }

  /// The unique x with M x = d, or nullopt when d is outside the span.
  std::optional<std::vector<mpq_class>> solve(const IntVector& d) const {
    std::vector<mpq_class> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) y[i] += transform_[i][j] * d[j];
    for (std::size_t i = cols_; i < rows_; ++i)
      if (y[i] != 0) return std::nullopt;
    y.resize(cols_);
    return y;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<mpq_class>> transform_;
};

}  // namespace

std::optional<std::size_t> WeightPoset::meet(std::size_t i, std::size_t j) const {
  const int m = meet_[i][j];
  if (m < 0) return std::nullopt;
  return static_cast<std::size_t>(m);
}

std::optional<std::size_t> WeightPoset::join(std::size_t i, std::size_t j) const {
  const int m = join_[i][j];
  if (m < 0) return std::nullopt;
  return static_cast<std::size_t>(m);
}

WeightPoset weight_poset(const MinusculeSystem& sys) {
  const ConeSolver solver(sys.delta());
  const std::size_t n = sys.size();

  WeightPoset poset;
  poset.vertices_ = sys.psi();
  poset.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        poset.leq_[i][j] = true;
        continue;
      }
      if (auto coeffs = solver.solve(sys.vertex(j) - sys.vertex(i))) {
        bool nonneg = true;
        for (const auto& c : *coeffs)
          if (c < 0) nonneg = false;
        poset.leq_[i][j] = nonneg;
      }
    }

  auto bound = [&](std::size_t i, std::size_t j, bool lower) -> int {
    // the greatest lower (least upper) bound, when it exists
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k) {
      const bool ok = lower ? poset.leq_[k][i] && poset.leq_[k][j]
                            : poset.leq_[i][k] && poset.leq_[j][k];
      if (ok) bounds.push_back(k);
    }
    for (std::size_t cand : bounds) {
      bool extreme = true;
      for (std::size_t k : bounds) {
        const bool dominates = lower ? poset.leq_[k][cand] : poset.leq_[cand][k];
        if (!dominates) {
          extreme = false;
          break;
        }
      }
      if (extreme) return static_cast<int>(cand);
    }
    return -1;
  };

  poset.meet_.assign(n, std::vector<int>(n, -1));
  poset.join_.assign(n, std::vector<int>(n, -1));
  poset.lattice_ = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      poset.meet_[i][j] = bound(i, j, true);
      poset.join_[i][j] = bound(i, j, false);
      if (poset.meet_[i][j] < 0 || poset.join_[i][j] < 0) poset.lattice_ = false;
    }

  poset.distributive_ = poset.lattice_;
  if (poset.lattice_) {
    for (std::size_t x = 0; x < n && poset.distributive_; ++x)
      for (std::size_t y = 0; y < n && poset.distributive_; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const int lhs = poset.meet_[x][poset.join_[y][z]];
          const int rhs = poset.join_[poset.meet_[x][y]][poset.meet_[x][z]];
          if (lhs != rhs) {
            poset.distributive_ = false;
            break;
          }
        }
  }
  return poset;
}

}  // namespace mforge::analysis
