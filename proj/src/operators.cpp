#include "mforge/operators.hpp"

#include <algorithm>

namespace mforge {

void LinearOperator::add_entry(std::size_t row, std::size_t col,
                               const mpq_class& coeff) {
  if (coeff == 0) return;
  Column& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {row, coeff});
  }
}

bool LinearOperator::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

bool LinearOperator::is_diagonal() const {
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [row, coeff] : columns_[j])
      if (row != j) return false;
  return true;
}

bool LinearOperator::has_integer_coefficients() const {
  for (const auto& c : columns_)
    for (const auto& [row, coeff] : c)
      if (coeff.get_den() != 1) return false;
  return true;
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("operator addition: dimensions differ");
  LinearOperator r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Column& a = columns_[j];
    const Column& b = o.columns_[j];
    Column& out = r.columns_[j];
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[k].first < a[i].first) {
        out.push_back(b[k++]);
      } else {
        mpq_class s = a[i].second + b[k].second;
        if (s != 0) out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++k;
      }
    }
  }
  return r;
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const {
  return *this + o.scaled(-1);
}

LinearOperator LinearOperator::operator*(const LinearOperator& o) const {
  if (dim() != o.dim())
    throw DimensionMismatch("operator composition: dimensions differ");
  LinearOperator r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    // column j of result = this applied to column j of o
    for (const auto& [mid, coeff] : o.columns_[j])
      for (const auto& [row, coeff2] : columns_[mid])
        r.add_entry(row, j, coeff * coeff2);
  }
  return r;
}

LinearOperator LinearOperator::scaled(const mpq_class& s) const {
  LinearOperator r(dim());
  if (s == 0) return r;
  r.columns_ = columns_;
  for (auto& c : r.columns_)
    for (auto& [row, coeff] : c) coeff *= s;
  return r;
}

std::optional<std::size_t> LinearOperator::first_differing_column(
    const LinearOperator& o) const {
  const std::size_t n = std::min(dim(), o.dim());
  for (std::size_t j = 0; j < n; ++j)
    if (columns_[j] != o.columns_[j]) return j;
  if (dim() != o.dim()) return n;
  return std::nullopt;
}

std::vector<std::vector<mpq_class>> LinearOperator::dense() const {
  std::vector<std::vector<mpq_class>> m(dim(), std::vector<mpq_class>(dim(), 0));
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [row, coeff] : columns_[j]) m[row][j] = coeff;
  return m;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  return a * b;
}
LinearOperator add(const LinearOperator& a, const LinearOperator& b) {
  return a + b;
}
LinearOperator scale(const mpq_class& s, const LinearOperator& a) {
  return a.scaled(s);
}
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return a * b - b * a;
}

GeneratorFamily build_operators(const MinusculeSystem& sys) {
  const std::size_t dim = sys.size();
  GeneratorFamily fam{sys, {}, {}, {}};
  for (const auto& root : sys.delta()) {
    LinearOperator e(dim), f(dim), h(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const IntVector& v = sys.vertex(j);
      if (auto up = sys.index_of(v + root.vector)) e.add_entry(*up, j, 1);
      if (auto down = sys.index_of(v - root.vector)) f.add_entry(*down, j, 1);
      h.add_entry(j, j, sys.c(j, root.vector));
    }
    fam.E.push_back(std::move(e));
    fam.F.push_back(std::move(f));
    fam.H.push_back(std::move(h));
  }
  return fam;
}

std::size_t RelationReport::failures() const {
  std::size_t n = 0;
  for (const auto& v : verdicts)
    if (!v.pass) ++n;
  return n;
}

namespace {

void record(RelationReport& report, const MinusculeSystem& sys, std::string id,
            std::vector<std::string> roots, const LinearOperator& lhs,
            const LinearOperator& rhs) {
  RelationVerdict v{std::move(id), std::move(roots), true, std::nullopt};
  if (auto col = lhs.first_differing_column(rhs)) {
    v.pass = false;
    v.counterexample = sys.vertex(*col);
  }
  report.verdicts.push_back(std::move(v));
}

}  // namespace

RelationReport check_generator_identities(const GeneratorFamily& fam) {
  const MinusculeSystem& sys = fam.system;
  const CartanMatrix A = cartan_matrix(sys.delta());
  const std::size_t n = sys.delta().size();
  RelationReport report;

  for (std::size_t i = 0; i < n; ++i) {
    const std::string& la = A.labels[i];
    const LinearOperator &Ea = fam.E[i], &Fa = fam.F[i], &Ha = fam.H[i];

    record(report, sys, "generator(2)a", {la}, Ha * Ea, Ea);
    record(report, sys, "generator(2)b", {la}, (Ea * Ha).scaled(-1), Ea);
    record(report, sys, "generator(4)a", {la}, Ha * Fa, Fa.scaled(-1));
    record(report, sys, "generator(4)b", {la}, (Fa * Ha).scaled(-1), Fa.scaled(-1));
    record(report, sys, "generator(7)", {la}, Ea * Ea, LinearOperator(sys.size()));
    record(report, sys, "generator(10)", {la}, Fa * Fa, LinearOperator(sys.size()));

    for (std::size_t j = 0; j < n; ++j) {
      const std::string& lb = A.labels[j];
      const LinearOperator &Eb = fam.E[j], &Fb = fam.F[j];
      const mpz_class& aij = A.entries[i][j];
      const mpq_class aij_q(aij);

      record(report, sys, "generator(1)", {la, lb}, Ha * Eb,
             Eb * Ha + Eb.scaled(aij_q));
      record(report, sys, "generator(3)", {la, lb}, Ha * Fb,
             Fb * Ha - Fb.scaled(aij_q));
      if (i != j && aij < 0) {
        record(report, sys, "generator(5)a", {la, lb}, Ea * Fb,
               LinearOperator(sys.size()));
        record(report, sys, "generator(5)b", {la, lb}, Fb * Ea,
               LinearOperator(sys.size()));
      }
      if (i != j && aij == 0) {
        record(report, sys, "generator(6)", {la, lb}, Ea * Fb, Fb * Ea);
        record(report, sys, "generator(8)", {la, lb}, Ea * Eb, Eb * Ea);
        record(report, sys, "generator(11)", {la, lb}, Fa * Fb, Fb * Fa);
      }
      if (i != j && aij == -1) {
        record(report, sys, "generator(9)", {la, lb}, Ea * Eb * Ea,
               LinearOperator(sys.size()));
        record(report, sys, "generator(12)", {la, lb}, Fa * Fb * Fa,
               LinearOperator(sys.size()));
      }
    }
  }
  return report;
}

RelationReport check_presentation(const GeneratorFamily& fam,
                                  const CartanMatrix& A) {
  const MinusculeSystem& sys = fam.system;
  const std::size_t n = sys.delta().size();
  const LinearOperator zero(sys.size());
  RelationReport report;

  for (std::size_t i = 0; i < n; ++i) {
    const std::string& li = A.labels[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& lj = A.labels[j];
      const mpq_class aij(A.entries[i][j]);

      record(report, sys, "[h,h]", {li, lj}, commutator(fam.H[i], fam.H[j]), zero);
      record(report, sys, "[h,e]", {li, lj}, commutator(fam.H[i], fam.E[j]),
             fam.E[j].scaled(aij));
      record(report, sys, "[h,f]", {li, lj}, commutator(fam.H[i], fam.F[j]),
             fam.F[j].scaled(-aij));
      record(report, sys, "[e,f]", {li, lj}, commutator(fam.E[i], fam.F[j]),
             i == j ? fam.H[i] : zero);

      if (i != j) {
        // ad(E_i)^{1-A_ij}(E_j), with early exit once a bracket vanishes
        mpz_class times = 1 - A.entries[i][j];
        LinearOperator acc_e = fam.E[j];
        LinearOperator acc_f = fam.F[j];
        for (mpz_class k = 0; k < times && !acc_e.is_zero(); ++k)
          acc_e = commutator(fam.E[i], acc_e);
        for (mpz_class k = 0; k < times && !acc_f.is_zero(); ++k)
          acc_f = commutator(fam.F[i], acc_f);
        record(report, sys, "serre-e", {li, lj}, acc_e, zero);
        record(report, sys, "serre-f", {li, lj}, acc_f, zero);
      }
    }
  }
  return report;
}

}  // namespace mforge
