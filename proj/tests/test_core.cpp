#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mforge/cartan.hpp"
#include "mforge/catalog.hpp"
#include "mforge/errors.hpp"
#include "mforge/json_io.hpp"
#include "mforge/system.hpp"

using namespace mforge;

namespace {

// Small deterministic generator for property-style checks.
struct Lcg {
  unsigned long state = 0x2545F4914F6CDD1DUL;
  long next(long lo, long hi) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return lo + static_cast<long>((state >> 33) % (hi - lo + 1));
  }
  IntVector vec(std::size_t dim, long lo = -9, long hi = 9) {
    std::vector<mpz_class> c;
    for (std::size_t i = 0; i < dim; ++i) c.emplace_back(next(lo, hi));
    return IntVector(std::move(c));
  }
};

const std::vector<catalog::EntrySpec>& sample_entries() {
  static const std::vector<catalog::EntrySpec> entries = {
      {.name = "hesse"},
      {.name = "e6_slice", .level = 8},
      {.name = "e6_affine", .level = -8},
      {.name = "hypercube", .n = 4},
      {.name = "a_slice", .n = 5, .k = 2},
      {.name = "a_affine", .n = 4, .k = 1},
      {.name = "halfcube", .n = 5, .parity = '-'},
      {.name = "cross_d", .n = 4},
      {.name = "cross_c", .n = 3},
  };
  return entries;
}

}  // namespace

TEST_CASE("dot product on basic examples") {
  CHECK(dot(IntVector{1, 0}, IntVector{0, 1}) == 0);
  const IntVector v01 = catalog::hesse_vertex(0, 1);
  CHECK(v01 == IntVector{3, 3, -1, -1, -1, -1, -1, -1});
  CHECK(dot(v01, v01) == 24);
  const IntVector alpha7{-2, -2, -2, -2, 2, 2, 2, 2};
  CHECK(dot(alpha7, alpha7) == 32);
  CHECK_THROWS_AS(dot(IntVector{1, 2}, IntVector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("dot product is symmetric and bilinear") {
  Lcg rng;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(rng.next(1, 6));
    const IntVector u = rng.vec(dim), v = rng.vec(dim), w = rng.vec(dim);
    const mpz_class s = rng.next(-5, 5), t = rng.next(-5, 5);
    CHECK(dot(u, v) == dot(v, u));
    CHECK(dot(s * u + t * v, w) == s * dot(u, w) + t * dot(v, w));
  }
}

TEST_CASE("eigenvalue extraction from the defining equation") {
  const IntVector v01 = catalog::hesse_vertex(0, 1);
  const IntVector alpha0{4, -4, 0, 0, 0, 0, 0, 0};
  const IntVector alpha1{0, 4, -4, 0, 0, 0, 0, 0};
  CHECK(c_value(IntVector{1, 0}, IntVector{0, 3}) == 0);
  CHECK(c_value(v01, alpha1) == 1);
  CHECK(c_value(v01, alpha0) == 0);
  // 2(a.a)/(a.a) = 2 is out of range.
  CHECK_THROWS_AS(c_value(alpha1, alpha1), NotMinusculeValue);
  CHECK(!c_value_opt(alpha1, alpha1).has_value());
}

TEST_CASE("simple system construction rejects malformed input") {
  CHECK_THROWS_AS(SimpleSystem(2, {{"a", IntVector{0, 0}}}), ZeroRoot);
  CHECK_THROWS_AS(
      SimpleSystem(2, {{"a", IntVector{1, 0}}, {"a", IntVector{0, 1}}}), Error);
  CHECK_THROWS_AS(
      SimpleSystem(2, {{"a", IntVector{1, 0}}, {"b", IntVector{1, 0}}}), Error);
  CHECK_THROWS_AS(SimpleSystem(2, {{"a", IntVector{1, 0, 0}}}),
                  DimensionMismatch);
}

TEST_CASE("system validation accepts the stock systems") {
  for (const auto& spec : sample_entries()) {
    const MinusculeSystem sys = catalog::build(spec);
    CHECK(validate_system(sys.psi(), sys.delta()).ok());
  }
}

TEST_CASE("removing one vertex breaks the pairing axiom") {
  const MinusculeSystem hesse = catalog::build({.name = "hesse"});
  const IntVector v01 = catalog::hesse_vertex(0, 1);
  const IntVector v02 = catalog::hesse_vertex(0, 2);
  std::vector<IntVector> psi;
  for (const auto& v : hesse.psi())
    if (v != v02) psi.push_back(v);

  const ValidationReport report = validate_system(psi, hesse.delta());
  CHECK(!report.ok());
  const bool found = std::any_of(
      report.violations.begin(), report.violations.end(), [&](const Violation& x) {
        return x.vertex == v01 && x.root_label == "alpha1";
      });
  CHECK(found);

  CHECK_THROWS_AS(MinusculeSystem::build(psi, hesse.delta()), ValidationError);
}

TEST_CASE("exactly one eigenvalue/membership case holds per pair") {
  for (const auto& spec : sample_entries()) {
    const MinusculeSystem sys = catalog::build(spec);
    for (const auto& v : sys.psi())
      for (const auto& root : sys.delta()) {
        const int c = c_value(v, root.vector);
        const bool up = sys.contains(v + root.vector);
        const bool down = sys.contains(v - root.vector);
        CHECK(up == (c == -1));
        CHECK(down == (c == 1));
      }
  }
}

TEST_CASE("Cartan matrix entries and symmetrizer") {
  const MinusculeSystem hesse = catalog::build({.name = "hesse"});
  const CartanMatrix A = cartan_matrix(hesse.delta());

  for (std::size_t i = 0; i < A.rank(); ++i) CHECK(A.at(i, i) == 2);
  const std::size_t a0 = hesse.delta().index_of("alpha0");
  const std::size_t a1 = hesse.delta().index_of("alpha1");
  const std::size_t a3 = hesse.delta().index_of("alpha3");
  const std::size_t a7 = hesse.delta().index_of("alpha7");
  CHECK(A.at(a0, a1) == -1);
  CHECK(A.at(a7, a3) == -1);
  for (const std::size_t i : {a0, a1}) CHECK(A.at(a7, i) == 0);

  for (const auto& spec : sample_entries()) {
    const CartanMatrix M = cartan_matrix(catalog::build(spec).delta());
    for (std::size_t i = 0; i < M.rank(); ++i)
      for (std::size_t j = 0; j < M.rank(); ++j)
        CHECK(M.symmetrizer[i] * M.at(i, j) == M.symmetrizer[j] * M.at(j, i));
  }
}

TEST_CASE("Cartan matrix construction rejects bad simple systems") {
  CHECK_THROWS_AS(
      cartan_matrix(SimpleSystem(2, {{"a", IntVector{3, 0}}, {"b", IntVector{-1, 1}}})),
      NonIntegerEntry);
  CHECK_THROWS_AS(
      cartan_matrix(SimpleSystem(2, {{"a", IntVector{1, 0}}, {"b", IntVector{1, 1}}})),
      GcmViolation);
}

TEST_CASE("Dynkin classification of the stock systems") {
  auto type_of = [](const MinusculeSystem& sys) {
    return classify_cartan(cartan_matrix(sys.delta())).str();
  };
  const MinusculeSystem hesse = catalog::build({.name = "hesse"});
  CHECK(type_of(hesse) == "E7^(1)");
  CHECK(type_of(catalog::drop_root(hesse, "alpha0")) == "E7");
  CHECK(type_of(catalog::build({.name = "e6_slice", .level = 8})) == "E6");
  CHECK(type_of(catalog::build({.name = "e6_affine", .level = 8})) == "E6^(1)");

  for (int n = 3; n <= 6; ++n) {
    const auto cube = catalog::build({.name = "hypercube", .n = n});
    CHECK(type_of(cube) == "B" + std::to_string(n) + "^(1)");
    CHECK(type_of(catalog::drop_root(cube, "alpha0")) == "B" + std::to_string(n));
  }
  for (int n = 4; n <= 6; ++n) {
    const auto cross = catalog::build({.name = "cross_d", .n = n});
    CHECK(type_of(cross) == "D" + std::to_string(n) + "^(1)");
    CHECK(type_of(catalog::drop_root(cross, "alpha0")) == "D" + std::to_string(n));
    const auto half = catalog::build({.name = "halfcube", .n = n});
    CHECK(type_of(half) == "D" + std::to_string(n) + "^(1)");
  }
  for (int n = 2; n <= 6; ++n) {
    const auto cross = catalog::build({.name = "cross_c", .n = n});
    CHECK(type_of(cross) == "C" + std::to_string(n) + "^(1)");
    CHECK(type_of(catalog::drop_root(cross, "alpha0''")) == "C" + std::to_string(n));
  }
  for (int n = 3; n <= 6; ++n) {
    CHECK(type_of(catalog::build({.name = "a_slice", .n = n, .k = 1})) ==
          "A" + std::to_string(n - 1));
    CHECK(type_of(catalog::build({.name = "a_affine", .n = n, .k = 1})) ==
          "A" + std::to_string(n - 1) + "^(1)");
  }

  const CartanMatrix one{{"a"}, {{2}}, {mpq_class(1)}};
  CHECK(classify_cartan(one).str() == "A1");
}

TEST_CASE("JSON round trip preserves the system") {
  for (const auto& spec : sample_entries()) {
    const MinusculeSystem sys = catalog::build(spec);
    const RawSystem raw = system_from_json(system_to_json(sys));
    CHECK(raw.psi == sys.psi());
    REQUIRE(raw.delta.size() == sys.delta().size());
    for (std::size_t i = 0; i < raw.delta.size(); ++i) {
      CHECK(raw.delta[i].label == sys.delta()[i].label);
      CHECK(raw.delta[i].vector == sys.delta()[i].vector);
    }
  }
}

TEST_CASE("JSON reader rejects malformed documents") {
  CHECK_THROWS_AS(system_from_json(nlohmann::json::array()), mforge::ParseError);
  nlohmann::json j;
  j["format"] = 2;
  CHECK_THROWS_AS(system_from_json(j), mforge::ParseError);
  nlohmann::json k;
  k["dim"] = 2;
  k["psi"] = {{1, 0, 0}};
  k["delta"] = nlohmann::json::array();
  CHECK_THROWS_AS(system_from_json(k), mforge::ParseError);
}
