#include "mforge/json_io.hpp"

#include <algorithm>

namespace mforge {

using nlohmann::json;

json vector_to_json(const IntVector& v) {
  json arr = json::array();
  for (const auto& c : v.coords()) {
    if (!c.fits_slong_p())
      throw Error("coordinate " + c.get_str() + " does not fit in a JSON integer");
    arr.push_back(c.get_si());
  }
  return arr;
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<mpz_class> coords;
  coords.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer coordinate");
    coords.emplace_back(static_cast<long>(x.get<std::int64_t>()));
  }
  return IntVector(std::move(coords));
}

json system_to_json(const std::vector<IntVector>& psi, const SimpleSystem& delta) {
  std::vector<IntVector> sorted(psi);
  std::sort(sorted.begin(), sorted.end());

  json j;
  j["format"] = 1;
  j["dim"] = delta.dim();
  j["psi"] = json::array();
  for (const auto& v : sorted) j["psi"].push_back(vector_to_json(v));
  j["delta"] = json::array();
  for (const auto& r : delta)
    j["delta"].push_back({{"label", r.label}, {"vector", vector_to_json(r.vector)}});
  return j;
}

json system_to_json(const MinusculeSystem& sys) {
  return system_to_json(sys.psi(), sys.delta());
}

RawSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("system JSON must be an object");
  if (j.contains("format") && j["format"] != 1)
    throw ParseError("unsupported format version");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("missing integer field \"dim\"");
  if (!j.contains("psi") || !j["psi"].is_array())
    throw ParseError("missing array field \"psi\"");
  if (!j.contains("delta") || !j["delta"].is_array())
    throw ParseError("missing array field \"delta\"");

  const auto dim = j["dim"].get<std::size_t>();
  std::vector<IntVector> psi;
  for (const auto& v : j["psi"]) {
    psi.push_back(vector_from_json(v));
    if (psi.back().dim() != dim)
      throw ParseError("psi vertex " + psi.back().str() + " has the wrong dimension");
  }
  std::vector<SimpleRoot> roots;
  for (const auto& r : j["delta"]) {
    if (!r.is_object() || !r.contains("label") || !r.contains("vector"))
      throw ParseError("delta entries need \"label\" and \"vector\" fields");
    roots.push_back({r["label"].get<std::string>(), vector_from_json(r["vector"])});
    if (roots.back().vector.dim() != dim)
      throw ParseError("root " + roots.back().label + " has the wrong dimension");
  }
  return {std::move(psi), SimpleSystem(dim, std::move(roots))};
}

}  // namespace mforge
