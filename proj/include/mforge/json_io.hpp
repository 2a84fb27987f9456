#ifndef MFORGE_JSON_IO_HPP
#define MFORGE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mforge/system.hpp"

namespace mforge {

/// The interchange format:
///   { "format": 1, "dim": n, "psi": [[int,...],...],
///     "delta": [{"label": str, "vector": [int,...]},...] }
/// Emission sorts psi lexicographically and preserves delta order.
nlohmann::json system_to_json(const std::vector<IntVector>& psi,
                              const SimpleSystem& delta);
nlohmann::json system_to_json(const MinusculeSystem& sys);

/// An as-yet unvalidated (psi, delta) pair read from JSON.
struct RawSystem {
  std::vector<IntVector> psi;
  SimpleSystem delta;
};

RawSystem system_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j);

}  // namespace mforge

#endif
