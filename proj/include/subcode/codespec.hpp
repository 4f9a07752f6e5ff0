#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "subcode/isometry.hpp"
#include "subcode/orbit.hpp"
#include "subcode/spread.hpp"

namespace subcode {

/// A code loaded from a spec document. Exactly one family is held.
struct LoadedCode {
  std::variant<SpreadCode, CyclicOrbitCode, OrbitUnionCode> code;

  std::string family() const;
  const BaseField& base() const;
  std::shared_ptr<const BaseField> base_ptr() const;
  std::size_t n() const;
  std::size_t k() const;
  BigInt size() const;

  const SpreadCode* spread() const { return std::get_if<SpreadCode>(&code); }
  const CyclicOrbitCode* orbit() const { return std::get_if<CyclicOrbitCode>(&code); }
  const OrbitUnionCode* orbit_union() const { return std::get_if<OrbitUnionCode>(&code); }
};

/// Spreads need a convention; orbit codes ignore it.
Subspace encode_message(const LoadedCode& code, const BigInt& i, std::optional<Convention> c);
/// Orbit codes are searched; usage error for a spread without a convention.
BigInt retrieve_message(const LoadedCode& code, const Subspace& u, std::optional<Convention> c);
std::vector<Subspace> materialize(const LoadedCode& code, std::optional<Convention> c, std::size_t limit = 1u << 16);

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Poly poly_from_json(const nlohmann::json& j);

FieldTower tower_from_json(const nlohmann::json& j);
LoadedCode code_from_json(const nlohmann::json& j);
SemiLinearIsometry isometry_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Matrix in the plain row format, or a JSON nested array when the file starts with '['.
Matrix read_matrix_file(const std::filesystem::path& path);

}  // namespace subcode
