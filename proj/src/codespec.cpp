#include "subcode/codespec.hpp"

#include <fstream>
#include <sstream>

#include "subcode/error.hpp"

namespace subcode {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::usage, std::string("code spec is missing '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::usage, std::string("code spec field '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

Poly poly_or_empty(const json& j, const char* key) { return j.contains(key) ? poly_from_json(j.at(key)) : Poly{}; }

Subspace initial_from(const BaseField& F, const json& m, std::size_t n) {
  const Matrix basis = matrix_from_json(m);
  require(basis.cols() == n, "initial point must have n columns");
  check_entries(F, basis);
  return Subspace::row_space(F, basis);
}

std::shared_ptr<const ExtField> field_over(const std::shared_ptr<const BaseField>& base, Poly modulus, unsigned degree) {
  if (modulus.empty()) modulus = default_modulus(*base, degree);
  auto F = std::make_shared<const ExtField>(base, std::move(modulus));
  require(degree == 0 || F->degree() == degree, "modulus degree does not match n");
  return F;
}

CyclicOrbitCode orbit_from(const json& j, const json& initial) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto r = get_or<unsigned>(j, "r", 1);
  auto base = make_base_field(p, r, poly_or_empty(j, "modulus_q"));
  const std::string kind = get_or<std::string>(j, "kind", "primitive");
  const OrbitKind k = parse_orbit_kind(kind);
  if (k == OrbitKind::general) {
    const Matrix gen = matrix_from_json(field(j, "generator"));
    return CyclicOrbitCode::general(base, gen, initial_from(*base, initial, gen.rows()));
  }
  if (k == OrbitKind::completely_reducible) {
    std::vector<std::shared_ptr<const ExtField>> blocks;
    std::size_t n = 0;
    for (const auto& m : field(j, "block_moduli")) {
      blocks.push_back(field_over(base, poly_from_json(m), 0));
      n += blocks.back()->degree();
    }
    require(!j.contains("n") || get<std::size_t>(j, "n") == n, "block moduli degrees do not add up to n");
    return CyclicOrbitCode::completely_reducible(std::move(blocks), initial_from(*base, initial, n));
  }
  const auto n = get<unsigned>(j, "n");
  auto F = field_over(base, poly_or_empty(j, "modulus_n"), n);
  auto code = CyclicOrbitCode::irreducible(F, initial_from(*base, initial, n));
  if (code.kind() != k)
    fail(ErrorKind::usage, "modulus_n gives a " + std::string(to_string(code.kind())) + " generator, spec says " + kind);
  return code;
}

}  // namespace

std::string LoadedCode::family() const {
  switch (code.index()) {
    case 0: return "desarguesian_spread";
    case 1: return "cyclic_orbit";
    default: return "orbit_union";
  }
}

std::shared_ptr<const BaseField> LoadedCode::base_ptr() const {
  if (auto s = spread()) return s->tower().base;
  if (auto o = orbit()) return o->base_ptr();
  return orbit_union()->orbits().front().base_ptr();
}

const BaseField& LoadedCode::base() const { return *base_ptr(); }

std::size_t LoadedCode::n() const {
  if (auto s = spread()) return s->n();
  if (auto o = orbit()) return o->n();
  return orbit_union()->orbits().front().n();
}

std::size_t LoadedCode::k() const {
  if (auto s = spread()) return s->k();
  if (auto o = orbit()) return o->k();
  return orbit_union()->orbits().front().k();
}

BigInt LoadedCode::size() const {
  if (auto s = spread()) return s->size();
  if (auto o = orbit()) return o->orbit_order();
  return orbit_union()->size();
}

Subspace encode_message(const LoadedCode& code, const BigInt& i, std::optional<Convention> c) {
  if (auto s = code.spread()) {
    require(c.has_value(), "spread codes need --convention adhoc or --convention enum");
    if (i < 0 || i >= s->size()) fail(ErrorKind::usage, "message exceeds code size");
    return s->encode(s->message(i), *c);
  }
  if (auto o = code.orbit()) return o->enc2(i);
  return code.orbit_union()->enc3(i);
}

BigInt retrieve_message(const LoadedCode& code, const Subspace& u, std::optional<Convention> c) {
  if (auto s = code.spread()) {
    require(c.has_value(), "spread codes need --convention adhoc or --convention enum");
    return s->retrieve(u, *c).to_integer();
  }
  if (auto o = code.orbit()) return o->retrieve2_codeword(u);
  return code.orbit_union()->retrieve3_codeword(u);
}

std::vector<Subspace> materialize(const LoadedCode& code, std::optional<Convention> c, std::size_t limit) {
  if (auto s = code.spread()) return s->codebook(c.value_or(Convention::adhoc), limit);
  if (auto o = code.orbit()) return o->codebook(limit);
  std::vector<Subspace> out;
  for (const auto& o : code.orbit_union()->orbits()) {
    auto part = o.codebook(limit);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Matrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
  std::vector<std::vector<Fq>> rows;
  try {
    for (const auto& row : j) rows.push_back(row.get<std::vector<Fq>>());
  } catch (const json::exception&) {
    fail(ErrorKind::usage, "matrix rows must be arrays of non-negative integers");
  }
  return Matrix::from_rows(rows);
}

json matrix_to_json(const Matrix& m) { return m.to_rows(); }

Poly poly_from_json(const json& j) {
  try {
    return j.get<Poly>();
  } catch (const json::exception&) {
    fail(ErrorKind::usage, "polynomial must be an array of non-negative integers, lowest degree first");
  }
}

FieldTower tower_from_json(const json& j) {
  return FieldTower::make(get<std::uint32_t>(j, "p"), get_or<unsigned>(j, "r", 1), poly_or_empty(j, "modulus_q"),
                          get<unsigned>(j, "k"), poly_or_empty(j, "modulus_k"));
}

LoadedCode code_from_json(const json& j) {
  require(j.is_object(), "code spec must be a JSON object");
  const auto family = get<std::string>(j, "family");
  if (family == "desarguesian_spread") {
    return LoadedCode{SpreadCode(tower_from_json(j), get<std::size_t>(j, "m"))};
  }
  if (family == "cyclic_orbit") return LoadedCode{orbit_from(j, field(j, "initial_point"))};
  if (family == "orbit_union") {
    std::vector<CyclicOrbitCode> orbits;
    for (const auto& m : field(j, "initials")) orbits.push_back(orbit_from(j, m));
    return LoadedCode{OrbitUnionCode(std::move(orbits))};
  }
  fail(ErrorKind::usage, "unknown code family '" + family + "'");
}

SemiLinearIsometry isometry_from_json(const json& j) {
  require(j.is_object(), "isometry must be a JSON object");
  return {matrix_from_json(field(j, "A")), get_or<unsigned>(j, "frobenius_power", 0)};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::usage, "invalid JSON in " + path.string() + ": " + e.what());
  }
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return matrix_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      fail(ErrorKind::usage, "invalid JSON matrix in " + path.string() + ": " + e.what());
    }
  }
  return parse_matrix_text(text);
}

}  // namespace subcode
