#include "subcode/subspace.hpp"

#include <algorithm>

#include "subcode/error.hpp"

namespace subcode {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const BaseField& F, const Matrix& generators) {
  check_entries(F, generators);
  RrefResult r = rref(F, generators);
  Subspace s(generators.cols());
  s.basis_ = r.reduced.row_block(0, r.rank);
  return s;
}

bool Subspace::contains(const BaseField& F, std::span<const Fq> v) const {
  require(v.size() == ambient_, "vector length does not match the ambient space");
  Matrix m = basis_;
  m.append_row(v);
  return rank(F, m) == dim();
}

std::size_t subspace_distance(const BaseField& F, const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient(), "subspace distance: ambient dimensions differ");
  return u.dim() + v.dim() - 2 * intersection_dim(F, u.basis(), v.basis());
}

ProjPoint::ProjPoint(const ExtField& F, std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) F.check(c);
  auto it = std::find_if(coords_.begin(), coords_.end(), [](const FieldElement& a) { return !a.is_zero(); });
  require(it != coords_.end(), "projective point cannot be the zero vector");
  require(*it == F.one(), "projective point is not normalized (first nonzero entry must be 1)");
  leading_ = static_cast<std::size_t>(it - coords_.begin());
}

ProjPoint normalize_point(const ExtField& F, std::span<const FieldElement> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const FieldElement& a) { return !a.is_zero(); });
  require(it != v.end(), "cannot normalize the zero vector");
  const FieldElement lead_inv = F.inv(*it);
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(F.mul(a, lead_inv));
  return ProjPoint(F, std::move(out));
}

std::vector<FieldElement> lift_vector(const ExtField& F, std::span<const Fq> v) {
  const std::size_t k = F.degree();
  require(v.size() % k == 0, "vector length is not a multiple of k");
  std::vector<FieldElement> u;
  u.reserve(v.size() / k);
  for (std::size_t i = 0; i < v.size(); i += k) u.push_back(psi(F, v.subspan(i, k)));
  return u;
}

Subspace des(const ExtField& F, const ProjPoint& pt) {
  const std::size_t k = F.degree();
  Matrix blocks(k, 0);
  for (const auto& u : pt.coords()) blocks = concat(blocks, rho(F, u));
  return Subspace::row_space(F.base(), blocks);
}

ProjPoint des_inv(const ExtField& F, const Subspace& u) {
  const std::size_t k = F.degree();
  if (u.dim() != k || u.ambient() % k != 0) fail(ErrorKind::not_codeword, "not a spread codeword");
  const auto lifted = lift_vector(F, u.basis().row(0));
  ProjPoint pt = normalize_point(F, lifted);
  if (des(F, pt) != u) fail(ErrorKind::not_codeword, "not a spread codeword");
  return pt;
}

}  // namespace subcode
