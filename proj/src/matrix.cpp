#include "subcode/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "subcode/error.hpp"

namespace subcode {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Fq>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols(), "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<std::vector<Fq>> Matrix::to_rows() const {
  std::vector<std::vector<Fq>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row block out of range");
  Matrix out(count, cols_);
  std::copy(entries_.begin() + first * cols_, entries_.begin() + (first + count) * cols_, out.entries_.begin());
  return out;
}

Matrix Matrix::col_block(std::size_t first, std::size_t count) const {
  require(first + count <= cols_, "column block out of range");
  Matrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

void Matrix::append_row(std::span<const Fq> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  require(values.size() == cols_, "appended row has the wrong length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ (m.rows() * 131 + m.cols());
  for (Fq c : m.entries()) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

void check_entries(const BaseField& F, const Matrix& m) {
  for (Fq c : m.entries()) require(F.contains(c), "matrix entry " + std::to_string(c) + " outside F_q");
}

Matrix add(const BaseField& F, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shapes differ in addition");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = F.add(a(r, c), b(r, c));
  return out;
}

Matrix multiply(const BaseField& F, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix shapes incompatible for multiplication");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Fq x = a(r, t);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = F.add(out(r, c), F.mul(x, b(t, c)));
    }
  }
  return out;
}

std::vector<Fq> multiply(const BaseField& F, std::span<const Fq> v, const Matrix& m) {
  require(v.size() == m.rows(), "vector length does not match matrix rows");
  std::vector<Fq> out(m.cols(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(v[t], m(t, c)));
  }
  return out;
}

Matrix power(const BaseField& F, const Matrix& a, const BigInt& e) {
  require(a.rows() == a.cols(), "matrix power needs a square matrix");
  require(e >= 0, "negative matrix exponent");
  Matrix result = Matrix::identity(a.rows());
  if (e == 0) return result;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    result = multiply(F, result, result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = multiply(F, result, a);
  }
  return result;
}

std::optional<Matrix> inverse(const BaseField& F, const Matrix& a) {
  require(a.rows() == a.cols(), "inverse needs a square matrix");
  const std::size_t n = a.rows();
  const RrefResult r = rref(F, concat(a, Matrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  return r.reduced.col_block(n, n);
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0 && top.cols() == 0) return bottom;
  if (bottom.rows() == 0 && bottom.cols() == 0) return top;
  require(top.cols() == bottom.cols(), "column counts differ when stacking");
  Matrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

Matrix concat(const Matrix& left, const Matrix& right) {
  require(left.rows() == right.rows(), "row counts differ when concatenating");
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::copy(left.row(r).begin(), left.row(r).end(), out.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return out;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require(b.rows() == b.cols(), "block-diagonal blocks must be square");
    n += b.rows();
  }
  Matrix out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, offset + c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

RrefResult rref(const BaseField& F, Matrix m) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(lead).begin());
    const Fq s = F.inv(m(lead, c));
    for (auto& x : m.row(lead)) x = F.mul(x, s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Fq f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(lead, j)));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const BaseField& F, const Matrix& m) { return rref(F, m).rank; }

std::size_t intersection_dim(const BaseField& F, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "intersection_dim: ambient dimensions differ");
  return rank(F, a) + rank(F, b) - rank(F, stack(a, b));
}

Matrix companion_matrix(const BaseField& F, const Poly& poly_in) {
  Poly poly = poly_in;
  poly_trim(poly);
  require(poly.size() >= 2, "companion matrix needs a polynomial of degree at least 1");
  require(poly.back() == 1, "companion matrix needs a monic polynomial");
  const std::size_t k = poly.size() - 1;
  Matrix P(k, k);
  for (std::size_t r = 0; r + 1 < k; ++r) P(r, r + 1) = 1;
  for (std::size_t c = 0; c < k; ++c) P(k - 1, c) = F.neg(poly[c]);
  return P;
}

Matrix rho(const ExtField& F, const FieldElement& a) { return companion_power(F, a); }

FieldElement rho_inv(const ExtField& F, const Matrix& m) {
  const std::size_t k = F.degree();
  require(m.rows() == k && m.cols() == k, "rho_inv expects a k x k matrix");
  FieldElement a = psi(F, m.row(0));
  if (rho(F, a) != m) fail(ErrorKind::consistency, "matrix is not in F_q[P]");
  return a;
}

Matrix companion_power(const ExtField& F, const BigInt& i) {
  return companion_power(F, F.pow(F.generator(), i));
}

Matrix companion_power(const ExtField& F, const FieldElement& alpha_i) {
  F.check(alpha_i);
  const BaseField& B = F.base();
  const std::size_t k = F.degree();
  const Poly& p = F.modulus();
  Matrix out(k, k);
  std::copy(alpha_i.coeffs.begin(), alpha_i.coeffs.end(), out.row(0).begin());
  for (std::size_t r = 1; r < k; ++r) {
    const Fq last = out(r - 1, k - 1);
    out(r, 0) = B.neg(B.mul(last, p[0]));
    for (std::size_t c = 1; c < k; ++c) out(r, c) = B.sub(out(r - 1, c - 1), B.mul(last, p[c]));
  }
  return out;
}

std::string to_text(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

Matrix parse_matrix_text(std::string_view text) {
  Matrix m;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Fq> row;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      Fq v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      require(ec == std::errc() && ptr == token.data() + token.size(), "bad matrix entry '" + token + "'");
      row.push_back(v);
    }
    m.append_row(row);
  }
  return m;
}

}  // namespace subcode
