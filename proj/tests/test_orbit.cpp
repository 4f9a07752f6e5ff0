#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "subcode/error.hpp"
#include "subcode/orbit.hpp"
#include "subcode/spread.hpp"

using namespace subcode;

namespace {

std::shared_ptr<const ExtField> field(std::uint32_t p, Poly modulus) {
  return std::make_shared<const ExtField>(make_base_field(p, 1), std::move(modulus));
}

Subspace rs(const BaseField& F, std::vector<std::vector<Fq>> rows) { return Subspace::row_space(F, Matrix::from_rows(rows)); }

CyclicOrbitCode example3() {
  auto F = field(2, {1, 1, 0, 0, 1});
  return CyclicOrbitCode::irreducible(F, rs(F->base(), {{1, 0, 0, 0}, {0, 1, 1, 0}}));
}

}  // namespace

TEST_CASE("spread orbit") {
  const auto code = example3();
  CHECK(code.kind() == OrbitKind::primitive);
  CHECK(code.gen_order() == 15);
  CHECK(code.orbit_order() == 5);
  const auto book = code.codebook();
  CHECK(book.size() == 5);
  CHECK(min_distance(code.base(), book) == 4);
  CHECK(verify_spread(code.base(), book, 2, 4).ok);
  CHECK(code.enc2(0) == code.initial());
  CHECK(code.enc2(1).basis() == Matrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 1}}));
  const Matrix P = code.generator();
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto direct = Subspace::row_space(code.base(), oracle::mat_mul(code.base(), code.initial().basis(),
                                                                         oracle::mat_pow(code.base(), P, i)));
    CHECK(code.enc2(i) == direct);
    CHECK(code.retrieve2(code.generator_power(i)) == i);
    CHECK(code.retrieve2_codeword(code.enc2(i)) == i);
    // exponents past the orbit order land on the same codeword
    CHECK(Subspace::row_space(code.base(), multiply(code.base(), code.initial().basis(), code.generator_power(i + 5))) ==
          code.enc2(i));
  }
  CHECK(code.retrieve2(code.generator_power(7)) == 2);
  CHECK_THROWS(code.enc2(5));
  std::set<std::vector<Fq>> distinct;
  for (const auto& u : book) distinct.insert(std::vector<Fq>(u.basis().entries().begin(), u.basis().entries().end()));
  CHECK(distinct.size() == 5);
}

TEST_CASE("permutation orbit") {
  auto F2 = make_base_field(2, 1);
  const auto code = CyclicOrbitCode::general(F2, Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                             rs(*F2, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(code.gen_order() == 2);
  CHECK(code.orbit_order() == 2);
  const auto book = code.codebook();
  CHECK(book[1] == rs(*F2, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(min_distance(*F2, book) == 2);
  CHECK(orbit_order(*F2, rs(*F2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), code.generator()) == 1);
  CHECK(code.retrieve2(code.generator()) == 1);
  CHECK_THROWS(min_distance(*F2, std::vector{book[0]}));
}

TEST_CASE("orbit order divides the generator order") {
  oracle::Gen g(21);
  for (const auto& mod : {Poly{1, 1, 0, 0, 1}, Poly{1, 1, 1, 1, 1}, Poly{1, 0, 1, 0, 0, 1}, Poly{1, 1, 0, 0, 0, 0, 1}}) {
    auto F = field(2, mod);
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t n = F->degree(), k = 1 + g.below(n - 1);
      const auto U = Subspace::row_space(F->base(), g.matrix(F->base(), k, n));
      if (U.dim() == 0) continue;
      const auto code = CyclicOrbitCode::irreducible(F, U);
      CHECK(code.gen_order() % code.orbit_order() == 0);
      const auto book = code.codebook();
      std::set<std::vector<Fq>> distinct;
      for (const auto& u : book) distinct.insert({u.basis().entries().begin(), u.basis().entries().end()});
      CHECK(distinct.size() == book.size());
      // no smaller positive exponent fixes U
      BigInt brute = 1;
      Subspace cur = Subspace::row_space(F->base(), multiply(F->base(), U.basis(), code.generator()));
      while (cur != U) {
        cur = Subspace::row_space(F->base(), multiply(F->base(), cur.basis(), code.generator()));
        ++brute;
      }
      CHECK(brute == code.orbit_order());
      for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(code.orbit_order()); ++i)
        CHECK(code.retrieve2(code.generator_power(i)) == i);
    }
  }
}

TEST_CASE("discrete logs") {
  auto F16 = field(2, {1, 1, 0, 0, 1});
  const auto a = F16->generator();
  const auto beta = F16->from_label(0b1011);  // a^3 + a + 1
  CHECK(pohlig_hellman(*F16, beta, a, F16->group_order_factors()) == 7);
  CHECK(pohlig_hellman(*F16, F16->one(), a, F16->group_order_factors()) == 0);
  CHECK(dlog_naive(*F16, a, a) == 1);

  auto F5 = field(2, {1, 1, 1, 1, 1});
  const auto b = F5->generator();
  const auto target = F5->from_label(0b1111);  // a^3 + a^2 + a + 1
  CHECK(dlog_naive(*F5, target, b) == 4);
  CHECK(pohlig_hellman(*F5, target, b, factor_divisor(F5->group_order_factors(), 5)) == 4);
  try {
    pohlig_hellman(*F5, F5->from_label(0b0011), b, factor_divisor(F5->group_order_factors(), 5));
    FAIL("expected not_in_subgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_in_subgroup);
  }
  CHECK_THROWS_AS(dlog_naive(*F5, F5->from_label(0b0011), b), Error);

  for (auto F : {field(2, default_modulus(*make_base_field(2, 1), 8)), field(3, default_modulus(*make_base_field(3, 1), 4))}) {
    const auto alpha = F->generator();
    const auto total = static_cast<std::uint64_t>(F->size());
    for (std::uint64_t l = 1; l < total; ++l) {
      const auto x = F->from_label(l);
      CHECK(pohlig_hellman(*F, x, alpha, F->group_order_factors()) == dlog_naive(*F, x, alpha));
    }
  }

  auto F20 = field(2, default_modulus(*make_base_field(2, 1), 20));
  oracle::Gen g(99);
  for (int i = 0; i < 1000; ++i) {
    const BigInt e = g.below(static_cast<std::uint64_t>(F20->group_order()));
    CHECK(pohlig_hellman(*F20, F20->pow(F20->generator(), e), F20->generator(), F20->group_order_factors()) == e);
  }
}

TEST_CASE("crt") {
  const std::vector<BigInt> r{2, 4}, m{3, 7};
  CHECK(crt(r, m) == std::pair<BigInt, BigInt>{11, 21});
  const std::vector<BigInt> r2{1, 3}, m2{4, 6};
  CHECK(crt(r2, m2) == std::pair<BigInt, BigInt>{9, 12});
  const std::vector<BigInt> r3{1, 2}, m3{4, 6};
  try {
    crt(r3, m3);
    FAIL("expected inconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::inconsistent);
  }
  // brute-force scan
  for (std::uint64_t a = 1; a <= 12; ++a)
    for (std::uint64_t b = 1; b <= 12; ++b)
      for (std::uint64_t x = 0; x < a * b; ++x) {
        const std::vector<BigInt> rr{x % a, x % b}, mm{a, b};
        const auto [y, l] = crt(rr, mm);
        CHECK(y % a == x % a);
        CHECK(y % b == x % b);
        CHECK(y < l);
      }
}

TEST_CASE("completely reducible orbit") {
  auto Fa = field(2, {1, 1, 1}), Fb = field(2, {1, 1, 0, 1});
  auto F2 = Fa->base_ptr();
  const auto U = rs(*F2, {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 1}});
  const auto code = CyclicOrbitCode::completely_reducible({Fa, Fb}, U);
  CHECK(code.gen_order() == 21);
  CHECK(code.block_exponents(code.generator_power(11)) == std::vector<BigInt>{2, 4});
  const std::vector<BigInt> e{2, 4};
  CHECK(reducible_retrieve(code, e) == 11);
  for (std::uint64_t i = 0; i < 21; ++i) {
    CHECK(code.generator_power(i) == oracle::mat_pow(*F2, code.generator(), i));
    CHECK(reducible_retrieve(code, code.block_exponents(code.generator_power(i))) == i);
  }
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(code.orbit_order()); ++i)
    CHECK(code.retrieve2(code.generator_power(i)) == i);

  auto F15 = field(2, {1, 1, 0, 0, 1});
  const auto U2 = rs(*F2, {{1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 1, 0}});
  const auto big = CyclicOrbitCode::completely_reducible({F15, Fb}, U2);
  CHECK(big.gen_order() == 105);
  for (std::uint64_t i = 0; i < 105; ++i) CHECK(reducible_retrieve(big, big.block_exponents(big.generator_power(i))) == i);

  // a matrix with nonzero off-diagonal blocks is not a power of P
  Matrix bad = code.generator_power(3);
  bad(0, 4) ^= 1;
  CHECK_THROWS_AS(code.retrieve2(bad), Error);
}

TEST_CASE("union of two orbits") {
  auto F = field(2, {1, 1, 0, 0, 1});
  const auto& B = F->base();
  const auto u1 = CyclicOrbitCode::irreducible(F, rs(B, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const auto u2 = CyclicOrbitCode::irreducible(F, rs(B, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  const OrbitUnionCode code({u1, u2});
  CHECK(code.c_star() == 15);
  CHECK(code.size() == 30);
  CHECK(code.verify_disjoint());
  const auto beta = F->from_label(0b1011);
  CHECK(code.retrieve3(2, rho(*F, beta)) == 22);
  CHECK(code.enc3(0) == u1.initial());
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto w = code.enc3(i);
    const auto [j, l] = code.locate(w);
    CHECK(code.retrieve3(j, u1.generator_power(l)) == i);
    CHECK(code.retrieve3_codeword(w) == i);
  }
  CHECK_THROWS(code.enc3(30));
  CHECK_THROWS(code.retrieve3(3, rho(*F, beta)));

  const auto spread = CyclicOrbitCode::irreducible(F, rs(B, {{1, 0, 0, 0}, {0, 1, 1, 0}}));
  try {
    OrbitUnionCode mixed({u1, spread});
    FAIL("expected unequal cardinalities to be rejected");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("unequal cardinalities") != std::string::npos);
  }
}

TEST_CASE("non-primitive irreducible orbit") {
  auto F = field(2, {1, 1, 1, 1, 1});
  const auto code = CyclicOrbitCode::irreducible(F, rs(F->base(), {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(code.kind() == OrbitKind::irreducible_nonprimitive);
  CHECK(code.gen_order() == 5);
  CHECK(code.orbit_order() == 5);
  CHECK(code.retrieve2(rho(*F, F->from_label(0b1111))) == 4);
}
