// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "subcode/channel.hpp"
#include "subcode/error.hpp"
#include "subcode/factor.hpp"
#include "subcode/isometry.hpp"
#include "subcode/orbit.hpp"
#include "subcode/spread.hpp"

using namespace subcode;

namespace {

// Pinned limits.
constexpr double kLimitExample = 1.0;       // criteria 1, 2 (seconds)
constexpr double kLimitBijective = 60.0;    // criterion 4
constexpr double kLimitDlog = 60.0;         // criterion 6
constexpr double kLimitTables = 120.0;      // criterion 8
constexpr double kMaxDoublingRatio = 32.0;  // criterion 11: 2^2 growth times a factor-of-8 tolerance
constexpr int kChannelRuns = 100;           // criterion 10, per (d, e) pair

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (failures_++ < 5) detail_ << (detail_.tellp() ? "; " : "") << what;
    }
  }
  Outcome done(const std::string& summary) const {
    if (ok_) return {true, summary};
    return {false, detail_.str() + (failures_ > 5 ? " (+" + std::to_string(failures_ - 5) + " more)" : "")};
  }

 private:
  bool ok_ = true;
  std::size_t failures_ = 0;
  std::ostringstream detail_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::shared_ptr<const ExtField> field(std::uint32_t p, Poly modulus) {
  return std::make_shared<const ExtField>(make_base_field(p, 1), std::move(modulus));
}

Subspace rs(const BaseField& F, std::vector<std::vector<Fq>> rows) { return Subspace::row_space(F, Matrix::from_rows(rows)); }

Outcome criterion1() {
  Check c;
  const auto t0 = Clock::now();
  const SpreadCode code(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), 2);
  const auto book = code.codebook();
  const std::set<std::string> expected{"1 0 0 0\n0 1 0 0\n", "1 0 0 1\n0 1 1 1\n", "1 0 1 1\n0 1 1 0\n",
                                       "1 0 1 0\n0 1 0 1\n", "0 0 1 0\n0 0 0 1\n"};
  std::set<std::string> got;
  for (const auto& u : book) got.insert(to_text(u.basis()));
  c.expect(book.size() == 5, "codebook has " + std::to_string(book.size()) + " codewords");
  c.expect(got == expected, "RREF matrices differ from the reference spread");
  const double dt = seconds_since(t0);
  c.expect(dt < kLimitExample, "runtime " + std::to_string(dt) + " s");
  return c.done("5 RREF matrices match byte-for-byte");
}

Outcome criterion2() {
  Check c;
  const auto t0 = Clock::now();
  const SpreadCode code(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), 3);
  const ExtField& F = code.ext();
  const Matrix I = Matrix::identity(2), P = Matrix::from_rows({{0, 1}, {1, 1}});
  c.expect(code.enc1(code.message(14)).basis() == concat(concat(I, I), P), "enc1(14) != rs(I, I, P)");
  const auto z = F.zero(), o = F.one(), a = F.generator(), a2 = F.mul(a, a);
  const std::vector<std::vector<FieldElement>> table{{z, z, o}, {z, o, z}, {z, o, o},  {z, o, a},  {z, o, a2},
                                                     {o, z, z}, {o, o, z}, {o, a, z}, {o, a2, z}, {o, z, o}};
  for (std::size_t i = 0; i < table.size(); ++i)
    c.expect(code.f_map(code.message(i)) == ProjPoint(F, table[i]), "f(" + std::to_string(i) + ") mismatch");
  const double dt = seconds_since(t0);
  c.expect(dt < kLimitExample, "runtime " + std::to_string(dt) + " s");
  return c.done("enc1(14) = rs(I2, I2, P); f(0..9) match");
}

Outcome criterion3() {
  Check c;
  const SpreadCode code(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), 3);
  const ExtField& F = code.ext();
  const auto z = F.zero(), o = F.one(), a = F.generator(), a2 = F.mul(a, a);
  const auto u = Subspace::row_space(F.base(), concat(concat(rho(F, o), rho(F, F.add(a, o))), rho(F, o)));
  const auto r = code.retrieve1(u).to_u64();
  c.expect(r == 12, "retrieve1 gave " + std::to_string(r));
  const std::vector<std::pair<std::vector<FieldElement>, std::uint64_t>> ind{
      {{z, z, o}, 0}, {{z, o, a}, 3}, {{o, z, o}, 6}, {{o, a2, o}, 18}};
  std::string got;
  for (const auto& [pt, want] : ind) {
    const auto v = code.ind(ProjPoint(F, pt)).to_u64();
    got += (got.empty() ? "" : ",") + std::to_string(v);
    c.expect(v == want, "ind gave " + std::to_string(v) + ", expected " + std::to_string(want));
  }
  return c.done("retrieve1 = 12; ind = (" + got + ")");
}

Outcome criterion4() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t grids = 0, codewords = 0;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (unsigned k : {2u, 3u}) {
      for (std::size_t m : {2u, 3u}) {
        if (oracle::ipow(q, k * static_cast<unsigned>(m)) > 65536) continue;
        const std::uint32_t p = q == 4 ? 2 : q;
        const unsigned r = q == 4 ? 2 : 1;
        const SpreadCode code(FieldTower::make(p, r, {}, k, {}), m);
        const std::string tag = "(q,k,m)=(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
        const auto book = code.codebook();
        std::unordered_set<Subspace, SubspaceHash> distinct(book.begin(), book.end());
        c.expect(distinct.size() == book.size(), tag + " enc1 not injective");
        const auto rep = verify_spread(code.base(), book, k, code.n());
        c.expect(rep.ok, tag + " " + rep.summary());
        for (std::size_t i = 0; i < book.size(); ++i)
          if (code.retrieve1(book[i]) != code.message(i)) {
            c.expect(false, tag + " retrieve1(enc1(" + std::to_string(i) + ")) != " + std::to_string(i));
            break;
          }
        ++grids;
        codewords += book.size();
      }
    }
  }
  const double dt = seconds_since(t0);
  c.expect(grids == 11, "expected 11 parameter triples, ran " + std::to_string(grids));
  c.expect(dt < kLimitBijective, "runtime " + std::to_string(dt) + " s");
  std::ostringstream s;
  s << grids << " grids, " << codewords << " codewords, " << dt << " s";
  return c.done(s.str());
}

Outcome criterion5() {
  Check c;
  auto F = field(2, {1, 1, 0, 0, 1});
  const auto prim = CyclicOrbitCode::irreducible(F, rs(F->base(), {{1, 0, 0, 0}, {0, 1, 1, 0}}));
  const auto prim_book = prim.codebook();
  c.expect(prim_book.size() == 5, "primitive orbit size " + std::to_string(prim_book.size()));
  c.expect(min_distance(prim.base(), prim_book) == 4, "primitive orbit min distance");
  for (std::uint64_t i = 0; i < 5; ++i) {
    c.expect(prim.retrieve2(prim.generator_power(i)) == i, "retrieve2(P^" + std::to_string(i) + ")");
    c.expect(prim.retrieve2_codeword(prim.enc2(i)) == i, "retrieve2(enc2(" + std::to_string(i) + "))");
  }
  auto F2 = make_base_field(2, 1);
  const auto perm = CyclicOrbitCode::general(F2, Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                            rs(*F2, {{0, 1, 0}, {0, 0, 1}}));
  const auto perm_book = perm.codebook();
  c.expect(perm_book.size() == 2, "permutation orbit size " + std::to_string(perm_book.size()));
  c.expect(min_distance(*F2, perm_book) == 2, "permutation orbit min distance");
  return c.done("sizes 5 and 2, distances 4 and 2, retrieve2 o enc2 = id on 0..4");
}

Outcome criterion6() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t compared = 0;
  auto F2 = make_base_field(2, 1), F3 = make_base_field(3, 1);
  std::vector<std::shared_ptr<const ExtField>> fields;
  for (unsigned n : {4u, 6u, 8u, 10u, 12u}) fields.push_back(std::make_shared<const ExtField>(F2, default_modulus(*F2, n)));
  fields.push_back(std::make_shared<const ExtField>(F3, default_modulus(*F3, 4)));
  for (const auto& F : fields) {
    const auto alpha = F->generator();
    c.expect(F->is_primitive(), "default modulus not primitive");
    const auto total = static_cast<std::uint64_t>(F->size());
    for (std::uint64_t l = 1; l < total; ++l) {
      const auto x = F->from_label(l);
      if (pohlig_hellman(*F, x, alpha, F->group_order_factors()) != dlog_naive(*F, x, alpha))
        c.expect(false, "mismatch at label " + std::to_string(l) + " of F_" + F->size().str());
      ++compared;
    }
  }
  const double dt = seconds_since(t0);
  c.expect(dt < kLimitDlog, "runtime " + std::to_string(dt) + " s");
  std::ostringstream s;
  s << compared << " elements, 0 mismatches, " << dt << " s";
  return c.done(s.str());
}

Outcome criterion7() {
  Check c;
  auto F16 = field(2, {1, 1, 0, 0, 1});
  const auto beta = F16->from_label(0b1011);  // a^3 + a + 1
  const BigInt l = pohlig_hellman(*F16, beta, F16->generator(), F16->group_order_factors());
  c.expect(l == 7, "log = " + l.str());

  const auto& B = F16->base();
  const OrbitUnionCode uni({CyclicOrbitCode::irreducible(F16, rs(B, {{1, 0, 0, 0}, {0, 1, 0, 0}})),
                            CyclicOrbitCode::irreducible(F16, rs(B, {{1, 0, 0, 0}, {0, 0, 1, 0}}))});
  const BigInt i = uni.retrieve3(2, rho(*F16, beta));
  c.expect(i == 22, "union message = " + i.str());
  c.expect(uni.retrieve3_codeword(Subspace::row_space(B, multiply(B, uni.orbits()[1].initial().basis(), rho(*F16, beta)))) == 22,
           "union message by orbit search");

  auto F5 = field(2, {1, 1, 1, 1, 1});
  const auto code = CyclicOrbitCode::irreducible(F5, rs(F5->base(), {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const BigInt np = code.retrieve2(rho(*F5, F5->from_label(0b1111)));  // a^3 + a^2 + a + 1
  c.expect(np == 4, "non-primitive message = " + np.str());
  return c.done("log = " + l.str() + ", union message = " + i.str() + ", non-primitive message = " + np.str());
}

Outcome criterion8() {
  Check c;
  const auto t0 = Clock::now();
  struct Row {
    unsigned n;
    std::uint64_t max_p;
    unsigned max_e;
    std::size_t r;
  };
  const std::vector<Row> table1{{6, 7, 2, 2},     {8, 17, 1, 3},    {9, 73, 1, 2},    {10, 31, 1, 3},  {11, 89, 1, 2},
                                {12, 13, 2, 4},   {14, 127, 1, 3},  {15, 151, 1, 3},  {18, 73, 3, 4},  {20, 41, 2, 5},
                                {21, 337, 2, 3},  {24, 241, 2, 6},  {28, 127, 1, 6},  {30, 331, 2, 6}, {36, 109, 3, 8},
                                {48, 673, 2, 9},  {60, 1321, 2, 11}};
  const std::vector<Row> table2{{6, 13, 3, 3}, {8, 41, 5, 3}, {10, 61, 3, 3}, {12, 73, 4, 5}, {16, 193, 6, 5}};
  const auto compare = [&](std::uint64_t q, unsigned n_max, const std::vector<Row>& want) {
    const auto rows = smoothness_report(q, n_max);
    c.expect(rows.size() == want.size(), "q=" + std::to_string(q) + ": " + std::to_string(rows.size()) + " rows");
    for (std::size_t i = 0; i < std::min(rows.size(), want.size()); ++i) {
      const auto& g = rows[i];
      const auto& w = want[i];
      c.expect(g.known && g.n == w.n && g.max_prime == w.max_p && g.max_exponent == w.max_e && g.distinct == w.r,
               "q=" + std::to_string(q) + " row n=" + std::to_string(g.n));
    }
  };
  compare(2, 60, table1);
  compare(3, 16, table2);
  const double dt = seconds_since(t0);
  c.expect(dt < kLimitTables, "runtime " + std::to_string(dt) + " s");
  std::ostringstream s;
  s << "17 + 5 rows match on (max p_i, max e_i, r), " << dt << " s";
  return c.done(s.str());
}

Outcome criterion9() {
  Check c;
  auto F2 = make_base_field(2, 1);
  const SemiLinearIsometry iso{Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}}), 0};
  // psi_4^-1(b^2 + b) = (0, 1, 1, 0)
  const auto back = invert_isometry(*F2, std::vector<Fq>{0, 1, 1, 0}, iso);
  c.expect(back == std::vector<Fq>{0, 1, 0, 0}, "psi^-1(b^2+b) A^-1 != (0,1,0,0)");

  const SpreadCode c1(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), 2);
  auto F = field(2, {1, 1, 0, 0, 1});
  const auto c2 = CyclicOrbitCode::irreducible(F, rs(F->base(), {{1, 0, 0, 0}, {0, 1, 1, 0}}));
  HybridEncoder hybrid(
      c1.tower().base, iso, [&](const BigInt& i) { return c1.enc1(c1.message(i)); },
      [&](std::span<const Fq> v) { return c1.retrieve_from_vector(v, Convention::adhoc).to_integer(); });
  try {
    hybrid.check_maps_onto(c1.codebook(), c2.codebook());
  } catch (const Error& e) {
    c.expect(false, e.what());
  }
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto w = hybrid.encode(i);
    c.expect(c2.locate(w).has_value(), "hybrid_encode(" + std::to_string(i) + ") not in the orbit code");
    c.expect(hybrid.retrieve(w) == i, "hybrid_retrieve(hybrid_encode(" + std::to_string(i) + "))");
  }
  return c.done("(0,1,0,0) reproduced; C1 A = C2; round trip on 5 messages");
}

Outcome criterion10() {
  Check c;
  const LoadedCode code{SpreadCode(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), 3)};
  const auto book = materialize(code, Convention::adhoc);
  std::size_t runs = 0, ok = 0;
  // d_S = 4, so unique decoding needs d + e < 2
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{1, 0}, {0, 1}};
  for (const auto& [d, e] : pairs) {
    for (int t = 0; t < kChannelRuns; ++t) {
      const std::uint64_t seed = 1000 * (d * 2 + e) + static_cast<std::uint64_t>(t);
      const BigInt message = static_cast<std::uint64_t>(t) % book.size();
      const auto rep = simulate(code, Convention::adhoc, book, message, d, e, seed);
      ++runs;
      ok += rep.success;
      if (!rep.success)
        c.expect(false, "(d,e)=(" + std::to_string(d) + "," + std::to_string(e) + ") seed " + std::to_string(seed));
    }
  }
  return c.done(std::to_string(ok) + "/" + std::to_string(runs) + " runs retrieved the sent message");
}

// Mean time of one enc1 + retrieve1 pair at n = 2m, q = k = 2.
double time_round_trip(std::size_t m, std::uint64_t seed) {
  const SpreadCode code(FieldTower::make(2, 1, {}, 2, {1, 1, 1}), m);
  oracle::Gen g(seed);
  std::vector<MessageIndex> messages;
  const BigInt size = code.size();
  for (int i = 0; i < 64; ++i) {
    BigInt v = 0;
    for (int w = 0; w < 3; ++w) v = (v << 64) + g.next();
    messages.push_back(code.message(v % size));
  }
  double best = 1e300;
  for (int rep = 0; rep < 5; ++rep) {
    std::size_t iters = 0;
    const auto t0 = Clock::now();
    do {
      for (const auto& msg : messages) {
        if (code.retrieve1(code.enc1(msg)) != msg) return -1;
        ++iters;
      }
    } while (seconds_since(t0) < 0.05);
    best = std::min(best, seconds_since(t0) / static_cast<double>(iters));
  }
  return best;
}

Outcome criterion11() {
  Check c;
  std::ostringstream s;
  double prev = 0;
  for (unsigned n : {8u, 16u, 32u, 64u}) {
    const double t = time_round_trip(n / 2, n);
    c.expect(t > 0, "round trip failed at n=" + std::to_string(n));
    s << "n=" << n << ": " << t * 1e6 << " us";
    if (prev > 0) {
      const double ratio = t / prev;
      s << " (x" << ratio << ")";
      c.expect(ratio <= kMaxDoublingRatio, "n=" + std::to_string(n) + " doubling ratio " + std::to_string(ratio));
    }
    s << (n < 64 ? "; " : "");
    prev = t;
  }
  return c.done(s.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"q=k=2, m=3 spread reproduction", criterion1},
      {"enc1(14) and the f-table", criterion2},
      {"retrieval and ind examples", criterion3},
      {"bijectivity on the (q,k,m) grid", criterion4},
      {"orbit examples", criterion5},
      {"Pohlig-Hellman vs naive discrete log", criterion6},
      {"reference discrete-log values", criterion7},
      {"smoothness table regeneration", criterion8},
      {"hybrid encoder", criterion9},
      {"end-to-end channel", criterion10},
      {"complexity smoke test", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    failed += !out.ok;
    std::printf("[%s] criterion %2zu %-40s %7.3fs  %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, dt,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
