#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "subcode/channel.hpp"
#include "subcode/codespec.hpp"
#include "subcode/error.hpp"
#include "subcode/factor.hpp"

using namespace subcode;
using nlohmann::json;

namespace {

struct Options {
  std::string code, codeword, other, power, isometry, target;
  std::string convention;
  std::string message;
  std::size_t erasures = 0, insertions = 0, trials = 1;
  std::uint64_t seed = 0;
  std::size_t orbit_id = 0;
  std::uint64_t q = 0;
  unsigned n = 0, n_max = 0, n_min = 6;
  bool list = false;
};

std::optional<Convention> convention(const Options& o, const LoadedCode& code, bool required) {
  if (!code.spread()) return std::nullopt;
  if (o.convention.empty()) {
    if (required) fail(ErrorKind::usage, "spread codes need --convention adhoc or --convention enum");
    return std::nullopt;
  }
  return parse_convention(o.convention);
}

void print_convention(std::optional<Convention> c) {
  if (c) std::cout << "# convention: " << to_string(*c) << "\n";
}

void print_smoothness(std::uint64_t q, unsigned n, std::optional<unsigned> k, const std::string& label) {
  const auto row = analyze_group_order(q, n);
  std::cout << "# smoothness " << label << ": q^n - 1 = " << q << "^" << n << " - 1, ";
  if (!row.known) {
    std::cout << "factorization budget exceeded\n";
    return;
  }
  std::cout << (row.smooth ? "n^2-smooth" : "not n^2-smooth") << "; cost: " << pohlig_hellman_cost_class(row, k) << "\n";
}

// Printed before an orbit code is built.
void smoothness_gate(const json& spec) {
  const std::string family = spec.value("family", "");
  if (family != "cyclic_orbit" && family != "orbit_union") return;
  const auto p = spec.value("p", 0u);
  const auto r = spec.value("r", 1u);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) q *= p;
  const std::string kind = spec.value("kind", "primitive");
  std::optional<unsigned> k;
  if (spec.contains("initial_point") && spec["initial_point"].is_array())
    k = static_cast<unsigned>(spec["initial_point"].size());
  if (kind == "general") {
    std::cout << "# smoothness: not applicable to a general generator\n";
  } else if (kind == "completely_reducible" && spec.contains("block_moduli")) {
    std::size_t j = 1;
    for (const auto& m : spec["block_moduli"])
      print_smoothness(q, static_cast<unsigned>(m.size() - 1), std::nullopt, "block " + std::to_string(j++));
  } else if (spec.contains("n")) {
    print_smoothness(q, spec["n"].get<unsigned>(), k, "of F_{q^n}*");
  }
}

LoadedCode load(const Options& o, bool gate) {
  if (o.code.empty()) fail(ErrorKind::usage, "--code is required");
  const json spec = read_json_file(o.code);
  if (gate) smoothness_gate(spec);
  return code_from_json(spec);
}

BigInt parse_message(const std::string& text) {
  if (text.empty()) fail(ErrorKind::usage, "--message is required");
  if (text.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::usage, "message must be a non-negative decimal integer");
  return BigInt(text);
}

Subspace read_codeword(const LoadedCode& code, const std::string& path) {
  if (path.empty()) fail(ErrorKind::usage, "--codeword is required");
  const Matrix m = read_matrix_file(path);
  check_entries(code.base(), m);
  if (m.cols() != code.n()) fail(ErrorKind::usage, "codeword has " + std::to_string(m.cols()) + " columns, code has n = " + std::to_string(code.n()));
  return Subspace::row_space(code.base(), m);
}

void describe(const LoadedCode& code) {
  std::cout << "family: " << code.family() << "\n";
  std::cout << "q: " << code.base().order() << "\n";
  std::cout << "n: " << code.n() << "\nk: " << code.k() << "\n";
  std::cout << "size: " << code.size() << "\n";
  if (auto s = code.spread()) {
    std::cout << "m: " << s->m() << "\n";
    std::cout << "primitive: " << (s->tower().primitive() ? "yes" : "no") << "\n";
  }
  if (auto o = code.orbit()) {
    std::cout << "kind: " << to_string(o->kind()) << "\ngenerator order: " << o->gen_order()
              << "\norbit order: " << o->orbit_order() << "\n";
  }
  if (auto u = code.orbit_union()) {
    std::cout << "orbits: " << u->z() << "\nc*: " << u->c_star() << "\n";
  }
}

int cmd_construct(const Options& o) {
  const auto code = load(o, true);
  const auto c = convention(o, code, false);
  print_convention(c);
  describe(code);
  if (o.list) {
    const auto book = materialize(code, c);
    for (std::size_t i = 0; i < book.size(); ++i) std::cout << "# codeword " << i << "\n" << to_text(book[i].basis());
  }
  return 0;
}

int cmd_encode(const Options& o) {
  const auto code = load(o, true);
  const auto c = convention(o, code, true);
  print_convention(c);
  const auto u = encode_message(code, parse_message(o.message), c);
  std::cout << to_text(u.basis());
  return 0;
}

int cmd_retrieve(const Options& o) {
  const auto code = load(o, true);
  const auto c = convention(o, code, true);
  print_convention(c);
  if (!o.power.empty()) {
    const Matrix pw = read_matrix_file(o.power);
    if (auto orbit = code.orbit()) {
      std::cout << orbit->retrieve2(pw) << "\n";
      return 0;
    }
    if (auto uni = code.orbit_union()) {
      if (o.orbit_id == 0) fail(ErrorKind::usage, "--power on a union code needs --orbit-id");
      std::cout << uni->retrieve3(o.orbit_id, pw) << "\n";
      return 0;
    }
    fail(ErrorKind::usage, "--power applies to orbit codes only");
  }
  const auto u = read_codeword(code, o.codeword);
  if (auto uni = code.orbit_union(); uni && o.orbit_id != 0) {
    if (o.orbit_id > uni->z()) fail(ErrorKind::usage, "unknown orbit id " + std::to_string(o.orbit_id));
    const auto l = uni->orbits()[o.orbit_id - 1].retrieve2_codeword(u);
    std::cout << l + uni->c_star() * (o.orbit_id - 1) << "\n";
    return 0;
  }
  std::cout << retrieve_message(code, u, c) << "\n";
  return 0;
}

int cmd_distance(const Options& o) {
  const auto code = load(o, false);
  if (!o.codeword.empty() || !o.other.empty()) {
    if (o.codeword.empty() || o.other.empty()) fail(ErrorKind::usage, "pairwise distance needs --codeword and --other");
    std::cout << subspace_distance(code.base(), read_codeword(code, o.codeword), read_codeword(code, o.other)) << "\n";
    return 0;
  }
  std::cout << min_distance(code.base(), materialize(code, convention(o, code, false))) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const auto code = load(o, true);
  const auto c = convention(o, code, false);
  const auto book = materialize(code, c);
  json out;
  out["family"] = code.family();
  out["codewords"] = book.size();
  out["min_distance"] = book.size() >= 2 ? json(min_distance(code.base(), book)) : json(nullptr);
  bool ok = true;
  // orbit codes are checked only when their size is that of a spread
  const BigInt q = code.base().order();
  const bool spread_sized = code.n() % code.k() == 0 &&
                            BigInt(book.size()) * (boost::multiprecision::pow(q, code.k()) - 1) ==
                                boost::multiprecision::pow(q, code.n()) - 1;
  if (code.spread() || spread_sized) {
    const auto rep = verify_spread(code.base(), book, code.k(), code.n());
    out["spread"] = rep.ok;
    out["spread_summary"] = rep.summary();
    json pairs = json::array();
    for (const auto& p : rep.offending_pairs) {
      if (pairs.size() == 10) break;
      pairs.push_back({p.first, p.second, p.intersection});
    }
    out["offending_pairs"] = pairs;
    out["offending_pair_count"] = rep.offending_pairs.size();
    if (code.spread()) ok = ok && rep.ok;
  }
  if (auto s = code.spread(); s && c) {
    bool round = true;
    for (std::size_t i = 0; i < book.size(); ++i) round = round && s->retrieve(book[i], *c) == s->message(i);
    out["round_trip"] = round;
    ok = ok && round;
  }
  if (auto u = code.orbit_union()) {
    const bool disjoint = u->verify_disjoint();
    out["disjoint"] = disjoint;
    ok = ok && disjoint;
  }
  out["ok"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 2;
}

json row_json(const SmoothnessRow& row, std::optional<unsigned> k = std::nullopt) {
  json f = json::array();
  for (const auto& pp : row.factors)
    f.push_back({{"p", pp.prime.str()}, {"e", pp.exponent}, {"probable", pp.probable}});
  return {{"n", row.n},
          {"known", row.known},
          {"factors", f},
          {"max_p", row.max_prime.str()},
          {"max_e", row.max_exponent},
          {"max_e_n_e_p", row.cost_bound.str()},
          {"r", row.distinct},
          {"n_squared", row.n_squared},
          {"smooth", row.smooth},
          {"cost_class", pohlig_hellman_cost_class(row, k)}};
}

int cmd_analyze(const Options& o) {
  std::uint64_t q = o.q;
  unsigned n = o.n;
  std::optional<unsigned> k;
  if (!o.code.empty()) {
    const json spec = read_json_file(o.code);
    const auto code = code_from_json(spec);
    q = code.base().order();
    n = static_cast<unsigned>(code.n());
    k = static_cast<unsigned>(code.k());
  }
  if (q < 2) fail(ErrorKind::usage, "analyze needs --q (or --code)");
  if (o.n_max > 0) {
    std::cout << "# q = " << q << ", rows with q^n - 1 n^2-smooth for " << o.n_min << " <= n <= " << o.n_max << "\n";
    for (const auto& row : smoothness_report(q, o.n_max, o.n_min)) {
      json out = row_json(row);
      out.erase("factors");
      out.erase("cost_class");
      std::cout << out.dump() << "\n";
    }
    return 0;
  }
  if (n < 1) fail(ErrorKind::usage, "analyze needs --n, --n-max or --code");
  json out = row_json(analyze_group_order(q, n), k);
  out["q"] = q;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_simulate(const Options& o) {
  const auto code = load(o, true);
  const auto c = convention(o, code, true);
  print_convention(c);
  const auto book = materialize(code, c);
  const BigInt message = parse_message(o.message);
  json runs = json::array();
  std::size_t successes = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto rep = simulate(code, c, book, message, o.erasures, o.insertions, o.seed + t);
    successes += rep.success;
    json run{{"seed", rep.seed},
             {"distance_sent_received", rep.distance_sent_received},
             {"decoded_distance", rep.decoded.distance},
             {"success", rep.success}};
    run["retrieved"] = rep.retrieved ? json(rep.retrieved->str()) : json(nullptr);
    if (!rep.decoded.index) run["ties"] = rep.decoded.ties;
    if (o.trials == 1) {
      run["sent"] = matrix_to_json(rep.sent.basis());
      run["received"] = rep.received.dim() ? matrix_to_json(rep.received.basis()) : json::array();
    }
    runs.push_back(std::move(run));
  }
  json out{{"message", message.str()}, {"erasures", o.erasures}, {"insertions", o.insertions},
           {"seed", o.seed},           {"trials", o.trials},       {"successes", successes},
           {"runs", runs}};
  std::cout << out.dump() << "\n";
  return successes == o.trials ? 0 : 3;
}

int cmd_isometry(const Options& o) {
  const auto code = load(o, false);
  if (!o.target.empty()) {
    const auto target = code_from_json(read_json_file(o.target));
    const auto found = find_linear_isometry(code.base(), materialize(code, convention(o, code, false)),
                                            materialize(target, std::nullopt));
    if (!found) fail(ErrorKind::not_codeword, "no linear isometry maps the code onto the target");
    std::cout << json{{"A", matrix_to_json(*found)}, {"frobenius_power", 0}}.dump() << "\n";
    return 0;
  }
  if (o.isometry.empty()) fail(ErrorKind::usage, "isometry-apply needs --isometry (or --search-target)");
  const auto iso = isometry_from_json(read_json_file(o.isometry));
  std::cout << to_text(apply_isometry(code.base(), read_codeword(code, o.codeword), iso).basis());
  return 0;
}

int cmd_orbit_analyze(const Options& o) {
  const auto code = load(o, true);
  if (code.spread()) fail(ErrorKind::usage, "orbit commands need a cyclic_orbit or orbit_union spec");
  describe(code);
  const auto book = materialize(code, std::nullopt);
  if (book.size() >= 2) std::cout << "min distance: " << min_distance(code.base(), book) << "\n";
  if (code.n() % code.k() == 0)
    std::cout << "spread: " << (verify_spread(code.base(), book, code.k(), code.n()).ok ? "yes" : "no") << "\n";
  return 0;
}

int run_orbit(const Options& o, const std::string& action) {
  if (!o.code.empty() && code_from_json(read_json_file(o.code)).spread())
    fail(ErrorKind::usage, "orbit commands need a cyclic_orbit or orbit_union spec");
  if (action == "encode") return cmd_encode(o);
  if (action == "retrieve") return cmd_retrieve(o);
  return cmd_orbit_analyze(o);
}

void add_code(CLI::App* app, Options& o) { app->add_option("--code", o.code, "code spec JSON")->required(); }

void add_convention(CLI::App* app, Options& o) {
  app->add_option("--convention", o.convention, "spread message map (required for spreads)")
      ->check(CLI::IsMember({"adhoc", "enum", "enumerative"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encoding and retrieval for Desarguesian spread codes and cyclic orbit codes"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "describe a code; --list prints every codeword");
  add_code(construct, o);
  add_convention(construct, o);
  construct->add_flag("--list", o.list, "print the codebook");

  auto* encode = app.add_subcommand("encode", "message to codeword");
  add_code(encode, o);
  add_convention(encode, o);
  encode->add_option("--message", o.message, "decimal message")->required();

  auto* retrieve = app.add_subcommand("retrieve", "codeword (or P^i) to message");
  add_code(retrieve, o);
  add_convention(retrieve, o);
  retrieve->add_option("--codeword", o.codeword, "codeword matrix file");
  retrieve->add_option("--power", o.power, "matrix P^i from an error decoder (orbit codes)");
  retrieve->add_option("--orbit-id", o.orbit_id, "1-based orbit id for union codes");

  auto* distance = app.add_subcommand("distance", "minimum distance, or d_S of two subspaces");
  add_code(distance, o);
  add_convention(distance, o);
  distance->add_option("--codeword", o.codeword, "first subspace");
  distance->add_option("--other", o.other, "second subspace");

  auto* verify = app.add_subcommand("verify", "spread / round-trip / disjointness checks (exit 2 on failure)");
  add_code(verify, o);
  add_convention(verify, o);

  auto* analyze = app.add_subcommand("analyze", "factor q^n - 1 and report smoothness");
  analyze->add_option("--code", o.code, "code spec JSON");
  analyze->add_option("--q", o.q, "field size");
  analyze->add_option("--n", o.n, "extension degree");
  analyze->add_option("--n-max", o.n_max, "emit the table for n_min <= n <= n_max");
  analyze->add_option("--n-min", o.n_min, "first n of the table")->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "seeded operator channel with minimum-distance decoding");
  add_code(sim, o);
  add_convention(sim, o);
  sim->add_option("--message", o.message, "decimal message")->required();
  sim->add_option("--erasures", o.erasures, "dimensions erased")->capture_default_str();
  sim->add_option("--insertions", o.insertions, "dimensions inserted")->capture_default_str();
  sim->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  sim->add_option("--trials", o.trials, "runs with seeds seed, seed+1, ...")->capture_default_str()->check(CLI::PositiveNumber);

  auto* iso = app.add_subcommand("isometry-apply", "apply sigma(U A), or search A for small codes");
  add_code(iso, o);
  add_convention(iso, o);
  iso->add_option("--isometry", o.isometry, "isometry JSON {A, frobenius_power}");
  iso->add_option("--codeword", o.codeword, "subspace to map");
  iso->add_option("--search-target", o.target, "find A with code A = target (q = 2, n <= 4)");

  auto* orbit = app.add_subcommand("orbit", "orbit code commands");
  orbit->require_subcommand(1);
  std::string orbit_action;
  for (const char* action : {"encode", "retrieve", "analyze"}) {
    auto* sub = orbit->add_subcommand(action);
    add_code(sub, o);
    if (std::string(action) == "encode") sub->add_option("--message", o.message, "decimal message")->required();
    if (std::string(action) == "retrieve") {
      sub->add_option("--codeword", o.codeword, "codeword matrix file");
      sub->add_option("--power", o.power, "matrix P^i");
      sub->add_option("--orbit-id", o.orbit_id, "1-based orbit id for union codes");
    }
    sub->callback([&orbit_action, action] { orbit_action = action; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*encode) return cmd_encode(o);
    if (*retrieve) return cmd_retrieve(o);
    if (*distance) return cmd_distance(o);
    if (*verify) return cmd_verify(o);
    if (*analyze) return cmd_analyze(o);
    if (*sim) return cmd_simulate(o);
    if (*iso) return cmd_isometry(o);
    if (*orbit) return run_orbit(o, orbit_action);
  } catch (const Error& e) {
    std::cout << json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 1;
}
