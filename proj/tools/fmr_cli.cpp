#include "fmr/finite_algebra.hpp"
#include "fmr/formal_matrix.hpp"
#include "fmr/iso_engine.hpp"
#include "fmr/multiplier_system.hpp"
#include "fmr/pattern.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

namespace {

constexpr int kExitOk = 0;        // success / affirmative
constexpr int kExitNegative = 1;  // well-formed negative
constexpr int kExitUsage = 2;     // usage, parse, or guard error
constexpr int kExitUnknown = 3;   // Unknown verdict / inconclusive oracle

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

template <typename T>
T load_as(const std::string& path) {
  try {
    return load_json(path).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

uint64_t oracle_guard(uint64_t fallback) {
  if (const char* env = std::getenv("FML_MAX_DIM")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

int verdict_exit(const fmr::IsoVerdict& v) {
  switch (v.status) {
    case fmr::IsoStatus::Isomorphic:
      return kExitOk;
    case fmr::IsoStatus::NotIsomorphic:
      return kExitNegative;
    default:
      return kExitUnknown;
  }
}

int cmd_validate(const std::string& path) {
  const auto sys = load_as<fmr::MultiplierSystem>(path);
  const auto violations = fmr::validate_identities(sys);
  emit({{"valid", violations.empty()}, {"violations", violations}});
  return violations.empty() ? kExitOk : kExitNegative;
}

int cmd_mul(const std::string& a_path, const std::string& b_path,
            const std::string& sys_path) {
  const auto a = load_as<fmr::FormalMatrix>(a_path);
  const auto b = load_as<fmr::FormalMatrix>(b_path);
  const auto sys = load_as<fmr::MultiplierSystem>(sys_path);
  if (!fmr::validate_identities(sys).empty()) {
    throw std::runtime_error(sys_path + ": not a valid multiplier system");
  }
  emit(nlohmann::json(fmr::twisted_multiply(a, b, sys)));
  return kExitOk;
}

int cmd_canon(const std::string& path) {
  const auto pat = load_as<fmr::PrincipalPattern>(path);
  const auto structural = fmr::structure_errors(pat);
  if (!structural.empty()) {
    emit({{"valid", false}, {"structure_errors", structural}});
    return kExitNegative;
  }
  const auto triples = fmr::check_triple_condition(pat);
  if (!triples.empty()) {
    emit({{"valid", false}, {"triple_violations", triples}});
    return kExitNegative;
  }
  emit(nlohmann::json(fmr::canonical_form(pat)));
  return kExitOk;
}

int cmd_realize(const std::string& path, const std::optional<long long>& s_flag) {
  auto pat = load_as<fmr::PrincipalPattern>(path);
  if (s_flag) {
    pat.zero_symbol = fmr::normalize(fmr::Int(*s_flag), pat.ring);
  }
  if (!fmr::is_valid_pattern(pat)) {
    emit({{"valid", false},
          {"structure_errors", fmr::structure_errors(pat)},
          {"triple_violations", fmr::check_triple_condition(pat)}});
    return kExitNegative;
  }
  const auto sys = pat.is_s1() ? fmr::realize_s1(pat) : fmr::realize01(pat);
  emit(nlohmann::json(sys));
  return kExitOk;
}

int cmd_iso(const std::string& a_path, const std::string& b_path,
            const std::optional<long long>& s_flag) {
  const auto sys1 = load_as<fmr::MultiplierSystem>(a_path);
  const auto sys2 = load_as<fmr::MultiplierSystem>(b_path);
  const fmr::IsoVerdict v =
      s_flag ? fmr::decide_iso_s1(sys1, sys2, fmr::Int(*s_flag))
             : fmr::decide_iso_01(sys1, sys2);
  emit(nlohmann::json(v));
  return verdict_exit(v);
}

int cmd_quotient_iso(const std::string& a_path, const std::string& b_path,
                     const std::string& ring_path) {
  const auto t1 = load_as<fmr::PrincipalPattern>(a_path);
  const auto t2 = load_as<fmr::PrincipalPattern>(b_path);
  const auto ring = load_as<fmr::RingSpec>(ring_path);
  const fmr::IsoVerdict v = fmr::decide_quotient_iso(t1, t2, ring);
  emit(nlohmann::json(v));
  return verdict_exit(v);
}

int cmd_radical(const std::string& path) {
  const auto sys = load_as<fmr::MultiplierSystem>(path);
  if (!fmr::validate_identities(sys).empty()) {
    throw std::runtime_error(path + ": not a valid multiplier system");
  }
  const auto alg = fmr::from_formal_ring(sys);
  const auto rad = fmr::radical(alg, oracle_guard(uint64_t{1} << 20));
  nlohmann::json j;
  to_json(j, rad);
  j["p"] = alg.p;
  j["algebra_dim"] = alg.dim;
  emit(j);
  return kExitOk;
}

int cmd_enumerate(int n, bool count_only, bool emit_all, long long zero_symbol,
                  const std::optional<std::string>& ring_path) {
  const fmr::RingSpec ring =
      ring_path ? load_as<fmr::RingSpec>(*ring_path) : fmr::RingSpec::integers();
  const auto patterns = fmr::enumerate_patterns(n, ring, fmr::Int(zero_symbol));
  if (emit_all) {
    for (const auto& pat : patterns) emit(nlohmann::json(pat));
    return kExitOk;
  }
  std::set<std::vector<int>> classes;
  for (const auto& pat : patterns) classes.insert(fmr::canonical_form(pat).block_sizes);
  (void)count_only;  // counts are the default output
  emit({{"patterns", patterns.size()}, {"canonical_classes", classes.size()}});
  return kExitOk;
}

int cmd_oracle(const std::string& a_path, const std::string& b_path) {
  const auto a = load_as<fmr::FiniteAlgebra>(a_path);
  const auto b = load_as<fmr::FiniteAlgebra>(b_path);
  for (const auto& who : {std::pair{&a, &a_path}, std::pair{&b, &b_path}}) {
    const auto errs = fmr::check_structure(*who.first);
    if (!errs.empty()) {
      throw std::runtime_error(*who.second + ": " + errs.front());
    }
  }
  const uint64_t guard = oracle_guard(uint64_t{1} << 16);
  const auto out = fmr::isomorphic(a, b, guard, std::max(guard, uint64_t{1} << 20));
  nlohmann::json j{{"detail", out.detail}};
  if (out.status == fmr::Tri::Yes) {
    j["isomorphic"] = true;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& row : out.witness) {
      nlohmann::json r = nlohmann::json::array();
      for (uint8_t x : row) r.push_back(static_cast<int>(x));
      w.push_back(std::move(r));
    }
    j["witness"] = std::move(w);
    emit(j);
    return kExitOk;
  }
  if (out.status == fmr::Tri::No) {
    j["isomorphic"] = false;
    j["witness"] = nullptr;
    emit(j);
    return kExitNegative;
  }
  j["isomorphic"] = nullptr;
  j["witness"] = nullptr;
  emit(j);
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal matrix rings over a base ring: validation, twisted "
               "arithmetic, canonical forms, realization, and isomorphism "
               "decisions on JSON files"};
  app.require_subcommand(1);

  std::string path_a, path_b, sys_path, ring_path_req;
  std::optional<long long> s_flag;
  std::optional<std::string> ring_path;
  int enum_n = 2;
  bool count_only = false, emit_all = false;
  long long zero_symbol = 0;

  auto* validate = app.add_subcommand("validate", "check the defining identities");
  validate->add_option("system", path_a, "multiplier system JSON")->required();

  auto* mul = app.add_subcommand("mul", "twisted matrix product");
  mul->add_option("A", path_a, "left matrix JSON")->required();
  mul->add_option("B", path_b, "right matrix JSON")->required();
  mul->add_option("--system", sys_path, "multiplier system JSON")->required();

  auto* canon = app.add_subcommand("canon", "canonical form of a principal pattern");
  canon->add_option("pattern", path_a, "principal pattern JSON")->required();

  auto* realize = app.add_subcommand("realize", "multiplier system realizing a pattern");
  realize->add_option("pattern", path_a, "principal pattern JSON")->required();
  realize->add_option("--s", s_flag, "zero-role element for an (s1) realization");

  auto* iso = app.add_subcommand("iso", "isomorphism verdict for two systems");
  iso->add_option("sys1", path_a, "first system JSON")->required();
  iso->add_option("sys2", path_b, "second system JSON")->required();
  iso->add_option("--s", s_flag, "decide in the (s1) sense for this s");

  auto* qiso = app.add_subcommand("quotient-iso",
                                  "verdict for the semiprimitive quotients of two "
                                  "(01)-patterns");
  qiso->add_option("pattern1", path_a, "first pattern JSON")->required();
  qiso->add_option("pattern2", path_b, "second pattern JSON")->required();
  qiso->add_option("--ring", ring_path_req, "base ring JSON")->required();

  auto* radical = app.add_subcommand("radical", "radical of the matrix algebra over F_p");
  radical->add_option("system", path_a, "multiplier system JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "sweep all valid patterns");
  enumerate->add_option("--n", enum_n, "pattern order")->required();
  enumerate->add_flag("--count-only", count_only, "print counts (default)");
  enumerate->add_flag("--emit-all", emit_all, "stream every pattern as JSON Lines");
  enumerate->add_option("--zero-symbol", zero_symbol, "zero-role element (default 0)");
  enumerate->add_option("--ring", ring_path, "base ring JSON (default integers)");

  auto* oracle = app.add_subcommand("oracle", "structure-constant isomorphism oracle");
  oracle->add_option("alg1", path_a, "first algebra JSON")->required();
  oracle->add_option("alg2", path_b, "second algebra JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path_a);
    if (mul->parsed()) return cmd_mul(path_a, path_b, sys_path);
    if (canon->parsed()) return cmd_canon(path_a);
    if (realize->parsed()) return cmd_realize(path_a, s_flag);
    if (iso->parsed()) return cmd_iso(path_a, path_b, s_flag);
    if (qiso->parsed()) return cmd_quotient_iso(path_a, path_b, ring_path_req);
    if (radical->parsed()) return cmd_radical(path_a);
    if (enumerate->parsed())
      return cmd_enumerate(enum_n, count_only, emit_all, zero_symbol, ring_path);
    if (oracle->parsed()) return cmd_oracle(path_a, path_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
