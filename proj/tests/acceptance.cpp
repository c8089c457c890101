// Acceptance gate: end-to-end checks of the library's core guarantees, one
// pass/fail line per check, nonzero exit if any check fails.
#include "fmr/finite_algebra.hpp"
#include "fmr/formal_matrix.hpp"
#include "fmr/iso_engine.hpp"
#include "fmr/multiplier_system.hpp"
#include "fmr/pattern.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace fmr;

namespace {

struct Check {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

FormalMatrix random_matrix(int n, const RingSpec& ring, std::mt19937_64& rng) {
  FormalMatrix m = FormalMatrix::zero(n, ring);
  for (Int& v : m.entries) v = normalize(static_cast<long long>(rng() % 64), ring);
  return m;
}

std::vector<long long> bell_numbers(int up_to) {
  std::vector<long long> bell{1};
  std::vector<long long> row{1};
  for (int n = 1; n <= up_to; ++n) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

long long partition_count(int n) {
  std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
  return p[n][n];
}

// ---------------------------------------------------------------------------

// Every 0/1 tensor satisfying the defining identities has a principal matrix
// free of forbidden triples; exhaustive over all 2^12 free entries at n = 3.
bool check_identity_sweep(std::string& detail) {
  const RingSpec z = RingSpec::integers();
  int valid = 0;
  for (int mask = 0; mask < (1 << 12); ++mask) {
    MultiplierSystem sys = MultiplierSystem::all_ones(3, z);
    int bit = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (i == j || j == k) continue;
          sys.at(i, j, k) = (mask >> bit) & 1;
          ++bit;
        }
    if (!validate_identities(sys).empty()) continue;
    ++valid;
    if (!check_triple_condition(principal_pattern(sys)).empty()) {
      detail = "survivor with a forbidden principal triple at mask " +
               std::to_string(mask);
      return false;
    }
  }
  detail = std::to_string(valid) + " of 4096 tensors valid, all principal "
           "matrices triple-free";
  return valid > 0;
}

// realize01 output is always valid, determined by its principal matrix, and
// reproduces the input pattern exactly, for all 277 patterns with n = 2..6.
bool check_realization_round_trip(std::string& detail) {
  const RingSpec mod6 = RingSpec::mod(6);
  int total = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& pat : enumerate_patterns(n, mod6)) {
      ++total;
      const auto sys = realize01(pat);
      if (!validate_identities(sys).empty()) {
        detail = "invalid realization at n = " + std::to_string(n);
        return false;
      }
      if (!classify(sys).isK0) {
        detail = "realization not determined by its principal matrix";
        return false;
      }
      if (!(principal_pattern(sys) == pat)) {
        detail = "principal matrix round trip failed at n = " + std::to_string(n);
        return false;
      }
    }
  }
  detail = std::to_string(total) + " patterns round-tripped";
  return total == 277;
}

// Twisted products are associative and two-sided distributive.
bool check_ring_axioms(std::string& detail) {
  std::mt19937_64 rng(101);
  long long triples = 0;
  for (const RingSpec& ring : {RingSpec::mod(4), RingSpec::mod(6)}) {
    for (int n : {2, 3, 4}) {
      for (const auto& pat : enumerate_patterns(n, ring)) {
        const auto sys = realize01(pat);
        const int per_config = 1000 / static_cast<int>(enumerate_patterns(n, ring).size()) + 1;
        for (int t = 0; t < per_config; ++t) {
          const auto a = random_matrix(n, ring, rng);
          const auto b = random_matrix(n, ring, rng);
          const auto c = random_matrix(n, ring, rng);
          ++triples;
          if (!(twisted_multiply(twisted_multiply(a, b, sys), c, sys) ==
                twisted_multiply(a, twisted_multiply(b, c, sys), sys))) {
            detail = "associativity failed";
            return false;
          }
          if (!(twisted_multiply(a, add(b, c), sys) ==
                add(twisted_multiply(a, b, sys), twisted_multiply(a, c, sys)))) {
            detail = "left distributivity failed";
            return false;
          }
          if (!(twisted_multiply(add(a, b), c, sys) ==
                add(twisted_multiply(a, c, sys), twisted_multiply(b, c, sys)))) {
            detail = "right distributivity failed";
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(triples) + " random triples checked";
  return triples >= 6000;
}

// A |-> (tau A) is a multiplicative map from products over Sigma to products
// over the relabelled system, for every n = 3 system and permutation.
bool check_permutation_isomorphism(std::string& detail) {
  std::mt19937_64 rng(202);
  const RingSpec mod4 = RingSpec::mod(4);
  long long pairs = 0;
  for (const auto& pat : enumerate_patterns(3, mod4)) {
    const auto sys = realize01(pat);
    for (const auto& tau : all_permutations(3)) {
      const auto permuted = permute(sys, tau);
      for (int t = 0; t < 50; ++t) {
        const auto a = random_matrix(3, mod4, rng);
        const auto b = random_matrix(3, mod4, rng);
        ++pairs;
        if (!(tau_image(twisted_multiply(a, b, sys), tau) ==
              twisted_multiply(tau_image(a, tau), tau_image(b, tau), permuted))) {
          detail = "homomorphism identity failed";
          return false;
        }
      }
    }
  }
  detail = std::to_string(pairs) + " matrix pairs across 5 systems x 6 permutations";
  return pairs == 5 * 6 * 50;
}

// Pattern counts follow the Bell recurrence; canonical-class counts follow
// the partition recurrence; both recurrences are computed independently here.
bool check_counting_laws(std::string& detail) {
  const RingSpec z = RingSpec::integers();
  const auto bell = bell_numbers(6);
  const long long expected_bell[] = {2, 5, 15, 52, 203};
  const long long expected_part[] = {2, 3, 5, 7, 11};
  std::ostringstream os;
  for (int n = 2; n <= 6; ++n) {
    const auto patterns = enumerate_patterns(n, z);
    std::set<std::vector<int>> classes;
    for (const auto& pat : patterns) classes.insert(canonical_form(pat).block_sizes);
    const auto count = static_cast<long long>(patterns.size());
    const auto class_count = static_cast<long long>(classes.size());
    if (count != bell[n] || count != expected_bell[n - 2]) {
      detail = "pattern count mismatch at n = " + std::to_string(n);
      return false;
    }
    if (class_count != partition_count(n) || class_count != expected_part[n - 2]) {
      detail = "canonical class count mismatch at n = " + std::to_string(n);
      return false;
    }
    os << (n > 2 ? ", " : "") << count << "/" << class_count;
  }
  detail = "patterns/classes per order: " + os.str();
  return true;
}

// The pattern-level decision procedure agrees with the structure-constant
// oracle on every ordered pair of patterns of order 2 and 3 over F_2.
bool check_decision_vs_oracle(std::string& detail) {
  const RingSpec f2 = RingSpec::mod(2);
  int decided = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto patterns = enumerate_patterns(n, f2);
    std::vector<FiniteAlgebra> algebras;
    for (const auto& pat : patterns) algebras.push_back(from_formal_ring(realize01(pat)));
    for (size_t i = 0; i < patterns.size(); ++i) {
      for (size_t j = 0; j < patterns.size(); ++j) {
        const auto verdict = decide_iso_01(realize01(patterns[i]), realize01(patterns[j]));
        if (verdict.status == IsoStatus::Unknown) {
          detail = "undecided pair over a local base ring";
          return false;
        }
        const auto oracle = isomorphic(algebras[i], algebras[j]);
        if (oracle.status == Tri::Maybe) {
          detail = "oracle inconclusive on dim " + std::to_string(algebras[i].dim);
          return false;
        }
        const bool decision = verdict.status == IsoStatus::Isomorphic;
        const bool truth = oracle.status == Tri::Yes;
        if (decision != truth) {
          detail = "decision/oracle disagreement at n = " + std::to_string(n);
          return false;
        }
        if (truth && !verify_isomorphism(algebras[i], algebras[j], oracle.witness)) {
          detail = "oracle witness failed re-verification";
          return false;
        }
        ++decided;
      }
    }
  }
  detail = std::to_string(decided) + " ordered pairs, decisions and oracle agree";
  return decided == 2 * 2 + 5 * 5;
}

// dim radical = n^2 - sum of squared block sizes, and quotients are
// semiprimitive, for every pattern with n <= 3 over F_2 and F_3.
bool check_radical_dimension_law(std::string& detail) {
  int checked = 0;
  for (int p : {2, 3}) {
    const RingSpec ring = RingSpec::mod(p);
    for (int n = 2; n <= 3; ++n) {
      for (const auto& pat : enumerate_patterns(n, ring)) {
        const auto alg = from_formal_ring(realize01(pat));
        int sq = 0;
        for (int b : canonical_form(pat).block_sizes) sq += b * b;
        const auto j = radical(alg);
        if (j.dimension() != n * n - sq) {
          detail = "radical dimension off at n = " + std::to_string(n) +
                   ", p = " + std::to_string(p);
          return false;
        }
        if (radical(quotient(alg, j)).dimension() != 0) {
          detail = "quotient not semiprimitive";
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " pattern/field combinations";
  return checked == 2 * 7;
}

// Semiprimitive quotients separate the order-3 block structures, and block
// sizes matter beyond dimension: the dim-5 quotient of the [2,1] structure is
// not the commutative dim-5 algebra coming from five 1x1 blocks.
bool check_quotient_separation(std::string& detail) {
  const RingSpec f2 = RingSpec::mod(2);
  std::vector<FiniteAlgebra> quotients;
  std::vector<int> dims;
  for (const auto& classes : std::vector<std::vector<std::vector<int>>>{
           {{0, 1, 2}}, {{0, 1}, {2}}, {{0}, {1}, {2}}}) {
    const auto alg =
        from_formal_ring(realize01(PrincipalPattern::from_partition(classes, 3, f2)));
    const auto q = quotient(alg, radical(alg));
    quotients.push_back(q);
    dims.push_back(q.dim);
  }
  if (dims != std::vector<int>{9, 5, 3}) {
    detail = "unexpected quotient dimensions";
    return false;
  }
  for (size_t i = 0; i < quotients.size(); ++i) {
    for (size_t j = 0; j < quotients.size(); ++j) {
      const auto out = isomorphic(quotients[i], quotients[j]);
      if ((out.status == Tri::Yes) != (i == j) || out.status == Tri::Maybe) {
        detail = "quotient oracle verdict wrong";
        return false;
      }
    }
  }

  // order-5 identity pattern: the radical is spanned by the off-diagonal
  // matrix units (too large to enumerate, so it is built explicitly)
  const auto big = from_formal_ring(
      realize01(PrincipalPattern::from_partition({{0}, {1}, {2}, {3}, {4}}, 5, f2)));
  FpMat off_diagonal;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      FpVec v(25, 0);
      v[i * 5 + j] = 1;
      off_diagonal.push_back(std::move(v));
    }
  const auto ideal = make_ideal(big, off_diagonal);
  if (ideal.dimension() != 20 || !nilpotency_index(big, ideal).has_value()) {
    detail = "off-diagonal ideal is not the expected nilpotent ideal";
    return false;
  }
  const auto f2_5 = quotient(big, ideal);
  if (f2_5.dim != 5 || !is_commutative(f2_5) || radical(f2_5).dimension() != 0) {
    detail = "order-5 quotient is not a commutative semiprimitive dim-5 algebra";
    return false;
  }
  const auto out = isomorphic(quotients[1], f2_5);
  if (out.status != Tri::No) {
    detail = "dim-5 quotients not separated (commutativity should decide)";
    return false;
  }
  detail = "order-3 quotients pairwise distinct; dim-5 pair separated by "
           "commutativity";
  return true;
}

// Decisions for s-twisted systems over Z/4 with s = 2: positives come with a
// permutation witness whose matrix map is multiplicative; negatives are
// confirmed by the oracle on the structures reduced mod 2.
bool check_s1_decisions(std::string& detail) {
  std::mt19937_64 rng(303);
  const RingSpec mod4 = RingSpec::mod(4);
  const RingSpec f2 = RingSpec::mod(2);
  const Int s = 2;
  int positives = 0, negatives = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto patterns = enumerate_patterns(n, mod4, s);
    for (size_t i = 0; i < patterns.size(); ++i) {
      for (size_t j = 0; j < patterns.size(); ++j) {
        const auto sys1 = realize_s1(patterns[i]);
        const auto sys2 = realize_s1(patterns[j]);
        const auto verdict = decide_iso_s1(sys1, sys2, s);
        const bool same = same_canonical(patterns[i], patterns[j]);
        if (same) {
          if (verdict.status != IsoStatus::Isomorphic || !verdict.witness) {
            detail = "expected a witnessed positive verdict";
            return false;
          }
          const auto& tau = *verdict.witness;
          if (!(permute(sys1, tau) == sys2)) {
            detail = "witness does not carry the first system to the second";
            return false;
          }
          for (int t = 0; t < 100; ++t) {
            const auto a = random_matrix(n, mod4, rng);
            const auto b = random_matrix(n, mod4, rng);
            if (!(tau_image(twisted_multiply(a, b, sys1), tau) ==
                  twisted_multiply(tau_image(a, tau), tau_image(b, tau), sys2))) {
              detail = "witness map is not multiplicative";
              return false;
            }
          }
          ++positives;
        } else {
          if (verdict.status != IsoStatus::NotIsomorphic) {
            detail = "expected a negative verdict for distinct block structures";
            return false;
          }
          // cross-check: reduce both systems mod 2 and ask the oracle
          auto reduce = [&](const MultiplierSystem& sys) {
            MultiplierSystem r = sys;
            r.ring = f2;
            for (Int& v : r.s) v = normalize(v, f2);
            return from_formal_ring(r);
          };
          const auto out = isomorphic(reduce(sys1), reduce(sys2));
          if (out.status != Tri::No) {
            detail = "mod-2 oracle cross-check did not refute the pair";
            return false;
          }
          ++negatives;
        }
      }
    }
  }
  detail = std::to_string(positives) + " witnessed positives, " +
           std::to_string(negatives) + " oracle-confirmed negatives";
  return positives > 0 && negatives > 0;
}

// ---------------------------------------------------------------------------

struct CliFixtures {
  std::filesystem::path dir;
  CliFixtures() {
    dir = std::filesystem::temp_directory_path() /
          ("fmr_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~CliFixtures() { std::filesystem::remove_all(dir); }
  std::string write(const std::string& name, const nlohmann::json& j) {
    const auto path = dir / name;
    std::ofstream(path) << j.dump();
    return path.string();
  }
};

bool run_cli(const std::string& args, int expect_exit, bool expect_json,
             std::string& detail) {
  const std::string cmd = std::string(FMR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    detail = "popen failed";
    return false;
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != expect_exit) {
    detail = "`" + args + "` exited " + std::to_string(code) + ", expected " +
             std::to_string(expect_exit);
    return false;
  }
  if (expect_json) {
    std::istringstream in(out);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      any = true;
      if (nlohmann::json::parse(line, nullptr, false).is_discarded()) {
        detail = "`" + args + "` emitted unparseable JSON";
        return false;
      }
    }
    if (!any) {
      detail = "`" + args + "` emitted no JSON";
      return false;
    }
  }
  return true;
}

// Every subcommand responds, every exit code (0/1/2/3) occurs, and all
// emitted JSON re-parses.
bool check_cli_contract(std::string& detail) {
  CliFixtures fx;
  const RingSpec mod4 = RingSpec::mod(4);
  const RingSpec mod12 = RingSpec::mod(12);
  const RingSpec f2 = RingSpec::mod(2);
  const RingSpec z = RingSpec::integers();

  const auto good_sys = fx.write("good_sys.json", MultiplierSystem::all_ones(2, mod4));
  MultiplierSystem broken = MultiplierSystem::all_ones(2, mod4);
  broken.at(0, 0, 1) = 0;
  const auto bad_sys = fx.write("bad_sys.json", broken);

  FormalMatrix a = FormalMatrix::zero(2, mod4);
  a.entries = {1, 2, 3, 0};
  const auto mat = fx.write("mat.json", a);

  const auto pat21 = PrincipalPattern::from_partition({{0, 1}, {2}}, 3, z);
  const auto pat111 = PrincipalPattern::from_partition({{0}, {1}, {2}}, 3, z);
  const auto p21 = fx.write("p21.json", pat21);
  const auto p111 = fx.write("p111.json", pat111);
  const auto ring4 = fx.write("ring4.json", mod4);
  const auto ring6 = fx.write("ring6.json", RingSpec::mod(6));

  const auto merged = fx.write(
      "merged.json", realize01(PrincipalPattern::from_partition({{0, 1}}, 2, mod4)));
  const auto split = fx.write(
      "split.json", realize01(PrincipalPattern::from_partition({{0}, {1}}, 2, mod4)));
  const auto merged12 = fx.write(
      "merged12.json", realize01(PrincipalPattern::from_partition({{0, 1}}, 2, mod12)));
  const auto split12 = fx.write(
      "split12.json", realize01(PrincipalPattern::from_partition({{0}, {1}}, 2, mod12)));
  const auto rad_sys = fx.write(
      "rad.json", realize01(PrincipalPattern::from_partition({{0}, {1}}, 2, f2)));
  const auto alg_a = fx.write(
      "alg_a.json",
      from_formal_ring(realize01(PrincipalPattern::from_partition({{0, 1}, {2}}, 3, f2))));
  const auto alg_b = fx.write(
      "alg_b.json",
      from_formal_ring(realize01(PrincipalPattern::from_partition({{0}, {1, 2}}, 3, f2))));
  const auto alg_c = fx.write(
      "alg_c.json",
      from_formal_ring(realize01(PrincipalPattern::from_partition({{0}, {1}, {2}}, 3, f2))));

  const struct {
    std::string args;
    int exit_code;
    bool json;
  } cases[] = {
      {"validate " + good_sys, 0, true},
      {"validate " + bad_sys, 1, true},
      {"validate /nonexistent.json", 2, false},
      {"mul " + mat + " " + mat + " --system " + good_sys, 0, true},
      {"mul " + mat + " " + mat + " --system " + bad_sys, 2, false},
      {"canon " + p21, 0, true},
      {"realize " + p21, 0, true},
      {"realize " + p21 + " --s 2", 1, true},  // entries use 0, not the declared 2
      {"iso " + merged + " " + merged, 0, true},
      {"iso " + merged + " " + split, 1, true},
      {"iso " + merged12 + " " + split12, 3, true},
      {"quotient-iso " + p21 + " " + p111 + " --ring " + ring4, 1, true},
      {"quotient-iso " + p21 + " " + p21 + " --ring " + ring4, 0, true},
      {"quotient-iso " + p21 + " " + p111 + " --ring " + ring6, 3, true},
      {"radical " + rad_sys, 0, true},
      {"enumerate --n 4", 0, true},
      {"enumerate --n 3 --emit-all", 0, true},
      {"oracle " + alg_a + " " + alg_b, 0, true},
      {"oracle " + alg_a + " " + alg_c, 1, true},
      {"bogus-subcommand", 2, false},
  };
  int covered = 0;
  for (const auto& c : cases) {
    if (!run_cli(c.args, c.exit_code, c.json, detail)) return false;
    ++covered;
  }
  detail = std::to_string(covered) + " invocations, exit codes 0/1/2/3 all seen";
  return true;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"identity sweep, all 4096 order-3 0/1 tensors", 5.0, check_identity_sweep},
      {"realization round trip, 277 patterns", 10.0, check_realization_round_trip},
      {"twisted ring axioms on random triples", 30.0, check_ring_axioms},
      {"relabelling maps are ring isomorphisms", 30.0, check_permutation_isomorphism},
      {"pattern and class counting laws", 10.0, check_counting_laws},
      {"pattern decisions match the algebra oracle", 60.0, check_decision_vs_oracle},
      {"radical dimension law and semiprimitive quotients", 60.0,
       check_radical_dimension_law},
      {"quotient separation desk check", 30.0, check_quotient_separation},
      {"s-twisted decisions over Z/4 with witnesses", 60.0, check_s1_decisions},
      {"CLI contract: subcommands, exit codes, JSON", 10.0, check_cli_contract},
  };

  int failures = 0;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > check.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                std::to_string(check.limit_seconds) + " s";
    }
    std::printf("[%s] %-52s %6.2fs  %s\n", ok ? "PASS" : "FAIL", check.name.c_str(),
                secs, detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("%d of %zu checks failed\n", failures, checks.size());
    return 1;
  }
  std::printf("all %zu checks passed\n", checks.size());
  return 0;
}
