#pragma once

#include "fmr/permutation.hpp"
#include "fmr/ring.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fmr {

using IntGrid = std::vector<std::vector<Int>>;

// The n^3 tensor {s_ijk} of central multipliers defining M(n,R,Sigma).
struct MultiplierSystem {
  int n = 0;
  RingSpec ring;
  std::vector<Int> s;  // flat, index (i*n + j)*n + k

  const Int& at(int i, int j, int k) const { return s[(i * n + j) * n + k]; }
  Int& at(int i, int j, int k) { return s[(i * n + j) * n + k]; }

  // All multipliers 1: the ordinary matrix ring M(n,R).
  static MultiplierSystem all_ones(int n, const RingSpec& ring);

  bool operator==(const MultiplierSystem& o) const {
    return n == o.n && ring == o.ring && s == o.s;
  }
};

// A failed instance of the defining identities.
struct IdentityViolation {
  enum class Kind {
    UnitFirst,   // s_iik != 1 at (i,i,k)
    UnitSecond,  // s_ikk != 1 at (i,k,k)
    Cocycle,     // s_ijk*s_ikl != s_ijl*s_jkl at (i,j,k,l)
  };
  Kind kind;
  std::array<int, 4> idx;  // idx[3] unused for the unit kinds

  std::string describe() const;
};

// Every violated instance of the identities; empty iff Sigma is genuine.
std::vector<IdentityViolation> validate_identities(const MultiplierSystem& sys);

// S with S[i][j] = s_iji.
IntGrid principal_matrix(const MultiplierSystem& sys);

// S_k with S_k[i][j] = s_ikj.
IntGrid multiplier_matrix_k(const MultiplierSystem& sys, int k);

// tau Sigma with t_ijk = s_{tau(i) tau(j) tau(k)}.
MultiplierSystem permute(const MultiplierSystem& sys, const Permutation& tau);

struct SystemClass {
  bool is01 = false;
  bool isS1 = false;
  bool isK0 = false;
};

// isS1 is only evaluated when s_candidate is supplied; a candidate with
// s^2 = 1 or s^2 = s is rejected with an error naming the inequality.
SystemClass classify(const MultiplierSystem& sys,
                     const std::optional<Int>& s_candidate = std::nullopt);

// Throws when s violates s^2 != 1 or s^2 != s in the ring.
void require_valid_s(const Int& s, const RingSpec& ring);

void to_json(nlohmann::json& j, const MultiplierSystem& sys);
void from_json(const nlohmann::json& j, MultiplierSystem& sys);
void to_json(nlohmann::json& j, const IdentityViolation& v);

}  // namespace fmr
