#pragma once

#include "fmr/multiplier_system.hpp"
#include "fmr/permutation.hpp"

#include <array>
#include <string>
#include <vector>

namespace fmr {

// Abstract principal multiplier matrix: symmetric, unit diagonal, entries in
// {1, zero_symbol}.  zero_symbol = 0 for (01)-patterns; for (s1)-patterns it
// is a central s with s^2 != 1 and s^2 != s.
struct PrincipalPattern {
  int n = 0;
  RingSpec ring;
  Int zero_symbol = 0;
  std::vector<Int> t;  // flat, index i*n + j

  const Int& at(int i, int j) const { return t[i * n + j]; }
  Int& at(int i, int j) { return t[i * n + j]; }

  bool is_s1() const { return zero_symbol != normalize(0, ring); }

  static PrincipalPattern all_ones(int n, const RingSpec& ring, Int zero_symbol = 0);
  static PrincipalPattern from_partition(const std::vector<std::vector<int>>& classes,
                                         int n, const RingSpec& ring,
                                         Int zero_symbol = 0);
  bool operator==(const PrincipalPattern& o) const {
    return n == o.n && ring == o.ring && zero_symbol == o.zero_symbol && t == o.t;
  }
};

// Symmetry / unit-diagonal / alphabet problems, reported separately from
// triple-condition violations.
std::vector<std::string> structure_errors(const PrincipalPattern& p);

// Triples (i,j,k), i<j<k, with exactly two of t_ij, t_jk, t_ki equal to 1.
std::vector<std::array<int, 3>> check_triple_condition(const PrincipalPattern& p);

// structure_errors empty and no triple violations.
bool is_valid_pattern(const PrincipalPattern& p);

// Classes of i ~ j <=> t_ij = 1, each sorted ascending, ordered by smallest
// member.  Throws on invalid patterns (the relation need not be transitive).
std::vector<std::vector<int>> equivalence_classes(const PrincipalPattern& p);

struct CanonicalForm {
  Permutation sigma;
  std::vector<int> block_sizes;  // descending

  bool operator==(const CanonicalForm& o) const {
    return sigma == o.sigma && block_sizes == o.block_sizes;
  }
};

// sigma reorders positions so classes appear contiguously, largest class
// first, ties by smallest original index, original order kept inside a class;
// applying sigma to the pattern yields the exact block-diagonal form.
CanonicalForm canonical_form(const PrincipalPattern& p);

// (tau T)[i][j] = T[tau(i)][tau(j)].
PrincipalPattern apply_permutation(const PrincipalPattern& p, const Permutation& tau);

// The block-diagonal pattern with the given descending block sizes.
PrincipalPattern block_diagonal_pattern(const std::vector<int>& block_sizes,
                                        const RingSpec& ring, Int zero_symbol = 0);

// All valid patterns of order n, one per set partition of {0..n-1}; count is
// the Bell number B(n).  Guarded at n <= 8.
std::vector<PrincipalPattern> enumerate_patterns(int n, const RingSpec& ring,
                                                 Int zero_symbol = 0);

// s_ijk = 1 if i ~ j or j ~ k, else 0.  Output is a valid K0-form system
// whose principal matrix is exactly the input.
MultiplierSystem realize01(const PrincipalPattern& p);

// (s1) realization.  s_ijk = s^e with e = [b(i)>b(j)] + [b(j)>b(k)] - [b(i)>b(k)],
// where b is the block index in canonical order; e is always 0 or 1.  Agrees
// with "1 if i ~ j or j ~ k, else s" whenever there are at most two blocks,
// and satisfies the defining identities for any number of blocks.
MultiplierSystem realize_s1(const PrincipalPattern& p);

// Principal matrix of a system read back as a pattern with the given
// zero-role symbol.
PrincipalPattern principal_pattern(const MultiplierSystem& sys, Int zero_symbol = 0);

void to_json(nlohmann::json& j, const PrincipalPattern& p);
void from_json(const nlohmann::json& j, PrincipalPattern& p);
void to_json(nlohmann::json& j, const CanonicalForm& c);
void from_json(const nlohmann::json& j, CanonicalForm& c);

}  // namespace fmr
