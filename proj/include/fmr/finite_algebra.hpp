#pragma once

#include "fmr/multiplier_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmr {

// Coordinates mod p.
using FpVec = std::vector<uint8_t>;
using FpMat = std::vector<FpVec>;  // rows

// Finite-dimensional associative unital algebra over F_p, given by structure
// constants: basis_a * basis_b = sum_e table[a][b][e] basis_e.
struct FiniteAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<uint8_t> table;  // flat, index (a*dim + b)*dim + e
  FpVec unity;

  uint8_t tab(int a, int b, int e) const {
    return table[(static_cast<size_t>(a) * dim + b) * dim + e];
  }
  uint8_t& tab(int a, int b, int e) {
    return table[(static_cast<size_t>(a) * dim + b) * dim + e];
  }

  bool operator==(const FiniteAlgebra& o) const {
    return p == o.p && dim == o.dim && table == o.table && unity == o.unity;
  }
};

// Associativity of the table and two-sidedness of unity; empty = valid.
std::vector<std::string> check_structure(const FiniteAlgebra& a);

FpVec alg_mul(const FiniteAlgebra& a, const FpVec& x, const FpVec& y);
FpVec alg_add(int p, FpVec x, const FpVec& y);

// M(n, F_p, Sigma) on the matrix-unit basis E_ij, index i*n + j; dim = n^2.
FiniteAlgebra from_formal_ring(const MultiplierSystem& sys);

// Row-reduced linear algebra over F_p.
FpMat rref(int p, FpMat rows);
int rank_of(int p, FpMat rows);
// Reduce v against rows already in reduced echelon form.
FpVec reduce_against(int p, const FpMat& rrefRows, FpVec v);
bool in_span(int p, const FpMat& rrefRows, const FpVec& v);

struct Ideal {
  FpMat basis;  // linearly independent, reduced echelon form
  int dimension() const { return static_cast<int>(basis.size()); }
};

bool is_two_sided_ideal(const FiniteAlgebra& a, const FpMat& basis);

// Throws unless the span of the given vectors is a two-sided ideal.
Ideal make_ideal(const FiniteAlgebra& a, FpMat spanning);

// Smallest k <= dim with I^k = 0, or nullopt if the ideal is not nilpotent.
std::optional<int> nilpotency_index(const FiniteAlgebra& a, const Ideal& ideal);

// Jacobson (= prime) radical via quasi-regularity: x is in J iff 1 - y is
// invertible for every y in the left ideal Ax, with invertibility decided
// through the left regular representation.  Guard: p^dim <= enum_guard.
Ideal radical(const FiniteAlgebra& a, uint64_t enum_guard = uint64_t{1} << 20);

// A / I on the complement basis obtained by greedy extension in index order.
FiniteAlgebra quotient(const FiniteAlgebra& a, const Ideal& ideal);

bool is_commutative(const FiniteAlgebra& a);
int center_dim(const FiniteAlgebra& a);
// Number of solutions of x^2 = x; requires p^dim <= enum_guard.
uint64_t count_idempotents(const FiniteAlgebra& a, uint64_t enum_guard = uint64_t{1} << 20);

enum class Tri { Yes, No, Maybe };

struct IsoOutcome {
  Tri status = Tri::Maybe;
  // Row-major dim x dim matrix W over F_p mapping coordinates of A to
  // coordinates of B; present iff status == Yes.
  FpMat witness;
  std::string detail;
};

// Invariant pre-filter (dimension, commutativity, center, radical dimension,
// idempotent count), then a generator-image backtracking search with
// constraint propagation when p^dim <= search_guard.  Never returns a silent
// false: an exceeded guard with agreeing invariants yields Maybe.
IsoOutcome isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      uint64_t search_guard = uint64_t{1} << 16,
                      uint64_t enum_guard = uint64_t{1} << 20);

// Independent re-verification: W invertible, unity-preserving, transports the
// whole multiplication table.
bool verify_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FpMat& w);

void to_json(nlohmann::json& j, const FiniteAlgebra& a);
void from_json(const nlohmann::json& j, FiniteAlgebra& a);
void to_json(nlohmann::json& j, const Ideal& ideal);

}  // namespace fmr
