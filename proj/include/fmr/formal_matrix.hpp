#pragma once

#include "fmr/multiplier_system.hpp"

namespace fmr {

// n x n matrix over the base ring; multiplication is supplied externally
// by a multiplier system.
struct FormalMatrix {
  int n = 0;
  RingSpec ring;
  std::vector<Int> entries;  // flat, index i*n + j

  const Int& at(int i, int j) const { return entries[i * n + j]; }
  Int& at(int i, int j) { return entries[i * n + j]; }

  static FormalMatrix zero(int n, const RingSpec& ring);
  static FormalMatrix identity(int n, const RingSpec& ring);

  bool operator==(const FormalMatrix& o) const {
    return n == o.n && ring == o.ring && entries == o.entries;
  }
};

FormalMatrix add(const FormalMatrix& a, const FormalMatrix& b);
FormalMatrix negate(const FormalMatrix& a);

// c_ij = sum_k s_ikj * a_ik * b_kj.
FormalMatrix twisted_multiply(const FormalMatrix& a, const FormalMatrix& b,
                              const MultiplierSystem& sys);

// (tau A)[i][j] = A[tau(i)][tau(j)].  A -> tau A is a ring isomorphism
// M(n,R,Sigma) -> M(n,R,tau Sigma) with the same tau on both sides, i.e.
// tau_image(A *_Sigma B, tau) = tau_image(A,tau) *_{permute(Sigma,tau)} tau_image(B,tau).
FormalMatrix tau_image(const FormalMatrix& a, const Permutation& tau);

void to_json(nlohmann::json& j, const FormalMatrix& m);
void from_json(const nlohmann::json& j, FormalMatrix& m);

}  // namespace fmr
