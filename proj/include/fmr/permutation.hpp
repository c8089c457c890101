#pragma once

#include <nlohmann/json.hpp>

#include <vector>

namespace fmr {

// Bijection on {0..n-1}; images[i] is the image of i.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }

  static Permutation identity(int n);
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return images == o.images; }
};

bool is_permutation(const std::vector<int>& images);

// Throws if images is not a bijection on {0..n-1}.
Permutation make_permutation(std::vector<int> images);

// (tau o rho)(i) = tau(rho(i)).
Permutation compose(const Permutation& tau, const Permutation& rho);

// All n! permutations of degree n, lexicographic by images.
std::vector<Permutation> all_permutations(int n);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

}  // namespace fmr
