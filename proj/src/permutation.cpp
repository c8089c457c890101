#include "fmr/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fmr {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) inv.images[images[i]] = i;
  return inv;
}

bool is_permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation make_permutation(std::vector<int> images) {
  if (!is_permutation(images)) {
    throw std::invalid_argument("images do not form a permutation");
  }
  return Permutation{std::move(images)};
}

Permutation compose(const Permutation& tau, const Permutation& rho) {
  if (tau.degree() != rho.degree()) {
    throw std::invalid_argument("permutation degrees differ");
  }
  Permutation r;
  r.images.resize(tau.degree());
  for (int i = 0; i < tau.degree(); ++i) r.images[i] = tau(rho(i));
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void to_json(nlohmann::json& j, const Permutation& p) {
  j = nlohmann::json{{"images", p.images}};
}

void from_json(const nlohmann::json& j, Permutation& p) {
  p = make_permutation(j.at("images").get<std::vector<int>>());
}

}  // namespace fmr
