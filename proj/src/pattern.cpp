#include "fmr/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fmr {

PrincipalPattern PrincipalPattern::all_ones(int n, const RingSpec& ring, Int zero_symbol) {
  PrincipalPattern p;
  p.n = n;
  p.ring = ring;
  p.zero_symbol = normalize(zero_symbol, ring);
  p.t.assign(static_cast<size_t>(n) * n, normalize(1, ring));
  return p;
}

PrincipalPattern PrincipalPattern::from_partition(
    const std::vector<std::vector<int>>& classes, int n, const RingSpec& ring,
    Int zero_symbol) {
  std::vector<int> class_of(n, -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    for (int i : classes[c]) {
      if (i < 0 || i >= n || class_of[i] != -1) {
        throw std::invalid_argument("classes do not partition {0..n-1}");
      }
      class_of[i] = static_cast<int>(c);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (class_of[i] == -1) throw std::invalid_argument("classes do not cover {0..n-1}");
  }
  PrincipalPattern p;
  p.n = n;
  p.ring = ring;
  p.zero_symbol = normalize(zero_symbol, ring);
  const Int one = normalize(1, ring);
  p.t.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.at(i, j) = class_of[i] == class_of[j] ? one : p.zero_symbol;
  return p;
}

std::vector<std::string> structure_errors(const PrincipalPattern& p) {
  std::vector<std::string> errs;
  if (p.n < 1) {
    errs.push_back("pattern order must be positive");
    return errs;
  }
  if (p.t.size() != static_cast<size_t>(p.n) * p.n) {
    errs.push_back("pattern grid has wrong shape");
    return errs;
  }
  const Int one = normalize(1, p.ring);
  const Int zero = normalize(p.zero_symbol, p.ring);
  if (zero != p.zero_symbol) errs.push_back("zero_symbol is not canonical");
  if (zero == one) errs.push_back("zero_symbol coincides with 1");
  if (p.is_s1()) {
    const Int sq = ring_mul(zero, zero, p.ring);
    if (sq == one) errs.push_back("zero_symbol violates s^2 != 1");
    if (sq == zero) errs.push_back("zero_symbol violates s^2 != s");
  }
  for (int i = 0; i < p.n; ++i) {
    if (p.at(i, i) != one) {
      errs.push_back("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                     ") is not 1");
    }
    for (int j = 0; j < p.n; ++j) {
      if (p.at(i, j) != one && p.at(i, j) != zero) {
        errs.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is neither 1 nor the zero symbol");
      }
      if (j > i && p.at(i, j) != p.at(j, i)) {
        errs.push_back("asymmetry at (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
      }
    }
  }
  return errs;
}

std::vector<std::array<int, 3>> check_triple_condition(const PrincipalPattern& p) {
  const Int one = normalize(1, p.ring);
  std::vector<std::array<int, 3>> bad;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      for (int k = j + 1; k < p.n; ++k) {
        int ones = (p.at(i, j) == one) + (p.at(j, k) == one) + (p.at(k, i) == one);
        if (ones == 2) bad.push_back({i, j, k});
      }
  return bad;
}

bool is_valid_pattern(const PrincipalPattern& p) {
  return structure_errors(p).empty() && check_triple_condition(p).empty();
}

std::vector<std::vector<int>> equivalence_classes(const PrincipalPattern& p) {
  if (!is_valid_pattern(p)) throw std::invalid_argument("invalid principal pattern");
  const Int one = normalize(1, p.ring);
  std::vector<int> class_of(p.n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < p.n; ++i) {
    if (class_of[i] != -1) continue;
    std::vector<int> cls;
    for (int j = i; j < p.n; ++j) {
      if (p.at(i, j) == one) {
        class_of[j] = static_cast<int>(classes.size());
        cls.push_back(j);
      }
    }
    classes.push_back(std::move(cls));
  }
  // The triple condition makes ~ transitive; confirm closure anyway.
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      const bool related = p.at(i, j) == one;
      if (related != (class_of[i] == class_of[j])) {
        throw std::logic_error("equivalence closure failed on a valid pattern");
      }
    }
  return classes;
}

// Classes in canonical presentation order: size descending, ties by smallest
// original member.
static std::vector<std::vector<int>> ordered_classes(const PrincipalPattern& p) {
  auto classes = equivalence_classes(p);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return classes;
}

CanonicalForm canonical_form(const PrincipalPattern& p) {
  const auto classes = ordered_classes(p);
  CanonicalForm cf;
  for (const auto& cls : classes) {
    cf.block_sizes.push_back(static_cast<int>(cls.size()));
    cf.sigma.images.insert(cf.sigma.images.end(), cls.begin(), cls.end());
  }
  return cf;
}

PrincipalPattern apply_permutation(const PrincipalPattern& p, const Permutation& tau) {
  if (tau.degree() != p.n) {
    throw std::invalid_argument("permutation degree does not match pattern order");
  }
  PrincipalPattern q = p;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) q.at(i, j) = p.at(tau(i), tau(j));
  return q;
}

PrincipalPattern block_diagonal_pattern(const std::vector<int>& block_sizes,
                                        const RingSpec& ring, Int zero_symbol) {
  std::vector<std::vector<int>> classes;
  int pos = 0;
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    std::vector<int> cls(b);
    for (int t = 0; t < b; ++t) cls[t] = pos++;
    classes.push_back(std::move(cls));
  }
  return PrincipalPattern::from_partition(classes, pos, ring, std::move(zero_symbol));
}

static void enumerate_rgs(int n, int i, int maxv, std::vector<int>& a,
                          const std::function<void(const std::vector<int>&)>& emit) {
  if (i == n) {
    emit(a);
    return;
  }
  for (int v = 0; v <= maxv + 1; ++v) {
    a[i] = v;
    enumerate_rgs(n, i + 1, std::max(maxv, v), a, emit);
  }
}

std::vector<PrincipalPattern> enumerate_patterns(int n, const RingSpec& ring,
                                                 Int zero_symbol) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_patterns requires 1 <= n <= 8");
  std::vector<PrincipalPattern> out;
  std::vector<int> a(n);
  a[0] = 0;
  auto emit = [&](const std::vector<int>& rgs) {
    const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> classes(k);
    for (int i = 0; i < n; ++i) classes[rgs[i]].push_back(i);
    out.push_back(PrincipalPattern::from_partition(classes, n, ring, zero_symbol));
  };
  enumerate_rgs(n, 1, 0, a, emit);
  return out;
}

static std::vector<int> class_index_of(const PrincipalPattern& p,
                                       const std::vector<std::vector<int>>& classes) {
  std::vector<int> idx(p.n, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int i : classes[c]) idx[i] = static_cast<int>(c);
  return idx;
}

MultiplierSystem realize01(const PrincipalPattern& p) {
  if (p.is_s1()) throw std::invalid_argument("realize01 requires a (01)-pattern");
  const auto cls = class_index_of(p, equivalence_classes(p));
  MultiplierSystem sys;
  sys.n = p.n;
  sys.ring = p.ring;
  sys.s.resize(static_cast<size_t>(p.n) * p.n * p.n);
  const Int one = normalize(1, p.ring);
  const Int zero = normalize(0, p.ring);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      for (int k = 0; k < p.n; ++k)
        sys.at(i, j, k) = (cls[i] == cls[j] || cls[j] == cls[k]) ? one : zero;
  return sys;
}

MultiplierSystem realize_s1(const PrincipalPattern& p) {
  if (!p.is_s1()) throw std::invalid_argument("realize_s1 requires an (s1)-pattern");
  require_valid_s(p.zero_symbol, p.ring);
  const auto blk = class_index_of(p, ordered_classes(p));
  MultiplierSystem sys;
  sys.n = p.n;
  sys.ring = p.ring;
  sys.s.resize(static_cast<size_t>(p.n) * p.n * p.n);
  const Int one = normalize(1, p.ring);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      for (int k = 0; k < p.n; ++k) {
        const int e = (blk[i] > blk[j]) + (blk[j] > blk[k]) - (blk[i] > blk[k]);
        sys.at(i, j, k) = e ? p.zero_symbol : one;
      }
  return sys;
}

PrincipalPattern principal_pattern(const MultiplierSystem& sys, Int zero_symbol) {
  PrincipalPattern p;
  p.n = sys.n;
  p.ring = sys.ring;
  p.zero_symbol = normalize(zero_symbol, sys.ring);
  p.t.resize(static_cast<size_t>(sys.n) * sys.n);
  for (int i = 0; i < sys.n; ++i)
    for (int j = 0; j < sys.n; ++j) p.at(i, j) = sys.at(i, j, i);
  return p;
}

void to_json(nlohmann::json& j, const PrincipalPattern& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < p.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj < p.n; ++jj) row.push_back(int_to_json(p.at(i, jj)));
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"n", p.n},
                     {"ring", p.ring},
                     {"zero_symbol", int_to_json(p.zero_symbol)},
                     {"t", std::move(rows)}};
}

void from_json(const nlohmann::json& j, PrincipalPattern& p) {
  p.n = j.at("n").get<int>();
  if (p.n < 1) throw std::invalid_argument("pattern order must be positive");
  p.ring = j.at("ring").get<RingSpec>();
  p.zero_symbol = normalize(int_from_json(j.at("zero_symbol")), p.ring);
  const auto& rows = j.at("t");
  if (!rows.is_array() || static_cast<int>(rows.size()) != p.n) {
    throw std::invalid_argument("pattern grid has wrong shape");
  }
  p.t.resize(static_cast<size_t>(p.n) * p.n);
  for (int i = 0; i < p.n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != p.n) {
      throw std::invalid_argument("pattern grid has wrong shape");
    }
    for (int jj = 0; jj < p.n; ++jj) {
      p.at(i, jj) = normalize(int_from_json(row.at(jj)), p.ring);
    }
  }
}

void to_json(nlohmann::json& j, const CanonicalForm& c) {
  j = nlohmann::json{{"sigma", c.sigma}, {"block_sizes", c.block_sizes}};
}

void from_json(const nlohmann::json& j, CanonicalForm& c) {
  c.sigma = j.at("sigma").get<Permutation>();
  c.block_sizes = j.at("block_sizes").get<std::vector<int>>();
}

}  // namespace fmr
