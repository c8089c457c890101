#include "fmr/multiplier_system.hpp"

#include <stdexcept>

namespace fmr {

MultiplierSystem MultiplierSystem::all_ones(int n, const RingSpec& ring) {
  MultiplierSystem sys;
  sys.n = n;
  sys.ring = ring;
  sys.s.assign(static_cast<size_t>(n) * n * n, normalize(1, ring));
  return sys;
}

std::string IdentityViolation::describe() const {
  char buf[96];
  switch (kind) {
    case Kind::UnitFirst:
      std::snprintf(buf, sizeof buf, "s[%d][%d][%d] != 1", idx[0], idx[0], idx[2]);
      break;
    case Kind::UnitSecond:
      std::snprintf(buf, sizeof buf, "s[%d][%d][%d] != 1", idx[0], idx[2], idx[2]);
      break;
    case Kind::Cocycle:
      std::snprintf(buf, sizeof buf,
                    "s[%d][%d][%d]*s[%d][%d][%d] != s[%d][%d][%d]*s[%d][%d][%d]",
                    idx[0], idx[1], idx[2], idx[0], idx[2], idx[3], idx[0], idx[1],
                    idx[3], idx[1], idx[2], idx[3]);
      break;
  }
  return buf;
}

static void check_shape(const MultiplierSystem& sys) {
  if (sys.n < 2) throw std::invalid_argument("multiplier system order must be >= 2");
  const size_t want = static_cast<size_t>(sys.n) * sys.n * sys.n;
  if (sys.s.size() != want) {
    throw std::invalid_argument("multiplier tensor has wrong shape");
  }
}

std::vector<IdentityViolation> validate_identities(const MultiplierSystem& sys) {
  check_shape(sys);
  const int n = sys.n;
  const Int one = normalize(1, sys.ring);
  std::vector<IdentityViolation> out;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (normalize(sys.at(i, i, k), sys.ring) != one) {
        out.push_back({IdentityViolation::Kind::UnitFirst, {i, i, k, -1}});
      }
      if (normalize(sys.at(i, k, k), sys.ring) != one) {
        out.push_back({IdentityViolation::Kind::UnitSecond, {i, k, k, -1}});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Int lhs = ring_mul(sys.at(i, j, k), sys.at(i, k, l), sys.ring);
          const Int rhs = ring_mul(sys.at(i, j, l), sys.at(j, k, l), sys.ring);
          if (lhs != rhs) {
            out.push_back({IdentityViolation::Kind::Cocycle, {i, j, k, l}});
          }
        }
      }
    }
  }
  return out;
}

IntGrid principal_matrix(const MultiplierSystem& sys) {
  check_shape(sys);
  IntGrid m(sys.n, std::vector<Int>(sys.n));
  for (int i = 0; i < sys.n; ++i)
    for (int j = 0; j < sys.n; ++j) m[i][j] = sys.at(i, j, i);
  return m;
}

IntGrid multiplier_matrix_k(const MultiplierSystem& sys, int k) {
  check_shape(sys);
  if (k < 0 || k >= sys.n) throw std::out_of_range("multiplier matrix index out of range");
  IntGrid m(sys.n, std::vector<Int>(sys.n));
  for (int i = 0; i < sys.n; ++i)
    for (int j = 0; j < sys.n; ++j) m[i][j] = sys.at(i, k, j);
  return m;
}

MultiplierSystem permute(const MultiplierSystem& sys, const Permutation& tau) {
  check_shape(sys);
  if (tau.degree() != sys.n) {
    throw std::invalid_argument("permutation degree does not match system order");
  }
  MultiplierSystem out;
  out.n = sys.n;
  out.ring = sys.ring;
  out.s.resize(sys.s.size());
  for (int i = 0; i < sys.n; ++i)
    for (int j = 0; j < sys.n; ++j)
      for (int k = 0; k < sys.n; ++k)
        out.at(i, j, k) = sys.at(tau(i), tau(j), tau(k));
  return out;
}

void require_valid_s(const Int& s, const RingSpec& ring) {
  const Int sq = ring_mul(s, s, ring);
  if (sq == normalize(1, ring)) {
    throw std::invalid_argument("s violates s^2 != 1 in " + ring.describe());
  }
  if (sq == normalize(s, ring)) {
    throw std::invalid_argument("s violates s^2 != s in " + ring.describe());
  }
}

SystemClass classify(const MultiplierSystem& sys, const std::optional<Int>& s_candidate) {
  check_shape(sys);
  const Int zero = normalize(0, sys.ring);
  const Int one = normalize(1, sys.ring);

  SystemClass c;
  c.is01 = true;
  for (const Int& v : sys.s) {
    if (v != zero && v != one) {
      c.is01 = false;
      break;
    }
  }

  if (s_candidate) {
    require_valid_s(*s_candidate, sys.ring);
    const Int s = normalize(*s_candidate, sys.ring);
    c.isS1 = true;
    for (const Int& v : sys.s) {
      if (v != one && v != s) {
        c.isS1 = false;
        break;
      }
    }
  }

  if (c.is01) {
    c.isK0 = true;
    const int n = sys.n;
    for (int i = 0; i < n && c.isK0; ++i)
      for (int j = 0; j < n && c.isK0; ++j)
        for (int k = 0; k < n && c.isK0; ++k) {
          if (i == j || j == k || i == k) continue;
          if (sys.at(i, j, i) == zero && sys.at(j, k, j) == zero &&
              sys.at(i, j, k) != zero) {
            c.isK0 = false;
          }
        }
  }
  return c;
}

void to_json(nlohmann::json& j, const MultiplierSystem& sys) {
  nlohmann::json tensor = nlohmann::json::array();
  for (int i = 0; i < sys.n; ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (int jj = 0; jj < sys.n; ++jj) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < sys.n; ++k) row.push_back(int_to_json(sys.at(i, jj, k)));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  j = nlohmann::json{{"n", sys.n}, {"ring", sys.ring}, {"s", std::move(tensor)}};
}

void from_json(const nlohmann::json& j, MultiplierSystem& sys) {
  sys.n = j.at("n").get<int>();
  sys.ring = j.at("ring").get<RingSpec>();
  const auto& tensor = j.at("s");
  if (!tensor.is_array() || static_cast<int>(tensor.size()) != sys.n) {
    throw std::invalid_argument("multiplier tensor has wrong shape");
  }
  sys.s.resize(static_cast<size_t>(sys.n) * sys.n * sys.n);
  for (int i = 0; i < sys.n; ++i) {
    const auto& plane = tensor.at(i);
    if (!plane.is_array() || static_cast<int>(plane.size()) != sys.n) {
      throw std::invalid_argument("multiplier tensor has wrong shape");
    }
    for (int jj = 0; jj < sys.n; ++jj) {
      const auto& row = plane.at(jj);
      if (!row.is_array() || static_cast<int>(row.size()) != sys.n) {
        throw std::invalid_argument("multiplier tensor has wrong shape");
      }
      for (int k = 0; k < sys.n; ++k) {
        sys.at(i, jj, k) = normalize(int_from_json(row.at(k)), sys.ring);
      }
    }
  }
}

void to_json(nlohmann::json& j, const IdentityViolation& v) {
  const char* kind = v.kind == IdentityViolation::Kind::Cocycle ? "cocycle" : "unit";
  nlohmann::json idx = nlohmann::json::array();
  for (int t = 0; t < (v.kind == IdentityViolation::Kind::Cocycle ? 4 : 3); ++t) {
    idx.push_back(v.idx[t]);
  }
  j = nlohmann::json{{"kind", kind}, {"indices", std::move(idx)}, {"what", v.describe()}};
}

}  // namespace fmr
