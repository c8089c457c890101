#include "fmr/formal_matrix.hpp"

#include <stdexcept>

namespace fmr {

FormalMatrix FormalMatrix::zero(int n, const RingSpec& ring) {
  FormalMatrix m;
  m.n = n;
  m.ring = ring;
  m.entries.assign(static_cast<size_t>(n) * n, normalize(0, ring));
  return m;
}

FormalMatrix FormalMatrix::identity(int n, const RingSpec& ring) {
  FormalMatrix m = zero(n, ring);
  for (int i = 0; i < n; ++i) m.at(i, i) = normalize(1, ring);
  return m;
}

static void check_pair(const FormalMatrix& a, const FormalMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix orders differ");
  if (a.ring != b.ring) throw std::invalid_argument("matrix rings differ");
}

FormalMatrix add(const FormalMatrix& a, const FormalMatrix& b) {
  check_pair(a, b);
  FormalMatrix c = a;
  for (size_t t = 0; t < c.entries.size(); ++t) {
    c.entries[t] = ring_add(a.entries[t], b.entries[t], a.ring);
  }
  return c;
}

FormalMatrix negate(const FormalMatrix& a) {
  FormalMatrix c = a;
  for (Int& v : c.entries) v = ring_neg(v, a.ring);
  return c;
}

FormalMatrix twisted_multiply(const FormalMatrix& a, const FormalMatrix& b,
                              const MultiplierSystem& sys) {
  check_pair(a, b);
  if (sys.n != a.n || sys.ring != a.ring) {
    throw std::invalid_argument("multiplier system does not match matrices");
  }
  FormalMatrix c = FormalMatrix::zero(a.n, a.ring);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      Int acc = normalize(0, a.ring);
      for (int k = 0; k < a.n; ++k) {
        Int term = ring_mul(sys.at(i, k, j), ring_mul(a.at(i, k), b.at(k, j), a.ring),
                            a.ring);
        acc = ring_add(acc, term, a.ring);
      }
      c.at(i, j) = acc;
    }
  }
  return c;
}

FormalMatrix tau_image(const FormalMatrix& a, const Permutation& tau) {
  if (tau.degree() != a.n) {
    throw std::invalid_argument("permutation degree does not match matrix order");
  }
  FormalMatrix c = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) c.at(i, j) = a.at(tau(i), tau(j));
  return c;
}

void to_json(nlohmann::json& j, const FormalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj < m.n; ++jj) row.push_back(int_to_json(m.at(i, jj)));
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"n", m.n}, {"ring", m.ring}, {"entries", std::move(rows)}};
}

void from_json(const nlohmann::json& j, FormalMatrix& m) {
  m.n = j.at("n").get<int>();
  if (m.n < 1) throw std::invalid_argument("matrix order must be positive");
  m.ring = j.at("ring").get<RingSpec>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.n) {
    throw std::invalid_argument("matrix entries have wrong shape");
  }
  m.entries.resize(static_cast<size_t>(m.n) * m.n);
  for (int i = 0; i < m.n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != m.n) {
      throw std::invalid_argument("matrix entries have wrong shape");
    }
    for (int jj = 0; jj < m.n; ++jj) {
      m.at(i, jj) = normalize(int_from_json(row.at(jj)), m.ring);
    }
  }
}

}  // namespace fmr
