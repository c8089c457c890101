#include "fmr/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fmr {

namespace {

inline int addm(int a, int b, int p) {
  int r = a + b;
  return r >= p ? r - p : r;
}
inline int subm(int a, int b, int p) {
  int r = a - b;
  return r < 0 ? r + p : r;
}
inline int mulm(int a, int b, int p) { return (a * b) % p; }

int inv_mod(int a, int p) {
  // p prime, 0 < a < p
  int r = 1, e = p - 2, base = a;
  while (e > 0) {
    if (e & 1) r = mulm(r, base, p);
    base = mulm(base, base, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_small(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// p^dim, or nullopt on overflow past limit.
std::optional<uint64_t> pow_checked(int p, int dim, uint64_t limit) {
  uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    if (total > limit / static_cast<uint64_t>(p)) return std::nullopt;
    total *= static_cast<uint64_t>(p);
  }
  return total;
}

FpVec decode_elem(uint64_t idx, int p, int dim) {
  FpVec v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = static_cast<uint8_t>(idx % p);
    idx /= p;
  }
  return v;
}

uint64_t encode_elem(const FpVec& v, int p) {
  uint64_t idx = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    idx = idx * p + v[i];
  }
  return idx;
}

// Left regular representation: column j of L is z * b_j.
FpMat left_matrix(const FiniteAlgebra& a, const FpVec& z) {
  FpMat l(a.dim, FpVec(a.dim, 0));
  for (int j = 0; j < a.dim; ++j)
    for (int aa = 0; aa < a.dim; ++aa) {
      if (z[aa] == 0) continue;
      for (int e = 0; e < a.dim; ++e) {
        l[e][j] = static_cast<uint8_t>(
            addm(l[e][j], mulm(z[aa], a.tab(aa, j, e), a.p), a.p));
      }
    }
  return l;
}

FpMat mat_mul(int p, const FpMat& x, const FpMat& y) {
  const int n = static_cast<int>(x.size());
  FpMat z(n, FpVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) {
        z[i][j] = static_cast<uint8_t>(addm(z[i][j], mulm(x[i][k], y[k][j], p), p));
      }
    }
  return z;
}

FpVec mat_apply(int p, const FpMat& w, const FpVec& x) {
  const int n = static_cast<int>(w.size());
  FpVec y(n, 0);
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < n; ++i) {
      y[i] = static_cast<uint8_t>(addm(y[i], mulm(w[i][j], x[j], p), p));
    }
  }
  return y;
}

}  // namespace

FpVec alg_mul(const FiniteAlgebra& a, const FpVec& x, const FpVec& y) {
  FpVec z(a.dim, 0);
  for (int aa = 0; aa < a.dim; ++aa) {
    if (x[aa] == 0) continue;
    for (int bb = 0; bb < a.dim; ++bb) {
      if (y[bb] == 0) continue;
      const int c = mulm(x[aa], y[bb], a.p);
      for (int e = 0; e < a.dim; ++e) {
        z[e] = static_cast<uint8_t>(addm(z[e], mulm(c, a.tab(aa, bb, e), a.p), a.p));
      }
    }
  }
  return z;
}

FpVec alg_add(int p, FpVec x, const FpVec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<uint8_t>(addm(x[i], y[i], p));
  return x;
}

std::vector<std::string> check_structure(const FiniteAlgebra& a) {
  std::vector<std::string> errs;
  if (a.dim < 1) errs.push_back("dimension must be positive");
  if (!is_prime_small(a.p)) errs.push_back("characteristic is not prime");
  if (a.table.size() != static_cast<size_t>(a.dim) * a.dim * a.dim ||
      a.unity.size() != static_cast<size_t>(a.dim)) {
    errs.push_back("structure constant table has wrong shape");
    return errs;
  }
  for (uint8_t v : a.table) {
    if (v >= a.p) {
      errs.push_back("structure constant out of range");
      return errs;
    }
  }
  FpVec ea(a.dim, 0), eb(a.dim, 0);
  for (int x = 0; x < a.dim && errs.size() < 8; ++x) {
    ea.assign(a.dim, 0);
    ea[x] = 1;
    FpVec lhs = alg_mul(a, a.unity, ea);
    FpVec rhs = alg_mul(a, ea, a.unity);
    if (lhs != ea) errs.push_back("unity fails on the left at basis " + std::to_string(x));
    if (rhs != ea) errs.push_back("unity fails on the right at basis " + std::to_string(x));
  }
  for (int x = 0; x < a.dim; ++x) {
    for (int y = 0; y < a.dim; ++y) {
      FpVec xy(a.dim);
      for (int e = 0; e < a.dim; ++e) xy[e] = a.tab(x, y, e);
      for (int z = 0; z < a.dim; ++z) {
        FpVec yz(a.dim);
        for (int e = 0; e < a.dim; ++e) yz[e] = a.tab(y, z, e);
        ea.assign(a.dim, 0);
        ea[x] = 1;
        eb.assign(a.dim, 0);
        eb[z] = 1;
        if (alg_mul(a, xy, eb) != alg_mul(a, ea, yz)) {
          errs.push_back("associativity fails at basis triple (" + std::to_string(x) +
                         "," + std::to_string(y) + "," + std::to_string(z) + ")");
          if (errs.size() >= 16) return errs;
        }
      }
    }
  }
  return errs;
}

FiniteAlgebra from_formal_ring(const MultiplierSystem& sys) {
  if (sys.ring.kind != RingKind::IntegersMod) {
    throw std::invalid_argument("from_formal_ring requires a ring Z/p");
  }
  if (sys.ring.modulus > 1000000) {
    throw std::invalid_argument("modulus too large for finite algebra");
  }
  const long long p = static_cast<long long>(sys.ring.modulus);
  if (!is_prime_small(p)) {
    throw std::invalid_argument("from_formal_ring requires a prime modulus, got " +
                                std::to_string(p));
  }
  const int n = sys.n;
  FiniteAlgebra a;
  a.p = static_cast<int>(p);
  a.dim = n * n;
  a.table.assign(static_cast<size_t>(a.dim) * a.dim * a.dim, 0);
  a.unity.assign(a.dim, 0);
  for (int i = 0; i < n; ++i) a.unity[i * n + i] = 1;
  // E_ij * E_jl = s_ijl E_il, all other products of matrix units vanish.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const Int s = normalize(sys.at(i, j, l), sys.ring);
        a.tab(i * n + j, j * n + l, i * n + l) =
            static_cast<uint8_t>(static_cast<long long>(s));
      }
  return a;
}

FpMat rref(int p, FpMat rows) {
  FpMat out;
  for (FpVec& v : rows) {
    for (const FpVec& r : out) {
      int c = -1;
      for (size_t t = 0; t < r.size(); ++t) {
        if (r[t] != 0) {
          c = static_cast<int>(t);
          break;
        }
      }
      if (c >= 0 && v[c] != 0) {
        const int f = v[c];  // rows in out are pivot-normalized
        for (size_t t = 0; t < v.size(); ++t) {
          v[t] = static_cast<uint8_t>(subm(v[t], mulm(f, r[t], p), p));
        }
      }
    }
    int c = -1;
    for (size_t t = 0; t < v.size(); ++t) {
      if (v[t] != 0) {
        c = static_cast<int>(t);
        break;
      }
    }
    if (c < 0) continue;
    const int iv = inv_mod(v[c], p);
    for (size_t t = 0; t < v.size(); ++t) v[t] = static_cast<uint8_t>(mulm(v[t], iv, p));
    // back-eliminate into existing rows
    for (FpVec& r : out) {
      if (r[c] != 0) {
        const int f = r[c];
        for (size_t t = 0; t < r.size(); ++t) {
          r[t] = static_cast<uint8_t>(subm(r[t], mulm(f, v[t], p), p));
        }
      }
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const FpVec& x, const FpVec& y) {
    auto piv = [](const FpVec& v) {
      for (size_t t = 0; t < v.size(); ++t)
        if (v[t]) return t;
      return v.size();
    };
    return piv(x) < piv(y);
  });
  return out;
}

int rank_of(int p, FpMat rows) { return static_cast<int>(rref(p, std::move(rows)).size()); }

FpVec reduce_against(int p, const FpMat& rrefRows, FpVec v) {
  for (const FpVec& r : rrefRows) {
    int c = -1;
    for (size_t t = 0; t < r.size(); ++t) {
      if (r[t] != 0) {
        c = static_cast<int>(t);
        break;
      }
    }
    if (c >= 0 && v[c] != 0) {
      const int f = v[c];
      for (size_t t = 0; t < v.size(); ++t) {
        v[t] = static_cast<uint8_t>(subm(v[t], mulm(f, r[t], p), p));
      }
    }
  }
  return v;
}

bool in_span(int p, const FpMat& rrefRows, const FpVec& v) {
  FpVec r = reduce_against(p, rrefRows, v);
  return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

static FpVec basis_mul_left(const FiniteAlgebra& a, int i, const FpVec& v) {
  FpVec z(a.dim, 0);
  for (int b = 0; b < a.dim; ++b) {
    if (v[b] == 0) continue;
    for (int e = 0; e < a.dim; ++e) {
      z[e] = static_cast<uint8_t>(addm(z[e], mulm(v[b], a.tab(i, b, e), a.p), a.p));
    }
  }
  return z;
}

static FpVec basis_mul_right(const FiniteAlgebra& a, const FpVec& v, int i) {
  FpVec z(a.dim, 0);
  for (int b = 0; b < a.dim; ++b) {
    if (v[b] == 0) continue;
    for (int e = 0; e < a.dim; ++e) {
      z[e] = static_cast<uint8_t>(addm(z[e], mulm(v[b], a.tab(b, i, e), a.p), a.p));
    }
  }
  return z;
}

bool is_two_sided_ideal(const FiniteAlgebra& a, const FpMat& basis) {
  const FpMat r = rref(a.p, basis);
  for (const FpVec& v : r) {
    for (int i = 0; i < a.dim; ++i) {
      if (!in_span(a.p, r, basis_mul_left(a, i, v))) return false;
      if (!in_span(a.p, r, basis_mul_right(a, v, i))) return false;
    }
  }
  return true;
}

Ideal make_ideal(const FiniteAlgebra& a, FpMat spanning) {
  FpMat r = rref(a.p, std::move(spanning));
  if (!is_two_sided_ideal(a, r)) {
    throw std::invalid_argument("span is not a two-sided ideal");
  }
  return Ideal{std::move(r)};
}

std::optional<int> nilpotency_index(const FiniteAlgebra& a, const Ideal& ideal) {
  if (ideal.basis.empty()) return 1;
  FpMat cur = ideal.basis;
  for (int k = 2; k <= a.dim + 1; ++k) {
    FpMat next;
    for (const FpVec& u : cur)
      for (const FpVec& v : ideal.basis) next.push_back(alg_mul(a, u, v));
    next = rref(a.p, std::move(next));
    if (next.empty()) return k;
    cur = std::move(next);
  }
  return std::nullopt;
}

Ideal radical(const FiniteAlgebra& a, uint64_t enum_guard) {
  const auto total = pow_checked(a.p, a.dim, enum_guard);
  if (!total) {
    throw std::runtime_error("radical enumeration guard exceeded: p^dim > " +
                             std::to_string(enum_guard));
  }
  std::vector<int8_t> qr_memo(*total, -1);
  auto quasi_ok = [&](const FpVec& y) {
    const uint64_t yi = encode_elem(y, a.p);
    if (qr_memo[yi] >= 0) return qr_memo[yi] == 1;
    FpVec z(a.dim);
    for (int i = 0; i < a.dim; ++i) z[i] = static_cast<uint8_t>(subm(a.unity[i], y[i], a.p));
    const bool ok = rank_of(a.p, left_matrix(a, z)) == a.dim;
    qr_memo[yi] = ok ? 1 : 0;
    return ok;
  };

  FpMat confirmed;
  for (uint64_t xi = 1; xi < *total; ++xi) {
    FpVec x = decode_elem(xi, a.p, a.dim);
    if (in_span(a.p, confirmed, x)) continue;
    if (!quasi_ok(x)) continue;  // a = 1 already witnesses x outside J
    FpMat rows;
    for (int i = 0; i < a.dim; ++i) rows.push_back(basis_mul_left(a, i, x));
    rows = rref(a.p, std::move(rows));
    const int r = static_cast<int>(rows.size());
    const uint64_t combos = *pow_checked(a.p, r, enum_guard);
    bool in_radical = true;
    FpVec y(a.dim);
    for (uint64_t c = 1; c < combos && in_radical; ++c) {
      uint64_t cc = c;
      std::fill(y.begin(), y.end(), 0);
      for (int t = 0; t < r; ++t) {
        const int coef = static_cast<int>(cc % a.p);
        cc /= a.p;
        if (coef == 0) continue;
        for (int e = 0; e < a.dim; ++e) {
          y[e] = static_cast<uint8_t>(addm(y[e], mulm(coef, rows[t][e], a.p), a.p));
        }
      }
      if (!quasi_ok(y)) in_radical = false;
    }
    if (in_radical) {
      // every element of the left ideal Ax is quasi-regular, so Ax is inside J
      FpMat grown = confirmed;
      for (FpVec& rv : rows) grown.push_back(std::move(rv));
      confirmed = rref(a.p, std::move(grown));
    }
  }
  return Ideal{std::move(confirmed)};
}

FiniteAlgebra quotient(const FiniteAlgebra& a, const Ideal& ideal) {
  if (!is_two_sided_ideal(a, ideal.basis)) {
    throw std::invalid_argument("quotient requires a two-sided ideal");
  }
  std::vector<bool> is_pivot(a.dim, false);
  for (const FpVec& r : ideal.basis) {
    for (int t = 0; t < a.dim; ++t) {
      if (r[t] != 0) {
        is_pivot[t] = true;
        break;
      }
    }
  }
  std::vector<int> comp;
  for (int t = 0; t < a.dim; ++t) {
    if (!is_pivot[t]) comp.push_back(t);
  }
  const int qd = static_cast<int>(comp.size());
  FiniteAlgebra q;
  q.p = a.p;
  q.dim = qd;
  q.table.assign(static_cast<size_t>(qd) * qd * qd, 0);
  q.unity.assign(qd, 0);
  FpVec red = reduce_against(a.p, ideal.basis, a.unity);
  for (int e = 0; e < qd; ++e) q.unity[e] = red[comp[e]];
  for (int x = 0; x < qd; ++x) {
    for (int y = 0; y < qd; ++y) {
      FpVec prod(a.dim);
      for (int e = 0; e < a.dim; ++e) prod[e] = a.tab(comp[x], comp[y], e);
      prod = reduce_against(a.p, ideal.basis, std::move(prod));
      for (int e = 0; e < qd; ++e) q.tab(x, y, e) = prod[comp[e]];
    }
  }
  return q;
}

bool is_commutative(const FiniteAlgebra& a) {
  for (int x = 0; x < a.dim; ++x)
    for (int y = x + 1; y < a.dim; ++y)
      for (int e = 0; e < a.dim; ++e) {
        if (a.tab(x, y, e) != a.tab(y, x, e)) return false;
      }
  return true;
}

int center_dim(const FiniteAlgebra& a) {
  FpMat rows;
  for (int i = 0; i < a.dim; ++i) {
    for (int e = 0; e < a.dim; ++e) {
      FpVec row(a.dim);
      bool nz = false;
      for (int j = 0; j < a.dim; ++j) {
        row[j] = static_cast<uint8_t>(subm(a.tab(i, j, e), a.tab(j, i, e), a.p));
        nz = nz || row[j] != 0;
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  return a.dim - rank_of(a.p, std::move(rows));
}

uint64_t count_idempotents(const FiniteAlgebra& a, uint64_t enum_guard) {
  const auto total = pow_checked(a.p, a.dim, enum_guard);
  if (!total) {
    throw std::runtime_error("idempotent enumeration guard exceeded");
  }
  uint64_t count = 0;
  for (uint64_t xi = 0; xi < *total; ++xi) {
    FpVec x = decode_elem(xi, a.p, a.dim);
    if (alg_mul(a, x, x) == x) ++count;
  }
  return count;
}

bool verify_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FpMat& w) {
  if (a.p != b.p || a.dim != b.dim) return false;
  if (static_cast<int>(w.size()) != a.dim) return false;
  if (rank_of(a.p, w) != a.dim) return false;
  if (mat_apply(a.p, w, a.unity) != b.unity) return false;
  FpVec ea(a.dim, 0), eb(a.dim, 0);
  for (int x = 0; x < a.dim; ++x) {
    for (int y = 0; y < a.dim; ++y) {
      FpVec prod(a.dim);
      for (int e = 0; e < a.dim; ++e) prod[e] = a.tab(x, y, e);
      ea.assign(a.dim, 0);
      ea[x] = 1;
      eb.assign(a.dim, 0);
      eb[y] = 1;
      FpVec lhs = mat_apply(a.p, w, prod);
      FpVec rhs = alg_mul(b, mat_apply(a.p, w, ea), mat_apply(a.p, w, eb));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// Parallel echelon of mapped pairs (x in A -> y in B); the a-side is kept in
// echelon form with the same row operations mirrored on the b-side.
struct PairEchelon {
  int p;
  std::vector<std::pair<FpVec, FpVec>> rows;  // sorted by a-side pivot

  static int pivot(const FpVec& v) {
    for (size_t t = 0; t < v.size(); ++t)
      if (v[t]) return static_cast<int>(t);
    return -1;
  }

  // 0 = already implied, 1 = added, -1 = contradiction.
  int insert(FpVec av, FpVec bv) {
    for (const auto& [ra, rb] : rows) {
      const int c = pivot(ra);
      if (c >= 0 && av[c] != 0) {
        const int f = mulm(av[c], inv_mod(ra[c], p), p);
        for (size_t t = 0; t < av.size(); ++t) {
          av[t] = static_cast<uint8_t>(subm(av[t], mulm(f, ra[t], p), p));
          bv[t] = static_cast<uint8_t>(subm(bv[t], mulm(f, rb[t], p), p));
        }
      }
    }
    if (pivot(av) < 0) {
      return pivot(bv) < 0 ? 0 : -1;
    }
    rows.emplace_back(std::move(av), std::move(bv));
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      return pivot(x.first) < pivot(y.first);
    });
    return 1;
  }

  // Close under products; false on contradiction.
  bool close(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    bool changed = true;
    while (changed) {
      changed = false;
      const size_t n = rows.size();
      for (size_t u = 0; u < n; ++u) {
        for (size_t v = 0; v < n; ++v) {
          FpVec pa = alg_mul(a, rows[u].first, rows[v].first);
          FpVec pb = alg_mul(b, rows[u].second, rows[v].second);
          const int res = insert(std::move(pa), std::move(pb));
          if (res == -1) return false;
          if (res == 1) changed = true;
        }
        if (rows.size() != n) break;  // restart with the grown basis
      }
      if (rows.size() != n) changed = true;
    }
    return true;
  }

  // Image of x under the linear map determined so far; nullopt if x is
  // outside the mapped span.
  std::optional<FpVec> image(FpVec x) const {
    FpVec img(x.size(), 0);
    for (const auto& [ra, rb] : rows) {
      const int c = pivot(ra);
      if (c >= 0 && x[c] != 0) {
        const int f = mulm(x[c], inv_mod(ra[c], p), p);
        for (size_t t = 0; t < x.size(); ++t) {
          x[t] = static_cast<uint8_t>(subm(x[t], mulm(f, ra[t], p), p));
          img[t] = static_cast<uint8_t>(addm(img[t], mulm(f, rb[t], p), p));
        }
      }
    }
    if (pivot(x) >= 0) return std::nullopt;
    return img;
  }
};

FpMat algebra_closure(const FiniteAlgebra& a, FpMat seed) {
  FpMat span = rref(a.p, std::move(seed));
  bool changed = true;
  while (changed) {
    changed = false;
    const size_t n = span.size();
    FpMat grown = span;
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) grown.push_back(alg_mul(a, span[u], span[v]));
    grown = rref(a.p, std::move(grown));
    if (grown.size() != n) changed = true;
    span = std::move(grown);
  }
  return span;
}

// Basis indices that generate A as a unital algebra, chosen greedily by
// largest closure growth.
std::vector<int> generating_indices(const FiniteAlgebra& a) {
  FpMat span = algebra_closure(a, {a.unity});
  std::vector<int> gens;
  while (static_cast<int>(span.size()) < a.dim) {
    int best = -1;
    size_t best_rank = 0;
    FpMat best_span;
    for (int i = 0; i < a.dim; ++i) {
      FpVec ei(a.dim, 0);
      ei[i] = 1;
      if (in_span(a.p, span, ei)) continue;
      FpMat seed = span;
      seed.push_back(std::move(ei));
      FpMat grown = algebra_closure(a, std::move(seed));
      if (grown.size() > best_rank) {
        best_rank = grown.size();
        best = i;
        best_span = std::move(grown);
      }
    }
    gens.push_back(best);
    span = std::move(best_span);
  }
  return gens;
}

// Conjugation-invariant signature of an element: ranks of (L_z - c I)^k.
std::vector<int> element_signature(const FiniteAlgebra& a, const FpVec& z) {
  const int depth = std::min(a.dim, 6);
  std::vector<int> sig;
  const FpMat l = left_matrix(a, z);
  for (int c = 0; c < a.p; ++c) {
    FpMat m = l;
    for (int i = 0; i < a.dim; ++i) m[i][i] = static_cast<uint8_t>(subm(m[i][i], c, a.p));
    FpMat pw = m;
    for (int k = 1; k <= depth; ++k) {
      sig.push_back(rank_of(a.p, pw));
      if (k < depth) pw = mat_mul(a.p, pw, m);
    }
  }
  return sig;
}

struct IsoSearch {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  uint64_t total;
  std::vector<int> gens;
  std::vector<std::vector<int>> gen_sigs;
  std::map<uint64_t, std::vector<int>> sig_cache_b;

  const std::vector<int>& sig_b(uint64_t idx) {
    auto it = sig_cache_b.find(idx);
    if (it != sig_cache_b.end()) return it->second;
    FpVec z = decode_elem(idx, b.p, b.dim);
    return sig_cache_b.emplace(idx, element_signature(b, z)).first->second;
  }

  bool dfs(size_t level, PairEchelon& state, FpMat& witness_out) {
    if (level == gens.size()) {
      if (static_cast<int>(state.rows.size()) != a.dim) return false;
      FpMat w(a.dim, FpVec(a.dim, 0));
      for (int j = 0; j < a.dim; ++j) {
        FpVec ej(a.dim, 0);
        ej[j] = 1;
        auto img = state.image(std::move(ej));
        if (!img) return false;
        for (int i = 0; i < a.dim; ++i) w[i][j] = (*img)[i];
      }
      if (!verify_isomorphism(a, b, w)) return false;
      witness_out = std::move(w);
      return true;
    }
    const int g = gens[level];
    FpVec eg(a.dim, 0);
    eg[g] = 1;
    for (uint64_t h = 0; h < total; ++h) {
      if (sig_b(h) != gen_sigs[level]) continue;
      PairEchelon next = state;
      if (next.insert(eg, decode_elem(h, b.p, b.dim)) == -1) continue;
      if (!next.close(a, b)) continue;
      if (dfs(level + 1, next, witness_out)) return true;
    }
    return false;
  }
};

}  // namespace

IsoOutcome isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      uint64_t search_guard, uint64_t enum_guard) {
  IsoOutcome out;
  if (a.p != b.p) {
    out.status = Tri::No;
    out.detail = "characteristics differ";
    return out;
  }
  if (a.dim != b.dim) {
    out.status = Tri::No;
    out.detail = "dimensions differ (" + std::to_string(a.dim) + " vs " +
                 std::to_string(b.dim) + ")";
    return out;
  }
  if (a.table == b.table && a.unity == b.unity) {
    out.status = Tri::Yes;
    out.witness.assign(a.dim, FpVec(a.dim, 0));
    for (int i = 0; i < a.dim; ++i) out.witness[i][i] = 1;
    out.detail = "identical tables";
    return out;
  }
  const bool ca = is_commutative(a), cb = is_commutative(b);
  if (ca != cb) {
    out.status = Tri::No;
    out.detail = "commutativity differs";
    return out;
  }
  const int za = center_dim(a), zb = center_dim(b);
  if (za != zb) {
    out.status = Tri::No;
    out.detail = "center dimensions differ (" + std::to_string(za) + " vs " +
                 std::to_string(zb) + ")";
    return out;
  }
  if (pow_checked(a.p, a.dim, enum_guard)) {
    const int ra = radical(a, enum_guard).dimension();
    const int rb = radical(b, enum_guard).dimension();
    if (ra != rb) {
      out.status = Tri::No;
      out.detail = "radical dimensions differ (" + std::to_string(ra) + " vs " +
                   std::to_string(rb) + ")";
      return out;
    }
    const uint64_t ia = count_idempotents(a, enum_guard);
    const uint64_t ib = count_idempotents(b, enum_guard);
    if (ia != ib) {
      out.status = Tri::No;
      out.detail = "idempotent counts differ (" + std::to_string(ia) + " vs " +
                   std::to_string(ib) + ")";
      return out;
    }
  }
  const auto total = pow_checked(a.p, a.dim, search_guard);
  if (!total) {
    out.status = Tri::Maybe;
    out.detail = "search guard exceeded and invariants agree";
    return out;
  }
  IsoSearch search{a, b, *total, generating_indices(a), {}, {}};
  for (int g : search.gens) {
    FpVec eg(a.dim, 0);
    eg[g] = 1;
    search.gen_sigs.push_back(element_signature(a, eg));
  }
  PairEchelon root{a.p, {}};
  root.insert(a.unity, b.unity);
  FpMat witness;
  if (search.dfs(0, root, witness)) {
    out.status = Tri::Yes;
    out.witness = std::move(witness);
    out.detail = "witness found by generator backtracking";
  } else {
    out.status = Tri::No;
    out.detail = "generator backtracking exhausted";
  }
  return out;
}

void to_json(nlohmann::json& j, const FiniteAlgebra& a) {
  nlohmann::json table = nlohmann::json::array();
  for (int x = 0; x < a.dim; ++x) {
    nlohmann::json plane = nlohmann::json::array();
    for (int y = 0; y < a.dim; ++y) {
      nlohmann::json row = nlohmann::json::array();
      for (int e = 0; e < a.dim; ++e) row.push_back(static_cast<int>(a.tab(x, y, e)));
      plane.push_back(std::move(row));
    }
    table.push_back(std::move(plane));
  }
  nlohmann::json unity = nlohmann::json::array();
  for (uint8_t v : a.unity) unity.push_back(static_cast<int>(v));
  j = nlohmann::json{
      {"p", a.p}, {"dim", a.dim}, {"unity", std::move(unity)}, {"table", std::move(table)}};
}

void from_json(const nlohmann::json& j, FiniteAlgebra& a) {
  a.p = j.at("p").get<int>();
  a.dim = j.at("dim").get<int>();
  if (a.p < 2 || a.dim < 1) throw std::invalid_argument("invalid algebra parameters");
  const auto& unity = j.at("unity");
  const auto& table = j.at("table");
  if (static_cast<int>(unity.size()) != a.dim || static_cast<int>(table.size()) != a.dim) {
    throw std::invalid_argument("algebra payload has wrong shape");
  }
  a.unity.resize(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    const long long v = unity.at(i).get<long long>();
    a.unity[i] = static_cast<uint8_t>(((v % a.p) + a.p) % a.p);
  }
  a.table.assign(static_cast<size_t>(a.dim) * a.dim * a.dim, 0);
  for (int x = 0; x < a.dim; ++x) {
    const auto& plane = table.at(x);
    if (static_cast<int>(plane.size()) != a.dim) {
      throw std::invalid_argument("algebra payload has wrong shape");
    }
    for (int y = 0; y < a.dim; ++y) {
      const auto& row = plane.at(y);
      if (static_cast<int>(row.size()) != a.dim) {
        throw std::invalid_argument("algebra payload has wrong shape");
      }
      for (int e = 0; e < a.dim; ++e) {
        const long long v = row.at(e).get<long long>();
        a.tab(x, y, e) = static_cast<uint8_t>(((v % a.p) + a.p) % a.p);
      }
    }
  }
}

void to_json(nlohmann::json& j, const Ideal& ideal) {
  nlohmann::json basis = nlohmann::json::array();
  for (const FpVec& v : ideal.basis) {
    nlohmann::json row = nlohmann::json::array();
    for (uint8_t x : v) row.push_back(static_cast<int>(x));
    basis.push_back(std::move(row));
  }
  j = nlohmann::json{{"dim", ideal.dimension()}, {"basis", std::move(basis)}};
}

}  // namespace fmr
