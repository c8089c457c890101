#include "fmr/iso_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace fmr {

namespace {

bool is_prime_power(const Int& m) {
  Int d = 2;
  Int x = m;
  while (d * d <= x) {
    if (x % d == 0) {
      while (x % d == 0) x /= d;
      return x == 1;
    }
    ++d;
  }
  return true;  // m itself prime
}

bool nilpotent_mod(const Int& s, const Int& m) {
  Int x = s % m;
  if (x < 0) x += m;
  // nilpotency index is bounded by the largest prime-power exponent in m
  unsigned bound = static_cast<unsigned>(boost::multiprecision::msb(m)) + 2;
  for (unsigned k = 0; k < bound; ++k) {
    if (x == 0) return true;
    x = (x * s) % m;
    if (x < 0) x += m;
  }
  return x == 0;
}

std::string sizes_str(const std::vector<int>& sizes) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  os << "]";
  return os.str();
}

// tau with permute(sys1, tau) == sys2, if a permutation witness exists.
// The canonical-form composition is tried first, then all permutations.
std::optional<Permutation> permutation_witness(const MultiplierSystem& sys1,
                                               const MultiplierSystem& sys2,
                                               const CanonicalForm& cf1,
                                               const CanonicalForm& cf2) {
  Permutation tau = compose(cf1.sigma, cf2.sigma.inverse());
  if (permute(sys1, tau) == sys2) return tau;
  for (const Permutation& t : all_permutations(sys1.n)) {
    if (permute(sys1, t) == sys2) return t;
  }
  return std::nullopt;
}

void require_comparable(const MultiplierSystem& sys1, const MultiplierSystem& sys2) {
  if (sys1.n != sys2.n) throw std::invalid_argument("system orders differ");
  if (sys1.ring != sys2.ring) throw std::invalid_argument("system rings differ");
  if (!validate_identities(sys1).empty() || !validate_identities(sys2).empty()) {
    throw std::invalid_argument("inputs must be valid multiplier systems");
  }
}

}  // namespace

HypothesisReport check_hypotheses(const RingSpec& ring, const std::optional<Int>& s) {
  HypothesisReport r;
  r.nm_condition = true;  // both built-in rings are commutative
  r.notes.push_back("nm-condition: " + ring.describe() + " is commutative");
  if (ring.kind == RingKind::Integers) {
    r.quotient_indecomposable = true;
    r.notes.push_back("indecomposable quotient: Z is a domain with zero prime radical");
    if (s) {
      r.s_in_prime_radical = (*s == 0);
      r.notes.push_back(*r.s_in_prime_radical
                            ? "s in P(R): s = 0 and P(Z) = 0"
                            : "s in P(R) fails: P(Z) = 0 but s != 0");
    }
  } else {
    r.quotient_indecomposable = is_prime_power(ring.modulus);
    r.notes.push_back(r.quotient_indecomposable
                          ? "indecomposable quotient: " + ring.modulus.str() +
                                " is a prime power"
                          : "indecomposable quotient fails: " + ring.modulus.str() +
                                " has several prime factors, so the semiprimitive "
                                "quotient splits");
    if (s) {
      r.s_in_prime_radical = nilpotent_mod(*s, ring.modulus);
      r.notes.push_back(*r.s_in_prime_radical
                            ? "s in P(R): " + s->str() + " is nilpotent mod " +
                                  ring.modulus.str()
                            : "s in P(R) fails: " + s->str() + " is not nilpotent mod " +
                                  ring.modulus.str());
    }
  }
  return r;
}

bool same_canonical(const PrincipalPattern& t1, const PrincipalPattern& t2) {
  if (t1.n != t2.n) return false;
  return canonical_form(t1).block_sizes == canonical_form(t2).block_sizes;
}

IsoVerdict decide_iso_01(const MultiplierSystem& sys1, const MultiplierSystem& sys2) {
  require_comparable(sys1, sys2);
  const SystemClass c1 = classify(sys1);
  const SystemClass c2 = classify(sys2);
  if (!c1.is01 || !c2.is01) {
    throw std::invalid_argument("decide_iso_01 requires (01)-systems");
  }
  const PrincipalPattern t1 = principal_pattern(sys1);
  const PrincipalPattern t2 = principal_pattern(sys2);
  const CanonicalForm cf1 = canonical_form(t1);
  const CanonicalForm cf2 = canonical_form(t2);
  const bool same = cf1.block_sizes == cf2.block_sizes;

  IsoVerdict v;
  if (same && c1.isK0 && c2.isK0) {
    auto tau = permutation_witness(sys1, sys2, cf1, cf2);
    if (tau) {
      v.status = IsoStatus::Isomorphic;
      v.witness = *tau;
      v.reason = "K0-form systems with coinciding canonical forms " +
                 sizes_str(cf1.block_sizes) +
                 "; witness permutation carries one system onto the other";
      return v;
    }
    v.status = IsoStatus::Unknown;
    v.reason = "canonical forms coincide but no permutation witness was found";
    return v;
  }
  if (!same) {
    const HypothesisReport hyp = check_hypotheses(sys1.ring);
    if (hyp.nm_condition && hyp.quotient_indecomposable) {
      v.status = IsoStatus::NotIsomorphic;
      v.reason = "canonical forms " + sizes_str(cf1.block_sizes) + " vs " +
                 sizes_str(cf2.block_sizes) + " differ; hypotheses verified for " +
                 sys1.ring.describe();
      return v;
    }
    v.status = IsoStatus::Unknown;
    v.reason = "canonical forms differ but base-ring hypotheses are unverified for " +
               sys1.ring.describe();
    return v;
  }
  v.status = IsoStatus::Unknown;
  v.reason =
      "canonical forms coincide but at least one system is not of K0 form; "
      "this case is undecided";
  return v;
}

IsoVerdict decide_iso_s1(const MultiplierSystem& sys1, const MultiplierSystem& sys2,
                         const Int& s) {
  require_comparable(sys1, sys2);
  require_valid_s(s, sys1.ring);
  const Int sc = normalize(s, sys1.ring);
  const SystemClass c1 = classify(sys1, sc);
  const SystemClass c2 = classify(sys2, sc);
  if (!c1.isS1 || !c2.isS1) {
    throw std::invalid_argument("decide_iso_s1 requires (s1)-systems for the given s");
  }
  const PrincipalPattern t1 = principal_pattern(sys1, sc);
  const PrincipalPattern t2 = principal_pattern(sys2, sc);
  if (!is_valid_pattern(t1) || !is_valid_pattern(t2)) {
    throw std::invalid_argument("principal matrices violate the pattern conditions");
  }
  const CanonicalForm cf1 = canonical_form(t1);
  const CanonicalForm cf2 = canonical_form(t2);
  const bool same = cf1.block_sizes == cf2.block_sizes;

  IsoVerdict v;
  if (same) {
    auto tau = permutation_witness(sys1, sys2, cf1, cf2);
    if (tau) {
      v.status = IsoStatus::Isomorphic;
      v.witness = *tau;
      v.reason = "(s1)-systems with coinciding canonical forms " +
                 sizes_str(cf1.block_sizes) +
                 "; witness permutation carries one system onto the other";
      return v;
    }
    v.status = IsoStatus::Unknown;
    v.reason = "canonical forms coincide but no permutation witness was found";
    return v;
  }
  const HypothesisReport hyp = check_hypotheses(sys1.ring, sc);
  if (hyp.nm_condition && hyp.quotient_indecomposable && hyp.s_in_prime_radical &&
      *hyp.s_in_prime_radical) {
    v.status = IsoStatus::NotIsomorphic;
    v.reason = "canonical forms " + sizes_str(cf1.block_sizes) + " vs " +
               sizes_str(cf2.block_sizes) + " differ; hypotheses verified for " +
               sys1.ring.describe() + " with s = " + sc.str();
    return v;
  }
  v.status = IsoStatus::Unknown;
  v.reason = "canonical forms differ but base-ring hypotheses fail (s = " + sc.str() +
             " over " + sys1.ring.describe() + ")";
  return v;
}

IsoVerdict decide_quotient_iso(const PrincipalPattern& t1, const PrincipalPattern& t2,
                               const RingSpec& ring) {
  if (!is_valid_pattern(t1) || !is_valid_pattern(t2)) {
    throw std::invalid_argument("inputs must be valid principal patterns");
  }
  if (t1.is_s1() || t2.is_s1()) {
    throw std::invalid_argument("decide_quotient_iso requires (01)-patterns");
  }
  IsoVerdict v;
  const HypothesisReport hyp = check_hypotheses(ring);
  if (!(hyp.nm_condition && hyp.quotient_indecomposable)) {
    v.status = IsoStatus::Unknown;
    v.reason = "base-ring hypotheses fail for " + ring.describe();
    return v;
  }
  const auto b1 = canonical_form(t1).block_sizes;
  const auto b2 = t1.n == t2.n ? canonical_form(t2).block_sizes : std::vector<int>{};
  if (same_canonical(t1, t2)) {
    v.status = IsoStatus::Isomorphic;
    v.reason = "semiprimitive quotients share the block structure " + sizes_str(b1) +
               " over " + ring.describe();
  } else {
    v.status = IsoStatus::NotIsomorphic;
    v.reason = "canonical forms " + sizes_str(b1) + " vs " + sizes_str(b2) +
               " differ; hypotheses verified for " + ring.describe();
  }
  return v;
}

void to_json(nlohmann::json& j, const IsoVerdict& v) {
  const char* status = v.status == IsoStatus::Isomorphic     ? "Isomorphic"
                       : v.status == IsoStatus::NotIsomorphic ? "NotIsomorphic"
                                                              : "Unknown";
  j = nlohmann::json{{"status", status}, {"reason", v.reason}};
  if (v.witness) {
    j["witness"] = *v.witness;
  } else {
    j["witness"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, IsoVerdict& v) {
  const std::string status = j.at("status").get<std::string>();
  if (status == "Isomorphic") {
    v.status = IsoStatus::Isomorphic;
  } else if (status == "NotIsomorphic") {
    v.status = IsoStatus::NotIsomorphic;
  } else if (status == "Unknown") {
    v.status = IsoStatus::Unknown;
  } else {
    throw std::invalid_argument("unknown verdict status: " + status);
  }
  v.reason = j.at("reason").get<std::string>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    v.witness = j.at("witness").get<Permutation>();
  } else {
    v.witness.reset();
  }
}

void to_json(nlohmann::json& j, const HypothesisReport& r) {
  j = nlohmann::json{{"nm_condition", r.nm_condition},
                     {"quotient_indecomposable", r.quotient_indecomposable},
                     {"notes", r.notes}};
  if (r.s_in_prime_radical) {
    j["s_in_prime_radical"] = *r.s_in_prime_radical;
  }
}

}  // namespace fmr
