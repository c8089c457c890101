#pragma once

#include "fmr/pattern.hpp"

#include <optional>
#include <string>

namespace fmr {

// Base-ring hypotheses the conditional isomorphism rules depend on, each
// with a note naming the rule that produced it.
struct HypothesisReport {
  bool nm_condition = false;           // M(n,R) iso M(m,R) forces n = m
  bool quotient_indecomposable = false;  // R/P(R) has only trivial central idempotents
  std::optional<bool> s_in_prime_radical;  // present iff an s was supplied
  std::vector<std::string> notes;
};

HypothesisReport check_hypotheses(const RingSpec& ring,
                                  const std::optional<Int>& s = std::nullopt);

enum class IsoStatus { Isomorphic, NotIsomorphic, Unknown };

struct IsoVerdict {
  IsoStatus status = IsoStatus::Unknown;
  // Present iff Isomorphic: permute(sys1, witness) == sys2, so A -> tau A is
  // an explicit ring isomorphism.
  std::optional<Permutation> witness;
  std::string reason;
};

// True iff the block-size multisets of the canonical forms coincide.
// Patterns of different order are never same-canonical.
bool same_canonical(const PrincipalPattern& t1, const PrincipalPattern& t2);

// Decision for (01)-systems: equal canonical forms on K0-form inputs give
// Isomorphic with a verified permutation witness; different canonical forms
// give NotIsomorphic when the base-ring hypotheses hold; everything else is
// Unknown.
IsoVerdict decide_iso_01(const MultiplierSystem& sys1, const MultiplierSystem& sys2);

// Decision for (s1)-systems over a fixed central s with s^2 not in {1, s}.
IsoVerdict decide_iso_s1(const MultiplierSystem& sys1, const MultiplierSystem& sys2,
                         const Int& s);

// K1/P(K1) vs K2/P(K2) for the rings realized from two (01)-patterns.
IsoVerdict decide_quotient_iso(const PrincipalPattern& t1, const PrincipalPattern& t2,
                               const RingSpec& ring);

void to_json(nlohmann::json& j, const IsoVerdict& v);
void from_json(const nlohmann::json& j, IsoVerdict& v);
void to_json(nlohmann::json& j, const HypothesisReport& r);

}  // namespace fmr
