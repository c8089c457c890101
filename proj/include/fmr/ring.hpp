#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace fmr {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, IntegersMod };

// Descriptor of an exact commutative base ring: Z or Z/m.
struct RingSpec {
  RingKind kind = RingKind::Integers;
  Int modulus = 0;  // present iff kind == IntegersMod, always >= 2

  static RingSpec integers() { return RingSpec{RingKind::Integers, 0}; }
  static RingSpec mod(Int m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return RingSpec{RingKind::IntegersMod, std::move(m)};
  }

  bool operator==(const RingSpec& o) const {
    return kind == o.kind && (kind == RingKind::Integers || modulus == o.modulus);
  }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  std::string describe() const;
};

// Canonical representative: arbitrary integer for Z, in [0, m) for Z/m.
Int normalize(const Int& x, const RingSpec& spec);

Int ring_add(const Int& x, const Int& y, const RingSpec& spec);
Int ring_mul(const Int& x, const Int& y, const RingSpec& spec);
Int ring_neg(const Int& x, const RingSpec& spec);
Int ring_pow(const Int& x, unsigned long e, const RingSpec& spec);

// |x| = 1 over Z; gcd(x, m) = 1 over Z/m.
bool is_unit(const Int& x, const RingSpec& spec);

// JSON: {"type":"int"} or {"type":"mod","m":6}. Elements are plain integers.
void to_json(nlohmann::json& j, const RingSpec& spec);
void from_json(const nlohmann::json& j, RingSpec& spec);

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

}  // namespace fmr
