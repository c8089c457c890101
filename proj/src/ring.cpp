#include "fmr/ring.hpp"

#include <boost/multiprecision/integer.hpp>

namespace fmr {

std::string RingSpec::describe() const {
  if (kind == RingKind::Integers) return "Z";
  return "Z/" + modulus.str();
}

Int normalize(const Int& x, const RingSpec& spec) {
  if (spec.kind == RingKind::Integers) return x;
  Int r = x % spec.modulus;
  if (r < 0) r += spec.modulus;
  return r;
}

Int ring_add(const Int& x, const Int& y, const RingSpec& spec) {
  return normalize(x + y, spec);
}

Int ring_mul(const Int& x, const Int& y, const RingSpec& spec) {
  return normalize(x * y, spec);
}

Int ring_neg(const Int& x, const RingSpec& spec) {
  return normalize(-x, spec);
}

Int ring_pow(const Int& x, unsigned long e, const RingSpec& spec) {
  Int acc = normalize(1, spec);
  Int base = normalize(x, spec);
  while (e > 0) {
    if (e & 1) acc = ring_mul(acc, base, spec);
    base = ring_mul(base, base, spec);
    e >>= 1;
  }
  return acc;
}

bool is_unit(const Int& x, const RingSpec& spec) {
  if (spec.kind == RingKind::Integers) return x == 1 || x == -1;
  return boost::multiprecision::gcd(normalize(x, spec), spec.modulus) == 1;
}

void to_json(nlohmann::json& j, const RingSpec& spec) {
  if (spec.kind == RingKind::Integers) {
    j = nlohmann::json{{"type", "int"}};
  } else {
    j = nlohmann::json{{"type", "mod"}, {"m", int_to_json(spec.modulus)}};
  }
}

void from_json(const nlohmann::json& j, RingSpec& spec) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "int") {
    spec = RingSpec::integers();
  } else if (type == "mod") {
    spec = RingSpec::mod(int_from_json(j.at("m")));
  } else {
    throw std::invalid_argument("unknown ring type: " + type);
  }
}

nlohmann::json int_to_json(const Int& x) {
  if (x < std::numeric_limits<long long>::min() ||
      x > std::numeric_limits<long long>::max()) {
    throw std::out_of_range("integer too large for JSON serialization: " + x.str());
  }
  return nlohmann::json(static_cast<long long>(x));
}

Int int_from_json(const nlohmann::json& j) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument("expected an integer, got: " + j.dump());
  }
  return Int(j.get<long long>());
}

}  // namespace fmr
