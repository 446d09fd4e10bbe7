#include "schurpol/field.hpp"

#include <charconv>
#include <stdexcept>

namespace schurpol {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("prime field characteristic must be below 2^31");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = FieldKind::prime_field;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::rationals) return "q";
  return "fp:" + std::to_string(p_);
}

Rationals::value_type Rationals::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
  return value_type(1) / a;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw std::invalid_argument("invalid prime field characteristic " + std::to_string(p));
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

}  // namespace schurpol
