#include "triassoc/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace triassoc::lin {

namespace {

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t modulus) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1U) result = result * base % modulus;
    base = base * base % modulus;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31U)) {
    throw std::invalid_argument("prime modulus must lie in [2, 2^31): " + std::to_string(p));
  }
  mpz_class z{static_cast<unsigned long>(p)};
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::uint64_t p = 0;
    auto digits = text.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad prime field descriptor: " + std::string(text));
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field descriptor: " + std::string(text));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar{mpq_class{static_cast<long>(value)}};
  return Scalar::residue(value, modulus_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational()) return Scalar{value};
  const std::uint64_t den = reduce_mpz(value.get_den(), modulus_);
  if (den == 0) {
    throw std::domain_error("denominator " + value.get_den().get_str() +
                            " is not invertible mod " + std::to_string(modulus_));
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), modulus_);
  const std::uint64_t inv = pow_mod(den, modulus_ - 2, modulus_);
  return Scalar::residue(static_cast<std::int64_t>(num * inv % modulus_), modulus_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  for (char c : text) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("bad scalar literal: " + std::string(text));
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar literal: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return from_rational(q);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t modulus) {
  Scalar s;
  s.value_ = Residue{reduce_mod(value, modulus), modulus};
  return s;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational() called on a prime-field scalar");
}

std::uint64_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("residue_value() called on a rational scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldMismatch("scalars from different fields: " + field().to_string() + " vs " +
                        other.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* res = std::get_if<Residue>(&r.value_)) {
    res->value = (res->modulus - res->value) % res->modulus;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* a = std::get_if<Residue>(&value_)) {
    a->value = (a->value + std::get<Residue>(other.value_).value) % a->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto* a = std::get_if<Residue>(&value_)) {
    a->value = (a->value + a->modulus - std::get<Residue>(other.value_).value) % a->modulus;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* a = std::get_if<Residue>(&value_)) {
    a->value = a->value * std::get<Residue>(other.value_).value % a->modulus;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (auto* a = std::get_if<Residue>(&r.value_)) {
    a->value = pow_mod(a->value, a->modulus - 2, a->modulus);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(a.value_).value * std::get<Residue>(b.value_).value) %
               r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
  }
}

bool Scalar::operator==(const Scalar& other) const {
  require_same_field(other);
  if (const auto* a = std::get_if<Residue>(&value_)) {
    return a->value == std::get<Residue>(other.value_).value;
  }
  return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
}

std::string Scalar::to_string() const {
  if (const auto* a = std::get_if<Residue>(&value_)) return std::to_string(a->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace triassoc::lin
