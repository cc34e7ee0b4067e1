#include "dtqft/scalar.hpp"

#include <charconv>
#include <ostream>

namespace dtqft {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Residues are below p < 2^32, so the product fits in 64 bits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a % p) * (b % p) % p;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^32, got " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("bad prime in field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::from_int(Field field, long value) {
  if (field.is_rational()) return Scalar(value);
  Scalar s;
  s.modulus_ = field.modulus();
  s.residue_ = reduce(mpz_class(value), s.modulus_);
  return s;
}

Scalar Scalar::from_rational(Field field, const mpq_class& value) {
  if (field.is_rational()) return Scalar(value);
  Scalar num;
  num.modulus_ = field.modulus();
  num.residue_ = reduce(value.get_num(), num.modulus_);
  Scalar den;
  den.modulus_ = field.modulus();
  den.residue_ = reduce(value.get_den(), den.modulus_);
  if (den.is_zero()) {
    throw std::domain_error("denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  return num / den;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational literal '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
  return from_rational(field, mpq_class(n, d));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (modulus_ == 0) return Scalar(mpq_class(1) / q_);
  Scalar s = *this;
  s.residue_ = powmod(residue_, modulus_ - 2, modulus_);
  return s;
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw FieldMismatch("rational() on a prime-field scalar");
  return q_;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) {
    throw FieldMismatch("scalar field mismatch: " + field().to_string() + " vs " + other.field().to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ += other.q_;
  } else {
    residue_ = (residue_ + other.residue_) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ -= other.q_;
  } else {
    residue_ = (residue_ + modulus_ - other.residue_) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ *= other.q_;
  } else {
    residue_ = mulmod(residue_, other.residue_, modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0) {
    s.q_ = -q_;
  } else {
    s.residue_ = (modulus_ - residue_) % modulus_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dtqft
