#include "hkit/field.hpp"

namespace hkit {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("GF(" + std::to_string(p) + "): modulus is not prime");
  return Field(Kind::Prime, p);
}

void Field::reduce(Scalar& a) const {
  if (kind_ == Kind::Rational) return;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_num_mpz_t(), p_);
  a = mpq_class(r);
}

Scalar Field::from_int(long v) const {
  Scalar a(v);
  reduce(a);
  return a;
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == Kind::Rational) return v;
  mpz_class den;
  mpz_fdiv_r_ui(den.get_mpz_t(), v.get_den_mpz_t(), p_);
  if (den == 0)
    throw std::invalid_argument("denominator divisible by the characteristic " + std::to_string(p_));
  mpz_class num = v.get_num();
  mpz_class mod(p_), inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = num * inv_den;
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return mpq_class(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (kind_ == Kind::Prime && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (kind_ == Kind::Prime && sgn(r) < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rational) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return mpq_class(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Rational || sgn(a) == 0) return -a;
  return Scalar(p_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in " + name());
  if (kind_ == Kind::Rational) return 1 / a;
  mpz_class r, mod(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
  return mpq_class(r);
}

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  Scalar result = from_int(1), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Field::to_string(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
  return kind_ == Kind::Rational ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace hkit
