#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hkit {

/// Exact coefficient. Over QQ this is an arbitrary rational; over GF(p) it is
/// the canonical residue in [0, p) stored with denominator 1.
using Scalar = mpq_class;

/// Raised when objects from different ring contexts meet in one operation.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t p);

/// Coefficient field: the rationals or a prime field.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  /// 0 for QQ.
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long v) const;
  /// Maps a rational into the field; fails over GF(p) when p divides the
  /// denominator.
  Scalar from_rational(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, unsigned long e) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string to_string(const Scalar& a) const;
  /// "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  void reduce(Scalar& a) const;

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace hkit
