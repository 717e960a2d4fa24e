#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hkit {

/// Integer Laurent polynomial  sum_k c_k t^k  with finitely many terms.
/// Arithmetic is overflow-checked (std::overflow_error).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// coefficients[k] multiplies t^(low + k).
  LaurentPoly(int low, std::vector<std::int64_t> coefficients);
  static LaurentPoly monomial(int exponent, std::int64_t c = 1);
  static LaurentPoly one() { return monomial(0, 1); }
  /// (1 - t)^k
  static LaurentPoly one_minus_t_pow(int k);

  bool is_zero() const { return coef_.empty(); }
  /// Lowest/highest exponent with a nonzero coefficient (undefined for zero).
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  std::int64_t operator[](int exponent) const;
  const std::vector<std::int64_t>& coefficients() const { return coef_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(int by) const;
  /// p(1/t)
  LaurentPoly inverted() const;
  std::int64_t at_one() const;
  /// Exact division by (1 - t); requires p(1) = 0.
  LaurentPoly divide_one_minus_t() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coef_ == b.coef_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coef_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Binomial coefficient with the generalized convention C(n, k) for n < 0 via
/// (-1)^k C(k - n - 1, k); zero for k < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace hkit
