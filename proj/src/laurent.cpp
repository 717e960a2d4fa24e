#include "hkit/laurent.hpp"

#include <stdexcept>

namespace hkit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Laurent arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Laurent arithmetic");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    std::int64_t v = binomial(k - n - 1, k);
    return (k % 2 == 0) ? v : -v;
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

LaurentPoly::LaurentPoly(int low, std::vector<std::int64_t> coefficients)
    : low_(low), coef_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t c) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::one_minus_t_pow(int k) {
  if (k < 0) throw std::invalid_argument("negative power of (1 - t)");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c[i] = (i % 2 ? -1 : 1) * binomial(k, i);
  return LaurentPoly(0, std::move(c));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coef_.size() && coef_[first] == 0) ++first;
  if (first == coef_.size()) {
    coef_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coef_.size();
  while (coef_[last - 1] == 0) --last;
  coef_ = std::vector<std::int64_t>(coef_.begin() + first, coef_.begin() + last);
  low_ += static_cast<int>(first);
}

std::int64_t LaurentPoly::operator[](int e) const {
  if (coef_.empty() || e < low_ || e > high()) return 0;
  return coef_[e - low_];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<std::int64_t> c(hi - lo + 1);
  for (int e = lo; e <= hi; ++e) c[e - lo] = checked_add((*this)[e], o[e]);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.coef_) v = checked_mul(v, -1);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(coef_.size() + o.coef_.size() - 1, 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coef_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coef_[i], o.coef_[j]));
  }
  return LaurentPoly(low_ + o.low_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int by) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.low_ += by;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  return LaurentPoly(-high(), std::vector<std::int64_t>(coef_.rbegin(), coef_.rend()));
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (auto v : coef_) s = checked_add(s, v);
  return s;
}

LaurentPoly LaurentPoly::divide_one_minus_t() const {
  if (is_zero()) return {};
  if (at_one() != 0) throw std::domain_error("polynomial is not divisible by (1 - t)");
  // p = (1 - t) q  =>  q_k = sum_{j <= k} p_j
  std::vector<std::int64_t> q(coef_.size() - 1);
  std::int64_t run = 0;
  for (std::size_t k = 0; k + 1 < coef_.size(); ++k) {
    run = checked_add(run, coef_[k]);
    q[k] = run;
  }
  return LaurentPoly(low_, std::move(q));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    std::int64_t c = coef_[k];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(k);
    std::int64_t a = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
    if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out;
}

}  // namespace hkit
