#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hkit/field.hpp"

namespace hkit {

inline constexpr std::size_t kMaxVariables = 32;

enum class MonomialOrder { DegRevLex, Lex };

/// Exponent vector of a standard graded monomial. All variables have weight 1.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// a : b, i.e. a / gcd(a, b).
  friend Monomial colon(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::vector<int> exponents() const;
  /// Indices of variables with nonzero exponent.
  std::vector<std::size_t> support() const;
  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  int degree_ = 0;
};

/// Negative, zero or positive as a is smaller, equal or larger than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Shared description of S = k[x_1..x_n] with a term order.
struct RingContext {
  Field field;
  std::vector<std::string> var_names;
  MonomialOrder order = MonomialOrder::DegRevLex;

  std::size_t nvars() const { return var_names.size(); }
};

using Ring = std::shared_ptr<const RingContext>;

/// Validates the context (n >= 1, distinct names, n <= kMaxVariables).
Ring make_ring(Field field, std::vector<std::string> var_names,
               MonomialOrder order = MonomialOrder::DegRevLex);

/// Variables named x1..xn.
Ring make_ring(Field field, std::size_t nvars,
               MonomialOrder order = MonomialOrder::DegRevLex);

bool same_ring(const RingContext& a, const RingContext& b);
void require_same_ring(const Ring& a, const Ring& b);

std::string to_string(const Monomial& m, const RingContext& ring);

}  // namespace hkit
