#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkit/monomial.hpp"

namespace hkit {

struct PolyTerm {
  Monomial mono;
  Scalar coef;
};

/// Result of a homogeneity test. The zero polynomial is homogeneous with no
/// degree.
struct Homogeneity {
  bool homogeneous = true;
  std::optional<int> degree;
};

/// Sparse polynomial over a ring context. Terms are kept sorted in descending
/// order under the ring's monomial order and never carry zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(Ring ring, std::vector<PolyTerm> terms);

  static Polynomial constant(Ring ring, long c);
  static Polynomial monomial(Ring ring, Monomial m, Scalar c = 1);
  static Polynomial variable(Ring ring, std::size_t index);

  const Ring& ring() const { return ring_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const PolyTerm& lead() const { return terms_.front(); }

  Homogeneity homogeneity() const;
  bool is_homogeneous() const { return homogeneity().homogeneous; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<PolyTerm> terms_;
};

}  // namespace hkit
