#include "hkit/polynomial.hpp"

#include <algorithm>

namespace hkit {

namespace {

// Merge of two sorted term lists: a + sign * b.
std::vector<PolyTerm> merge(const Field& field, MonomialOrder order,
                            const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                            bool subtract) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].mono, b[j].mono, order);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      Scalar s = subtract ? field.sub(a[i].coef, b[j].coef) : field.add(a[i].coef, b[j].coef);
      if (!Field::is_zero(s)) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<PolyTerm> terms) : ring_(std::move(ring)) {
  const auto order = ring_->order;
  for (auto& t : terms) {
    if (t.mono.nvars() != ring_->nvars()) throw ContextMismatch("monomial has wrong variable count");
    t.coef = ring_->field.from_rational(t.coef);
  }
  std::stable_sort(terms.begin(), terms.end(), [order](const PolyTerm& a, const PolyTerm& b) {
    return compare(a.mono, b.mono, order) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = ring_->field.add(terms_.back().coef, t.coef);
      if (Field::is_zero(terms_.back().coef)) terms_.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(Ring ring, long c) {
  auto n = ring->nvars();
  return Polynomial(ring, {{Monomial(n), Scalar(c)}});
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Scalar c) {
  return Polynomial(std::move(ring), {{std::move(m), std::move(c)}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  auto n = ring->nvars();
  if (index >= n) throw std::out_of_range("variable index");
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {true, std::nullopt};
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return {false, std::nullopt};
  return {true, d};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(ring_->field, ring_->order, terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(ring_->field, ring_->order, terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field.from_int(-1)); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field.mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field.mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  for (const auto& t : o.terms_) r = r + times(t.mono, t.coef);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  const bool prime = ring_->field.is_prime_field();
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = !prime && sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = hkit::to_string(t.mono, *ring_);
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace hkit
