#include "hkit/monomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hkit {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw std::out_of_range("monomial exponent index");
  if (e < 0 || e > 0xFFFF) throw std::invalid_argument("monomial exponent out of range");
  degree_ += e - exp_[i];
  exp_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    int e = a.exp_[i] + b.exp_[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (b.exp_[i] > a.exp_[i]) throw std::invalid_argument("monomial division: not divisible");
    r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial colon(const Monomial& a, const Monomial& b) { return a / gcd(a, b); }

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + nvars_);
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0) s.push_back(i);
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exp_[i]) * 1099511628211ull;
  return h;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Ring make_ring(Field field, std::vector<std::string> var_names, MonomialOrder order) {
  if (var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (var_names.size() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  std::set<std::string> seen(var_names.begin(), var_names.end());
  if (seen.size() != var_names.size()) throw std::invalid_argument("variable names must be distinct");
  return std::make_shared<const RingContext>(RingContext{field, std::move(var_names), order});
}

Ring make_ring(Field field, std::size_t nvars, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(field, std::move(names), order);
}

bool same_ring(const RingContext& a, const RingContext& b) {
  return a.field == b.field && a.var_names == b.var_names && a.order == b.order;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a == b) return;
  if (!a || !b || !same_ring(*a, *b)) throw ContextMismatch("operands live in different rings");
}

std::string to_string(const Monomial& m, const RingContext& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace hkit
