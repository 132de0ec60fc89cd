#include "coha/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace coha {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(int index) {
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m.back() = 1;
  return monomial(std::move(m));
}

Polynomial Polynomial::monomial(Monomial exponents, Rational coefficient) {
  Polynomial p;
  trim(exponents);
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), std::move(coefficient));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant() const { return coefficient({}); }

int Polynomial::total_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (int e : m) deg += e;
    best = std::max(best, deg);
  }
  return best;
}

int Polynomial::degree_in(int var) const {
  int best = 0;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (v < m.size()) best = std::max(best, m[v]);
  }
  return best;
}

int Polynomial::order_in(int var) const {
  if (terms_.empty()) return 0;
  int best = -1;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    const int e = v < m.size() ? m[v] : 0;
    best = best < 0 ? e : std::min(best, e);
  }
  return best;
}

int Polynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_) span = std::max(span, m.size());
  return static_cast<int>(span);
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.assign(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  const auto v = static_cast<std::size_t>(var);
  // Group terms by their power of x_var so each power of `value` is formed once.
  std::map<int, Polynomial> by_power;
  for (const auto& [m, c] : terms_) {
    const int e = v < m.size() ? m[v] : 0;
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    trim(rest);
    by_power[e].add_term(rest, c);
  }
  Polynomial out;
  Polynomial power(1);
  int at = 0;
  for (const auto& [e, rest] : by_power) {
    while (at < e) {
      power *= value;
      ++at;
    }
    out += rest * power;
  }
  return out;
}

Polynomial Polynomial::drop(int var) const {
  const auto v = static_cast<std::size_t>(var);
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (v < m.size() && m[v] != 0) continue;
    out.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::permute(const std::vector<int>& perm) const {
  Polynomial out;
  Monomial target;
  const std::size_t width = perm.empty() ? 0 : static_cast<std::size_t>(*std::max_element(perm.begin(), perm.end())) + 1;
  for (const auto& [m, c] : terms_) {
    target.assign(width, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= perm.size()) throw std::invalid_argument("permutation too short");
      target[static_cast<std::size_t>(perm[i])] = m[i];
    }
    Monomial t = target;
    trim(t);
    out.terms_.emplace(std::move(t), c);
  }
  return out;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = divisor.leading_term();
  Polynomial rem = *this;
  Polynomial quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading_term();
    if (!divides(lead_m, m)) throw std::domain_error("polynomial division is not exact");
    Monomial q = m;
    for (std::size_t i = 0; i < lead_m.size(); ++i) q[i] -= lead_m[i];
    trim(q);
    const Polynomial step = monomial(std::move(q), c / lead_c);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

std::string to_string(const Polynomial& p, const std::function<std::string(int)>& name) {
  if (p.is_zero()) return "0";
  auto var_name = [&](int i) { return name ? name(i) : "x" + std::to_string(i); };
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<int>(i));
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace coha
