#pragma once

#include "coha/rational.hpp"

#include <Eigen/Core>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace coha {

/// Exponent vector with trailing zeros trimmed, so monomials in different
/// numbers of variables compare consistently. std::vector's lexicographic
/// order on trimmed vectors is the lex monomial order with x_0 > x_1 > ...
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over ℚ with variables x_0, x_1, ...
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT: implicit by design
  Polynomial(const Rational& constant);                           // NOLINT
  static Polynomial variable(int index);
  static Polynomial monomial(Monomial exponents, Rational coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant() const;
  int total_degree() const;
  int degree_in(int var) const;
  /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
  int order_in(int var) const;
  /// One past the largest variable index that occurs.
  int variable_span() const;
  bool contains(int var) const { return degree_in(var) > 0; }
  /// Leading term under lex (largest monomial).
  const Terms::value_type& leading_term() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int exponent) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replaces x_var by `value`.
  Polynomial substitute(int var, const Polynomial& value) const;
  /// Sets x_var = 0.
  Polynomial drop(int var) const;
  /// Renames x_k to x_{perm[k]}; perm must cover variable_span() and be injective.
  Polynomial permute(const std::vector<int>& perm) const;

  /// Exact quotient under lex division; throws std::domain_error when the remainder is non-zero.
  Polynomial divide_exact(const Polynomial& divisor) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return a.divide_exact(b); }

void trim(Monomial& m);

/// Terms in descending lex order, e.g. `x0^2 - 1/2*x0*x1 + 3`; `0` for the zero polynomial.
std::string to_string(const Polynomial& p,
                      const std::function<std::string(int)>& name = {});

}  // namespace coha

namespace Eigen {

template <>
struct NumTraits<coha::Polynomial> : GenericNumTraits<coha::Polynomial> {
  using Real = coha::Polynomial;
  using NonInteger = coha::Polynomial;
  using Nested = coha::Polynomial;
  using Literal = coha::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 50,
    MulCost = 200
  };
};

}  // namespace Eigen
