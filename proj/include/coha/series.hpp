#pragma once

#include "coha/path.hpp"
#include "coha/quiver.hpp"
#include "coha/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coha {

/// Laurent polynomial in 𝕃 with integer coefficients; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t exponent, const BigInt& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t exponent) const;
  /// Highest and lowest exponents; the polynomial must be non-zero.
  std::int64_t degree() const;
  std::int64_t low_degree() const;
  BigInt at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by 𝕃^k.
  LaurentPoly shifted(std::int64_t k) const;

 private:
  void add(std::int64_t exponent, const BigInt& c);
  Terms terms_;
};

/// Descending exponents: `L^12 + L^11 + 2*L^10 + L^9`; `0` when empty.
std::string to_string(const LaurentPoly& p);

/// 𝕃^{w·d−χ(d,d)} Σ_{λ∈𝒮(d)} 𝕃^{−|λ|}, from the partition enumeration.
LaurentPoly motivic_class(const FramedQuiver& fq, const DimVector& d);
/// The same sum taken over trees, Σ_S 𝕃^{d(S)}.
LaurentPoly motivic_class_from_trees(const FramedQuiver& fq, const DimVector& d, const PathOrder& order);

/// (cohomological degree 2n, #{λ : |λ| = n}), ascending, zero ranks omitted.
std::vector<std::pair<int, BigInt>> betti_numbers(const FramedQuiver& fq, const DimVector& d);

/// Σ over d-subsets T of {1..w} of 𝕃^{inv(T)}, by direct enumeration.
LaurentPoly gaussian_binomial(int w, int d);

}  // namespace coha
