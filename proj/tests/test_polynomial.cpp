#include "coha/linalg.hpp"
#include "coha/polynomial.hpp"
#include "coha/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace coha;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937_64& rng, int vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Monomial m(static_cast<std::size_t>(vars));
    for (auto& k : m) k = e(rng);
    p += Polynomial::monomial(m, small_rational(rng));
  }
  return p;
}

/// Leibniz expansion over all permutations.
template <class Scalar>
Scalar leibniz(const DenseMatrix<Scalar>& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Scalar term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(static_cast<Eigen::Index>(i), perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = (x(0) + x(1)).pow(2);
  CHECK(p == x(0) * x(0) + Polynomial(2) * x(0) * x(1) + x(1) * x(1));
  CHECK(to_string(p) == "x0^2 + 2*x0*x1 + x1^2");
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(Polynomial(Rational(-1, 2)) * x(2) + Polynomial(3)) == "-1/2*x2 + 3");
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(1) == 2);
  CHECK((x(0) * x(1) * x(1)).order_in(1) == 2);
  CHECK(p.evaluate({Rational(1), Rational(2)}) == 9);
  CHECK(p.substitute(1, -x(0)).is_zero());
  CHECK(p.drop(0) == x(1) * x(1));
  CHECK((x(0) * x(1).pow(2)).permute({1, 0}) == x(1) * x(0).pow(2));
  CHECK((p - p).is_zero());
  CHECK(Polynomial(5).is_constant());
  CHECK_FALSE(x(3).is_constant());
  CHECK(x(3).variable_span() == 4);
}

TEST_CASE("exact division") {
  const Polynomial a = x(0) - x(1);
  const Polynomial b = x(0) * x(0) + x(2);
  CHECK((a * b).divide_exact(a) == b);
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS_AS((a * b + Polynomial(1)).divide_exact(a), std::domain_error);
  CHECK_THROWS_AS(a.divide_exact(Polynomial()), std::domain_error);
}

TEST_CASE("property: ring axioms and division on random polynomials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_poly(rng, 3, 4, 2);
    const auto q = random_poly(rng, 3, 3, 2);
    const auto r = random_poly(rng, 3, 3, 1);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    if (!q.is_zero()) CHECK((p * q).divide_exact(q) == p);
    std::vector<Rational> pt = {small_rational(rng), small_rational(rng), small_rational(rng)};
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK(p.substitute(1, r).evaluate(pt) == p.evaluate({pt[0], r.evaluate(pt), pt[2]}));
  }
}

TEST_CASE("row reduction") {
  RationalMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  auto copy = m;
  const auto pivots = rref(copy);
  CHECK(pivots == std::vector<Eigen::Index>{0, 1});
  CHECK(copy(0, 0) == 1);
  CHECK(copy(1, 1) == 1);
  CHECK(copy(2, 2) == 0);
  CHECK(rank(m) == 2);
  RationalVector v(3);
  v << 2, 4, 6;
  CHECK(in_column_span(m.transpose(), v));
  v << 0, 0, 1;
  CHECK_FALSE(in_column_span(m.transpose(), v));
  CHECK(in_column_span(RationalMatrix(3, 0), RationalVector::Zero(3)));
}

TEST_CASE("property: Bareiss agrees with the Leibniz expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (trial % 3 == 0 && (i + j) % 2) ? Rational(0) : small_rational(rng);
    if (trial % 5 == 0 && n > 1) m.row(n - 1) = m.row(0);  // singular
    CHECK(bareiss_determinant(m) == leibniz(m));
    // Rank oracle: full rank iff the determinant is non-zero.
    CHECK((rank(m) == n) == (leibniz(m) != 0));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + trial % 3;
    PolynomialMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (i > j && trial % 2) ? Polynomial() : random_poly(rng, 3, 2, 1);
    CHECK(bareiss_determinant(m) == leibniz(m));
  }
  CHECK(bareiss_determinant(RationalMatrix(0, 0)) == 1);
}
