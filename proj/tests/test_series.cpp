#include "coha/fixtures.hpp"
#include "coha/partitions.hpp"
#include "coha/series.hpp"

#include <doctest.h>

#include <algorithm>

using namespace coha;

namespace {

/// q-binomial from the recursion [w,d] = [w−1,d−1] + q^d [w−1,d], independent of subset enumeration.
LaurentPoly qbinom_oracle(int w, int d) {
  if (d < 0 || d > w) return {};
  if (d == 0 || d == w) return LaurentPoly::monomial(0);
  return qbinom_oracle(w - 1, d - 1) + qbinom_oracle(w - 1, d).shifted(d);
}

}  // namespace

TEST_CASE("laurent polynomials") {
  const auto a = LaurentPoly::monomial(2) + LaurentPoly::monomial(-1, 3);
  CHECK(to_string(a) == "L^2 + 3*L^-1");
  CHECK(a.degree() == 2);
  CHECK(a.low_degree() == -1);
  CHECK(a.at_one() == 4);
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly::monomial(0)) == "1");
  CHECK(to_string(LaurentPoly::monomial(1)) == "L");
  CHECK((a + LaurentPoly::monomial(2, -1)) == LaurentPoly::monomial(-1, 3));
  CHECK((a * a).coefficient(1) == 6);
  CHECK((LaurentPoly::monomial(1) + LaurentPoly::monomial(1, -1)).is_zero());
  CHECK(a.shifted(3).degree() == 5);
}

TEST_CASE("motivic classes") {
  CHECK(to_string(motivic_class(fixtures::loop_quiver(2, 1), DimVector{3})) == "L^12 + L^11 + 2*L^10 + L^9");
  CHECK(to_string(motivic_class(fixtures::vertex_only(4), DimVector{2})) == "L^4 + L^3 + 2*L^2 + L + 1");
  CHECK(motivic_class(fixtures::vertex_only(1), DimVector{2}).is_zero());
  CHECK(motivic_class(fixtures::loop_quiver(2, 1), DimVector{0}) == LaurentPoly::monomial(0));
}

TEST_CASE("betti numbers") {
  using Row = std::vector<std::pair<int, BigInt>>;
  CHECK(betti_numbers(fixtures::vertex_only(2), DimVector{1}) == Row{{0, 1}, {2, 1}});
  CHECK(betti_numbers(fixtures::loop_quiver(2, 1), DimVector{3}) == Row{{0, 1}, {2, 1}, {4, 2}, {6, 1}});
  CHECK(betti_numbers(fixtures::loop_quiver(2, 1), DimVector{0}) == Row{{0, 1}});
}

TEST_CASE("gaussian binomials") {
  CHECK(to_string(gaussian_binomial(2, 1)) == "L + 1");
  CHECK(to_string(gaussian_binomial(4, 2)) == "L^4 + L^3 + 2*L^2 + L + 1");
  CHECK(gaussian_binomial(5, 0) == LaurentPoly::monomial(0));
  CHECK(gaussian_binomial(2, 3).is_zero());
  for (int w = 0; w <= 8; ++w)
    for (int d = 0; d <= w; ++d) CHECK(gaussian_binomial(w, d) == qbinom_oracle(w, d));
}

TEST_CASE("property: grassmannians") {
  for (int w = 1; w <= 7; ++w)
    for (int d = 0; d <= w; ++d) {
      const auto fq = fixtures::vertex_only(w);
      CHECK(motivic_class(fq, DimVector{d}) == gaussian_binomial(w, d));
      CHECK(hilb_dim(fq, DimVector{d}) == d * (w - d));
    }
}

TEST_CASE("property: series invariants") {
  struct Case {
    FramedQuiver fq;
    DimVector d;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= 3; ++m)
    for (int w = 1; w <= 2; ++w)
      for (int d = 0; d <= 4; ++d) cases.push_back({fixtures::loop_quiver(m, w), DimVector{d}});
  for (int d0 = 0; d0 <= 3; ++d0)
    for (int d1 = 0; d1 <= 3; ++d1) cases.push_back({fixtures::a2(2, 1), DimVector{d0, d1}});
  for (const auto& [fq, d] : cases) {
    const auto partitions = enumerate_partitions(fq, d);
    const auto series = motivic_class(fq, d);
    CHECK(series.at_one() == static_cast<long>(partitions.size()));
    CHECK(series == motivic_class_from_trees(fq, d, PathOrder::shortlex()));
    CHECK(series == motivic_class_from_trees(fq, d, PathOrder::lex()));
    if (partitions.empty()) {
      CHECK(series.is_zero());
      continue;
    }
    int largest = 0;
    for (const auto& l : partitions) largest = std::max(largest, l.size());
    CHECK(series.degree() == hilb_dim(fq, d));
    CHECK(series.low_degree() == hilb_dim(fq, d) - largest);
    BigInt total = 0;
    for (const auto& [degree, rank] : betti_numbers(fq, d)) {
      CHECK(degree % 2 == 0);
      CHECK(rank == series.coefficient(hilb_dim(fq, d) - degree / 2));
      total += rank;
    }
    CHECK(total == series.at_one());
  }
}
