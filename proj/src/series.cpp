#include "coha/series.hpp"

#include "coha/cells.hpp"
#include "coha/partitions.hpp"

#include <stdexcept>

namespace coha {

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const BigInt& coefficient) {
  LaurentPoly p;
  p.add(exponent, coefficient);
  return p;
}

void LaurentPoly::add(std::int64_t exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("the zero polynomial has no degree");
  return terms_.rbegin()->first;
}

std::int64_t LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("the zero polynomial has no degree");
  return terms_.begin()->first;
}

BigInt LaurentPoly::at_one() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = e == 0 ? "" : e == 1 ? "L" : "L^" + std::to_string(e);
    if (power.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += to_string(mag) + "*" + power;
    }
  }
  return out;
}

LaurentPoly motivic_class(const FramedQuiver& fq, const DimVector& d) {
  const int top = hilb_dim(fq, d);
  LaurentPoly out;
  for (const auto& lambda : enumerate_partitions(fq, d)) out += LaurentPoly::monomial(top - lambda.size());
  return out;
}

LaurentPoly motivic_class_from_trees(const FramedQuiver& fq, const DimVector& d, const PathOrder& order) {
  LaurentPoly out;
  for (const auto& s : enumerate_trees(fq, d, order)) out += LaurentPoly::monomial(cell_dim(fq, s, order));
  return out;
}

std::vector<std::pair<int, BigInt>> betti_numbers(const FramedQuiver& fq, const DimVector& d) {
  std::map<int, BigInt> ranks;
  for (const auto& lambda : enumerate_partitions(fq, d)) ranks[2 * lambda.size()] += 1;
  return {ranks.begin(), ranks.end()};
}

LaurentPoly gaussian_binomial(int w, int d) {
  if (d < 0 || d > w) return {};
  LaurentPoly out;
  const int n = w;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != d) continue;
    int inversions = 0;
    for (int s = 0; s < n; ++s) {
      if (!(mask >> s & 1)) continue;
      for (int t = 0; t < s; ++t) {
        if (!(mask >> t & 1)) ++inversions;
      }
    }
    out += LaurentPoly::monomial(inversions);
  }
  return out;
}

}  // namespace coha
