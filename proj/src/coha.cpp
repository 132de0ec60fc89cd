#include "coha/coha.hpp"

#include "coha/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coha {

namespace {

std::vector<int> offsets(const DimVector& d) {
  std::vector<int> out(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) out[i + 1] = out[i] + d[i];
  return out;
}

Polynomial x(int index) { return Polynomial::variable(index); }

}  // namespace

int variable_index(const DimVector& d, int vertex, int k) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= d.size() || k < 1 || k > d[static_cast<std::size_t>(vertex)]) {
    throw std::invalid_argument("variable x[" + std::to_string(vertex) + "," + std::to_string(k) + "] out of range");
  }
  return offsets(d)[static_cast<std::size_t>(vertex)] + k - 1;
}

bool is_block_symmetric(const DimVector& d, const Polynomial& p) {
  const auto off = offsets(d);
  const int n = d.total();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 2) continue;
    // A transposition and a full cycle generate the symmetric group of the block.
    std::vector<int> swap(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::vector<int> cycle = swap;
    std::swap(swap[static_cast<std::size_t>(off[i])], swap[static_cast<std::size_t>(off[i] + 1)]);
    for (int k = 0; k < d[i]; ++k) cycle[static_cast<std::size_t>(off[i] + k)] = off[i] + (k + 1) % d[i];
    if (p.permute(swap) != p || p.permute(cycle) != p) return false;
  }
  return true;
}

SymPoly::SymPoly(DimVector d, Polynomial p) : dim_(std::move(d)), poly_(std::move(p)) {
  if (poly_.variable_span() > dim_.total()) throw std::invalid_argument("polynomial uses variables outside the dimension vector");
  if (!is_block_symmetric(dim_, poly_)) throw std::invalid_argument("polynomial is not symmetric in each vertex block");
}

bool SymPoly::is_homogeneous() const {
  const int deg = degree();
  for (const auto& [m, c] : poly_.terms()) {
    if (std::accumulate(m.begin(), m.end(), 0) != deg) return false;
  }
  return true;
}

std::string to_string(const SymPoly& f) {
  const auto off = offsets(f.dim());
  return to_string(f.poly(), [&](int index) {
    std::size_t i = 0;
    while (off[i + 1] <= index) ++i;
    return "x[" + std::to_string(i) + "," + std::to_string(index - off[i] + 1) + "]";
  });
}

SymPoly shuffle_product(const FramedQuiver& fq, const SymPoly& f, const SymPoly& g) {
  const DimVector& d = f.dim();
  const DimVector& e = g.dim();
  if (static_cast<int>(d.size()) != fq.vertex_count() || static_cast<int>(e.size()) != fq.vertex_count()) {
    throw std::invalid_argument("shuffle product: dimension vectors do not match the quiver");
  }
  const DimVector n = d + e;
  const auto off = offsets(n);
  const auto off_d = offsets(d);
  const auto off_e = offsets(e);
  const std::size_t vertices = n.size();

  // x_{i,r} of f goes to position r of block i, x_{j,s} of g to position d_j + s.
  std::vector<int> place_f(static_cast<std::size_t>(d.total()));
  std::vector<int> place_g(static_cast<std::size_t>(e.total()));
  for (std::size_t i = 0; i < vertices; ++i) {
    for (int r = 0; r < d[i]; ++r) place_f[static_cast<std::size_t>(off_d[i] + r)] = off[i] + r;
    for (int s = 0; s < e[i]; ++s) place_g[static_cast<std::size_t>(off_e[i] + s)] = off[i] + d[i] + s;
  }
  Polynomial numerator = f.poly().permute(place_f) * g.poly().permute(place_g);

  std::vector<bool> loopless(vertices);
  for (std::size_t i = 0; i < vertices; ++i) loopless[i] = fq.base().arrow_count(static_cast<int>(i), static_cast<int>(i)) == 0;

  // Kernel factors with exponent −χ(e_i, e_j) = #{i→j} − δ_ij when it is non-negative.
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = 0; j < vertices; ++j) {
      const int exponent = fq.base().arrow_count(static_cast<int>(i), static_cast<int>(j)) - (i == j ? 1 : 0);
      if (exponent <= 0) continue;
      for (int r = 0; r < d[i]; ++r) {
        for (int s = 0; s < e[j]; ++s) {
          numerator *= (x(off[j] + d[j] + s) - x(off[i] + r)).pow(exponent);
        }
      }
    }
  }
  // Loopless vertices have exponent −1; clear the denominators with the
  // Vandermonde of each half-block, the full Vandermonde being divided out at the end.
  for (std::size_t i = 0; i < vertices; ++i) {
    if (!loopless[i]) continue;
    auto vandermonde = [&](int begin, int count) {
      for (int p = 0; p < count; ++p)
        for (int q = p + 1; q < count; ++q) numerator *= x(begin + q) - x(begin + p);
    };
    vandermonde(off[i], d[i]);
    vandermonde(off[i] + d[i], e[i]);
  }

  Polynomial total;
  std::vector<std::vector<int>> subset(vertices);
  std::vector<int> perm(static_cast<std::size_t>(n.total()));
  std::function<void(std::size_t, int)> visit = [&](std::size_t i, int sign) {
    if (i == vertices) {
      const Polynomial term = numerator.permute(perm);
      if (sign > 0) total += term;
      else total -= term;
      return;
    }
    const int ni = n[i];
    for (unsigned mask = 0; mask < (1u << ni); ++mask) {
      if (__builtin_popcount(mask) != d[i]) continue;
      int r = 0;
      int s = 0;
      int inversions = 0;
      for (int pos = 0; pos < ni; ++pos) {
        if (mask >> pos & 1) {
          perm[static_cast<std::size_t>(off[i] + r)] = off[i] + pos;
          inversions += pos - r;
          ++r;
        } else {
          perm[static_cast<std::size_t>(off[i] + d[i] + s)] = off[i] + pos;
          ++s;
        }
      }
      const bool flip = loopless[i] && (inversions % 2 == 1);
      visit(i + 1, flip ? -sign : sign);
    }
  };
  visit(0, 1);

  for (std::size_t i = 0; i < vertices; ++i) {
    if (!loopless[i]) continue;
    for (int p = 0; p < n[i]; ++p) {
      for (int q = p + 1; q < n[i]; ++q) {
        try {
          total = total.divide_exact(x(off[i] + q) - x(off[i] + p));
        } catch (const std::domain_error&) {
          throw std::logic_error("shuffle product: the antisymmetrized sum is not divisible by the Vandermonde");
        }
      }
    }
  }
  return SymPoly(n, std::move(total));
}

SymPoly cup_product(const SymPoly& f, const SymPoly& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("cup product needs equal dimension vectors");
  return SymPoly(f.dim(), f.poly() * g.poly());
}

SymPoly framing_idempotent(const FramedQuiver& fq, const DimVector& d) {
  Monomial m(static_cast<std::size_t>(d.total()), 0);
  const auto off = offsets(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int k = 0; k < d[i]; ++k) m[static_cast<std::size_t>(off[i] + k)] = fq.framing()[i];
  }
  return SymPoly(d, Polynomial::monomial(std::move(m)));
}

SymPoly elementary_symmetric(const DimVector& d, int vertex, int k) {
  const auto off = offsets(d);
  const int di = d[static_cast<std::size_t>(vertex)];
  if (k < 0 || k > di) return SymPoly(d, Polynomial());
  Polynomial sum;
  for (unsigned mask = 0; mask < (1u << di); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Monomial m(static_cast<std::size_t>(d.total()), 0);
    for (int r = 0; r < di; ++r) {
      if (mask >> r & 1) m[static_cast<std::size_t>(off[static_cast<std::size_t>(vertex)] + r)] = 1;
    }
    sum += Polynomial::monomial(std::move(m));
  }
  return SymPoly(d, std::move(sum));
}

SymPoly monomial_symmetric(const MultiPartition& mu) {
  const DimVector d = mu.shape();
  const auto off = offsets(d);
  Polynomial product(1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<int> exps = mu.block(i);
    std::sort(exps.begin(), exps.end());
    Polynomial block;
    do {
      Monomial m(static_cast<std::size_t>(d.total()), 0);
      for (int r = 0; r < d[i]; ++r) m[static_cast<std::size_t>(off[i] + r)] = exps[static_cast<std::size_t>(r)];
      block += Polynomial::monomial(std::move(m));
    } while (std::next_permutation(exps.begin(), exps.end()));
    product *= block;
  }
  return SymPoly(d, std::move(product));
}

std::vector<MultiPartition> symmetric_basis(const DimVector& d, int n) {
  std::vector<MultiPartition> out;
  if (n < 0) return out;
  std::vector<std::vector<int>> blocks(d.size());
  // Distribute n over the vertices; each block is weakly decreasing of length d_i.
  std::function<void(std::size_t, int)> per_vertex;
  std::function<void(std::size_t, std::size_t, int, int)> parts = [&](std::size_t i, std::size_t pos, int cap, int left) {
    if (pos == static_cast<std::size_t>(d[i])) {
      per_vertex(i + 1, left);
      return;
    }
    for (int x = std::min(cap, left); x >= 0; --x) {
      blocks[i][pos] = x;
      parts(i, pos + 1, x, left - x);
    }
  };
  per_vertex = [&](std::size_t i, int left) {
    if (i == d.size()) {
      if (left == 0) out.emplace_back(blocks);
      return;
    }
    blocks[i].assign(static_cast<std::size_t>(d[i]), 0);
    parts(i, 0, left, left);
  };
  per_vertex(0, n);
  return out;
}

RationalVector symmetric_coordinates(const SymPoly& f, const std::vector<MultiPartition>& basis) {
  RationalVector out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Monomial m;
    for (const auto& block : basis[b].blocks()) m.insert(m.end(), block.begin(), block.end());
    trim(m);
    out(static_cast<Eigen::Index>(b)) = f.poly().coefficient(m);
  }
  return out;
}

bool GradedSubspace::contains(const RationalVector& v) const {
  RationalMatrix stacked(rows.rows() + 1, static_cast<Eigen::Index>(basis.size()));
  if (rows.rows() > 0) stacked.topRows(rows.rows()) = rows;
  stacked.row(rows.rows()) = v.transpose();
  return coha::rank(stacked) == rows.rows();
}

namespace {

RationalMatrix echelon_rows(RationalMatrix m) {
  const auto r = static_cast<Eigen::Index>(rref(m).size());
  return m.topRows(r);
}

}  // namespace

GradedSubspace kernel_graded_piece(const FramedQuiver& fq, const DimVector& d, int n) {
  GradedSubspace out;
  out.dim = d;
  out.degree = n;
  out.basis = symmetric_basis(d, n);
  std::vector<RationalVector> generators;
  for (const auto& sub : dim_vectors_below(d)) {
    if (sub.is_zero()) continue;
    const DimVector rest = d - sub;
    int shift = -euler_form(fq.base(), rest, sub);
    for (std::size_t i = 0; i < d.size(); ++i) shift += fq.framing()[i] * sub[i];
    const SymPoly idempotent = framing_idempotent(fq, sub);
    for (int p = 0; p + shift <= n; ++p) {
      const int q = n - shift - p;
      if (q < 0) continue;
      for (const auto& fb : symmetric_basis(rest, p)) {
        const SymPoly f = monomial_symmetric(fb);
        for (const auto& gb : symmetric_basis(sub, q)) {
          const SymPoly h = shuffle_product(fq, f, cup_product(idempotent, monomial_symmetric(gb)));
          generators.push_back(symmetric_coordinates(h, out.basis));
        }
      }
    }
  }
  RationalMatrix m(static_cast<Eigen::Index>(generators.size()), static_cast<Eigen::Index>(out.basis.size()));
  for (std::size_t r = 0; r < generators.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = generators[r].transpose();
  out.rows = echelon_rows(std::move(m));
  return out;
}

SymPoly tautological_monomial(const FramedQuiver& fq, const MultiPartition& lambda) {
  const DimVector d = lambda.shape();
  if (!satisfies_phi(fq, d, lambda)) throw DomainError("not in S(d): condition (Phi) fails");
  SymPoly out = SymPoly::one(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int k = 1; k <= d[i]; ++k) {
      const int next = k < d[i] ? lambda.part(i, k + 1) : 0;
      const int exponent = lambda.part(i, k) - next;
      if (exponent == 0) continue;
      out = SymPoly(d, out.poly() * elementary_symmetric(d, static_cast<int>(i), k).poly().pow(exponent));
    }
  }
  return out;
}

BasisReport verify_basis(const FramedQuiver& fq, const DimVector& d, int n) {
  BasisReport report;
  const GradedSubspace kernel = kernel_graded_piece(fq, d, n);
  report.h_dim = static_cast<int>(kernel.basis.size());
  report.kernel_dim = static_cast<int>(kernel.rank());
  report.quotient_dim = report.h_dim - report.kernel_dim;
  std::vector<MultiPartition> classes;
  for (auto& lambda : enumerate_partitions(fq, d)) {
    if (lambda.size() == n) classes.push_back(std::move(lambda));
  }
  report.partition_count = static_cast<int>(classes.size());
  RationalMatrix stacked(kernel.rank() + static_cast<Eigen::Index>(classes.size()), static_cast<Eigen::Index>(kernel.basis.size()));
  if (kernel.rank() > 0) stacked.topRows(kernel.rank()) = kernel.rows;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    stacked.row(kernel.rank() + static_cast<Eigen::Index>(c)) =
        symmetric_coordinates(tautological_monomial(fq, classes[c]), kernel.basis).transpose();
  }
  const bool monomials_free = coha::rank(stacked) == stacked.rows();
  report.independent = monomials_free && report.quotient_dim == report.partition_count;
  return report;
}

SymPoly random_element(const DimVector& d, int max_degree, std::mt19937_64& rng, bool homogeneous) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick_degree(0, max_degree);
  Polynomial sum;
  const int top = pick_degree(rng);
  for (int n = homogeneous ? top : 0; n <= top; ++n) {
    for (const auto& mu : symmetric_basis(d, n)) sum += Polynomial(coeff(rng)) * monomial_symmetric(mu).poly();
  }
  return SymPoly(d, std::move(sum));
}

}  // namespace coha
