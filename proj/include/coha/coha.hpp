#pragma once

#include "coha/linalg.hpp"
#include "coha/partitions.hpp"
#include "coha/polynomial.hpp"
#include "coha/quiver.hpp"

#include <random>
#include <string>
#include <vector>

namespace coha {

/// Index of x_{i,k} (k is 1-based) in the flattened variable list of dimension vector d.
int variable_index(const DimVector& d, int vertex, int k);

/// Polynomial in the variables x_{i,k}, 1 <= k <= d_i, invariant under
/// permutations inside each vertex block.
class SymPoly {
 public:
  SymPoly() = default;
  /// Throws std::invalid_argument if `p` uses variables beyond d or is not block-symmetric.
  SymPoly(DimVector d, Polynomial p);

  static SymPoly one(const DimVector& d) { return SymPoly(d, Polynomial(1)); }

  const DimVector& dim() const { return dim_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  int degree() const { return poly_.total_degree(); }
  bool is_homogeneous() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  DimVector dim_;
  Polynomial poly_;
};

/// Elements of ℋ_d are symmetric polynomials; the two names mark intent only.
using CoHAElement = SymPoly;

bool is_block_symmetric(const DimVector& d, const Polynomial& p);

/// `x[0,1]^2 - x[0,1]*x[0,2]`, the syntax accepted by parse_polynomial.
std::string to_string(const SymPoly& f);

SymPoly shuffle_product(const FramedQuiver& fq, const SymPoly& f, const SymPoly& g);
SymPoly cup_product(const SymPoly& f, const SymPoly& g);
/// Π_i (x_{i,1} ... x_{i,d_i})^{w_i}.
SymPoly framing_idempotent(const FramedQuiver& fq, const DimVector& d);
/// e_k(x_{i,1}, ..., x_{i,d_i}).
SymPoly elementary_symmetric(const DimVector& d, int vertex, int k);
/// Product over vertices of the monomial symmetric functions m_{μ^{(i)}}.
SymPoly monomial_symmetric(const MultiPartition& mu);

/// All μ of shape d with |μ| = n (no (Phi) filter): the monomial-symmetric basis of ℋ_d in degree n.
std::vector<MultiPartition> symmetric_basis(const DimVector& d, int n);
/// Coordinates of a homogeneous degree-n element in symmetric_basis(d, n).
RationalVector symmetric_coordinates(const SymPoly& f, const std::vector<MultiPartition>& basis);

struct GradedSubspace {
  DimVector dim;
  int degree = 0;
  std::vector<MultiPartition> basis;  ///< ambient basis (monomial symmetric functions)
  RationalMatrix rows;                ///< reduced row echelon form, no zero rows

  Eigen::Index rank() const { return rows.rows(); }
  bool contains(const RationalVector& v) const;
};

/// Degree-n slice of the kernel of ℋ_d → 𝓜_{w,d}.
GradedSubspace kernel_graded_piece(const FramedQuiver& fq, const DimVector& d, int n);

/// Π_i Π_k e_k(x_{i,·})^{λ_k − λ_{k+1}}. Throws DomainError when λ fails (Phi).
SymPoly tautological_monomial(const FramedQuiver& fq, const MultiPartition& lambda);

struct BasisReport {
  int h_dim = 0;
  int kernel_dim = 0;
  int quotient_dim = 0;
  int partition_count = 0;
  bool independent = false;
};

/// Random combination of monomial symmetric functions of degree <= max_degree,
/// integer coefficients in [-3, 3]. Homogeneous when `homogeneous` is set.
SymPoly random_element(const DimVector& d, int max_degree, std::mt19937_64& rng, bool homogeneous = false);

BasisReport verify_basis(const FramedQuiver& fq, const DimVector& d, int n);

}  // namespace coha
