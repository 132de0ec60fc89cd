#pragma once

#include "coha/linalg.hpp"
#include "coha/path.hpp"
#include "coha/quiver.hpp"

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace coha {

/// Finite lower-closed set of paths containing the root; a cell label.
/// Stored in the structural Path order; order-dependent views are taken
/// through a PathOrder.
class Subtree {
 public:
  /// The tree {root}.
  Subtree();
  /// Adds the root if missing. Throws std::invalid_argument when the set is not
  /// lower-closed or a path is invalid.
  Subtree(const FramedQuiver& fq, std::vector<Path> paths);

  const std::vector<Path>& paths() const { return paths_; }
  bool contains(const Path& u) const;
  /// Number of non-root members.
  int size() const { return static_cast<int>(paths_.size()) - 1; }
  DimVector dim_vector(const FramedQuiver& fq) const;

  /// Non-root members ascending in `order`.
  std::vector<Path> sorted(const PathOrder& order) const;
  /// S_i: members with target i, ascending.
  std::vector<Path> slice(const FramedQuiver& fq, const PathOrder& order, int vertex) const;

  Subtree with(const Path& u) const;

  friend bool operator==(const Subtree&, const Subtree&) = default;

 private:
  std::vector<Path> paths_;
};

struct CriticalElement {
  Path path;
  int k = 0;  ///< #{u ∈ S_{t(v)} : u < v}
};

struct CriticalSet {
  std::vector<CriticalElement> elements;  ///< ascending in the order
  int dim = 0;                            ///< Σ k_v

  std::vector<Path> slice(const FramedQuiver& fq, int vertex) const;
  DimVector dim_vector(const FramedQuiver& fq) const;
};

CriticalSet critical_set(const FramedQuiver& fq, const Subtree& s, const PathOrder& order);
int cell_dim(const FramedQuiver& fq, const Subtree& s, const PathOrder& order);

/// Compares the ascending member lists at the first difference.
std::strong_ordering compare_trees(const Subtree& a, const Subtree& b, const PathOrder& order);

/// Every tree with dimension vector d, ascending in the tree order.
std::vector<Subtree> enumerate_trees(const FramedQuiver& fq, const DimVector& d, const PathOrder& order);

/// `f,af,bf` in ascending order; `*` for the root-only tree.
std::string format_tree(const FramedQuiver& fq, const Subtree& s, const PathOrder& order);
/// Comma-separated paths; the root may be omitted.
Subtree parse_tree(const FramedQuiver& fq, std::string_view text);

/// A framed representation with rational entries.
struct NumericRep {
  DimVector dims;
  std::vector<RationalMatrix> arrows;   ///< per base arrow a:i→j, d_j × d_i
  std::vector<RationalVector> framing;  ///< per framing arrow ∞→i, length d_i

  /// Zero representation of the right shapes.
  static NumericRep zero(const FramedQuiver& fq, const DimVector& d);
  void validate(const FramedQuiver& fq) const;
};

/// m_u = u·m_*; u must not be the root.
RationalVector path_vector(const FramedQuiver& fq, const NumericRep& m, const Path& u);

/// The unique S with M ∈ Z_S, built greedily. Requires a monomial order.
/// Throws DomainError("not stable") when the framing does not generate M.
Subtree classify(const FramedQuiver& fq, const NumericRep& m, const PathOrder& order);

/// {m_u : u ∈ S} is a basis and every critical m_v lies in the span of the
/// m_u with u ∈ S_{t(v)}, u < v.
bool z_conditions_hold(const FramedQuiver& fq, const NumericRep& m, const Subtree& s,
                       const PathOrder& order);

/// Every family {m_u : u ∈ S(v)}, v ∈ C(S), is linearly dependent.
bool in_degeneracy_locus(const FramedQuiver& fq, const NumericRep& m, const Subtree& s,
                         const PathOrder& order);

/// Representation whose chart coordinates (in U_S) are `values`, indexed as chart_coordinates().
NumericRep rep_from_chart(const FramedQuiver& fq, const Subtree& s, const PathOrder& order,
                          const std::vector<Rational>& values);

/// Entries p/q with |p| <= 4, 1 <= q <= 3. Not necessarily stable.
NumericRep random_rep(const FramedQuiver& fq, const DimVector& d, std::mt19937_64& rng);
/// Retries random_rep until classify succeeds (shortlex) or `attempts` run out.
NumericRep random_stable_rep(const FramedQuiver& fq, const DimVector& d, std::mt19937_64& rng,
                             int attempts = 1000);
bool is_stable(const FramedQuiver& fq, const NumericRep& m);

/// `rep <dims>`, then `matrix <arrow>` blocks of d_j rows with d_i entries
/// and `framing <vertex> <slot>` blocks of d_i entries (slot is 1-based).
/// Omitted blocks are zero. `#` starts a comment.
NumericRep parse_rep_file(const FramedQuiver& fq, std::string_view text);
std::string serialize_rep(const FramedQuiver& fq, const NumericRep& m);

/// Pairs (u, v) ∈ S_i × C(S)_i, ordered by vertex, then v, then u.
struct ChartCoordinate {
  Path u;
  Path v;
  int vertex = 0;
};
std::vector<ChartCoordinate> chart_coordinates(const FramedQuiver& fq, const Subtree& s,
                                               const PathOrder& order);

}  // namespace coha
