#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace coha {

/// Index of the framing vertex ∞ in arrow sources and path targets.
inline constexpr int kFramingVertex = -1;

/// Componentwise non-negative integer vector indexed by the vertices.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t size) : entries_(size, 0) {}
  DimVector(std::initializer_list<int> entries);
  explicit DimVector(std::vector<int> entries);

  static DimVector unit(std::size_t size, int vertex);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;
  bool is_zero() const { return total() == 0; }

  /// Componentwise order; `a <= b` iff a_i <= b_i for all i.
  bool fits_in(const DimVector& other) const;

  DimVector operator+(const DimVector& other) const;
  /// Throws std::invalid_argument when a component would become negative.
  DimVector operator-(const DimVector& other) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Integer vector that may have negative entries, e.g. c(d) = w − χ(d,−).
using SignedVector = std::vector<int>;

/// Enumerates every β with 0 <= β <= bound in lexicographic order.
std::vector<DimVector> dim_vectors_below(const DimVector& bound);

std::string format_dim(const DimVector& d);
/// Accepts `3` or `1,0,2`.
DimVector parse_dim(std::string_view text);

struct Arrow {
  std::string name;
  int source = 0;  ///< kFramingVertex for framing arrows.
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on duplicate names or out-of-range endpoints.
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Number of arrows i → j.
  int arrow_count(int source, int target) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// Quiver Q together with a framing vector w. The framed quiver Q^w has the
/// extra vertex ∞ and w_i arrows ∞ → i; those framing arrows come first in the
/// arrow order, sorted by (target vertex, copy index), then the base arrows in
/// declaration order.
class FramedQuiver {
 public:
  FramedQuiver() = default;
  /// Framing arrows are named `g<vertex>_<copy>` unless names are supplied.
  FramedQuiver(Quiver base, DimVector framing, std::vector<std::string> framing_names = {});

  const Quiver& base() const { return base_; }
  const DimVector& framing() const { return framing_; }
  int vertex_count() const { return base_.vertex_count(); }

  /// All arrows of Q^w in their total order.
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int framing_arrow_count() const { return framing_.total(); }
  bool is_framing_arrow(int arrow) const { return arrow < framing_arrow_count(); }
  /// Position of base arrow `base_index` in arrows().
  int framed_index(int base_index) const { return framing_arrow_count() + base_index; }
  /// Index into arrows() of the arrow with this name, or -1.
  int find_arrow(std::string_view name) const;
  bool default_framing_names() const { return default_names_; }

 private:
  Quiver base_;
  DimVector framing_;
  std::vector<Arrow> arrows_;
  bool default_names_ = true;
};

/// χ(d,e) = Σ_i d_i e_i − Σ_{a:i→j} d_i e_j.
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// c(d)_i = w_i − χ(d, e_i): the per-vertex size of every critical set of a tree of dimension d.
SignedVector critical_dim_vector(const FramedQuiver& fq, const DimVector& d);

/// w·d − χ(d,d); the dimension of the moduli space when it is non-empty.
int hilb_dim(const FramedQuiver& fq, const DimVector& d);

/// Line-based format: `vertices n`, `arrow <name> <src> <tgt>`, `framing w_0 ... w_{n-1}`,
/// optional `framing-names <name>...`; `#` starts a comment.
FramedQuiver parse_quiver_file(std::string_view text);
std::string serialize_quiver(const FramedQuiver& fq);

}  // namespace coha
