#pragma once

#include "coha/cells.hpp"
#include "coha/path.hpp"
#include "coha/quiver.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coha {

/// One weakly decreasing list per vertex, of length d_i (zeros kept).
class MultiPartition {
 public:
  MultiPartition() = default;
  /// Throws std::invalid_argument if a block is not weakly decreasing or has negative parts.
  explicit MultiPartition(std::vector<std::vector<int>> blocks);
  /// All-zero multipartition of shape d.
  static MultiPartition zero(const DimVector& d);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(std::size_t vertex) const { return blocks_[vertex]; }
  DimVector shape() const;
  int size() const;  ///< |λ|

  /// λ^{(i)}_k for 1 <= k <= d_i.
  int part(std::size_t vertex, int k) const { return blocks_[vertex][static_cast<std::size_t>(k - 1)]; }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// `[2,1][]`: one bracket group per vertex, trailing zeros suppressed.
std::string format_partition(const MultiPartition& lambda);
/// Parses the display form. Groups shorter than d_i are padded with zeros;
/// without `d`, each group's length is taken as given.
MultiPartition parse_partition(std::string_view text, const DimVector* d = nullptr);

/// Condition (Phi): for every β < d some vertex i has β_i < d_i and λ^{(i)}_{d_i−β_i} < c(β)_i.
bool satisfies_phi(const FramedQuiver& fq, const DimVector& d, const MultiPartition& lambda);

/// 𝒮(d) by brute force over the box λ^{(i)}_1 <= max(0, c(d)_i), sorted by the
/// order the bijection induces from `order` (order-independent for one vertex).
std::vector<MultiPartition> enumerate_partitions(const FramedQuiver& fq, const DimVector& d,
                                                 const PathOrder& order = PathOrder::shortlex());

MultiPartition tree_to_partition(const FramedQuiver& fq, const Subtree& s, const PathOrder& order);

/// Inverse of tree_to_partition. Throws DomainError("not in S(d)") if (Phi) fails.
Subtree partition_to_tree(const FramedQuiver& fq, const MultiPartition& lambda, const PathOrder& order);

/// One-vertex order: compares at the largest index where the parts differ.
/// Throws std::invalid_argument on shape mismatch or several vertices.
std::strong_ordering compare_partitions(const MultiPartition& lambda, const MultiPartition& mu);

/// Order transported from the tree order through the bijection.
std::strong_ordering compare_partitions_induced(const FramedQuiver& fq, const MultiPartition& lambda,
                                                const MultiPartition& mu, const PathOrder& order);

/// w·d − χ(d,d) − |λ|.
int partition_cell_dim(const FramedQuiver& fq, const DimVector& d, const MultiPartition& lambda);

}  // namespace coha
