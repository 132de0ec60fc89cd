#pragma once

#include "coha/quiver.hpp"
#include "coha/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coha {

/// A path in Q^w starting at ∞, stored as arrow indices (into FramedQuiver::arrows())
/// in application order: arrows()[0] is the framing arrow applied first. The empty
/// path is the root e_∞. Displayed right-to-left, as composition is written.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<int> arrows) : arrows_(std::move(arrows)) {}

  static Path root() { return Path(); }

  bool is_root() const { return arrows_.empty(); }
  std::size_t length() const { return arrows_.size(); }
  const std::vector<int>& arrows() const { return arrows_; }

  /// Parent in the path tree; the root has no parent.
  Path parent() const;
  /// The path `a·this`.
  Path then(int arrow) const;

  /// True when `this` is a right factor of `other` (this ⪯ other).
  bool is_prefix_of(const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;
  /// Arbitrary structural order for use as a map key; not a path order.
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<int> arrows_;
};

/// Target vertex; kFramingVertex for the root.
int target(const FramedQuiver& fq, const Path& u);

/// Throws std::invalid_argument if consecutive arrows do not compose or the
/// first arrow does not leave ∞.
void validate_path(const FramedQuiver& fq, const Path& u);

/// Children au for the arrows a leaving t(u), in arrow order.
std::vector<Path> children(const FramedQuiver& fq, const Path& u);

/// All paths of length <= max_length, in shortlex order.
std::vector<Path> paths_up_to(const FramedQuiver& fq, std::size_t max_length);

enum class OrderKind { shortlex, weighted_shortlex, lex };

/// Admissible total order on the path tree.
class PathOrder {
 public:
  static PathOrder shortlex() { return PathOrder(OrderKind::shortlex, {}); }
  static PathOrder lex() { return PathOrder(OrderKind::lex, {}); }
  /// One strictly positive weight per arrow of Q^w (indexed like FramedQuiver::arrows()).
  static PathOrder weighted_shortlex(std::vector<Rational> weights);

  OrderKind kind() const { return kind_; }
  const std::vector<Rational>& weights() const { return weights_; }
  /// Shortlex and weighted shortlex are monomial; lex is only admissible.
  bool is_monomial() const { return kind_ != OrderKind::lex; }

  std::strong_ordering compare(const Path& u, const Path& v) const;
  bool less(const Path& u, const Path& v) const { return compare(u, v) < 0; }
  Rational weight(const Path& u) const;

  /// Sorts in place, ascending.
  void sort(std::vector<Path>& paths) const;

 private:
  PathOrder(OrderKind kind, std::vector<Rational> weights)
      : kind_(kind), weights_(std::move(weights)) {}

  OrderKind kind_;
  std::vector<Rational> weights_;
};

std::string order_name(OrderKind kind);
/// Accepts shortlex | weighted-shortlex | lex. Weighted orders take weights as
/// `name=weight,...`; unlisted arrows get weight 1.
PathOrder parse_order(const FramedQuiver& fq, std::string_view kind, std::string_view weights = {});

struct MonomialViolation {
  int arrow;
  Path lower;  ///< u with u < v
  Path upper;  ///< v, yet a·u > a·v
};

/// Looks for u < v with a·u > a·v among paths with a·u, a·v of length <= length_bound.
/// Pairs are visited in shortlex order of (u, v), then arrow order.
std::optional<MonomialViolation> monomial_axiom_check(const FramedQuiver& fq, const PathOrder& order,
                                                      std::size_t length_bound);
/// Every violation within the bound, in the same visiting order.
std::vector<MonomialViolation> monomial_axiom_violations(const FramedQuiver& fq, const PathOrder& order,
                                                         std::size_t length_bound);

/// `bbaf` when every arrow name is one character, `b.b.a.f` otherwise; the root is `*`.
std::string format_path(const FramedQuiver& fq, const Path& u);
std::string format_path_dotted(const FramedQuiver& fq, const Path& u);
/// Accepts the dotted form, the compact form (single-character names, `^k` powers allowed)
/// and `*` for the root.
Path parse_path(const FramedQuiver& fq, std::string_view text);

}  // namespace coha
