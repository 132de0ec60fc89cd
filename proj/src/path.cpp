#include "coha/path.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coha {

Path Path::parent() const {
  if (arrows_.empty()) throw std::logic_error("the root has no parent");
  return Path(std::vector<int>(arrows_.begin(), arrows_.end() - 1));
}

Path Path::then(int arrow) const {
  auto a = arrows_;
  a.push_back(arrow);
  return Path(std::move(a));
}

bool Path::is_prefix_of(const Path& other) const {
  return arrows_.size() <= other.arrows_.size() &&
         std::equal(arrows_.begin(), arrows_.end(), other.arrows_.begin());
}

int target(const FramedQuiver& fq, const Path& u) {
  if (u.is_root()) return kFramingVertex;
  return fq.arrows()[static_cast<std::size_t>(u.arrows().back())].target;
}

void validate_path(const FramedQuiver& fq, const Path& u) {
  int at = kFramingVertex;
  for (int a : u.arrows()) {
    if (a < 0 || static_cast<std::size_t>(a) >= fq.arrows().size()) {
      throw std::invalid_argument("arrow index out of range");
    }
    const auto& arrow = fq.arrows()[static_cast<std::size_t>(a)];
    if (arrow.source != at) throw std::invalid_argument("arrows do not compose");
    at = arrow.target;
  }
}

std::vector<Path> children(const FramedQuiver& fq, const Path& u) {
  const int t = target(fq, u);
  std::vector<Path> out;
  for (std::size_t a = 0; a < fq.arrows().size(); ++a) {
    if (fq.arrows()[a].source == t) out.push_back(u.then(static_cast<int>(a)));
  }
  return out;
}

std::vector<Path> paths_up_to(const FramedQuiver& fq, std::size_t max_length) {
  std::vector<Path> out{Path::root()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto& c : children(fq, out[i])) out.push_back(std::move(c));
    }
    level_begin = level_end;
  }
  PathOrder::shortlex().sort(out);
  return out;
}

PathOrder PathOrder::weighted_shortlex(std::vector<Rational> weights) {
  for (const auto& w : weights) {
    if (w <= 0) throw std::invalid_argument("arrow weights must be strictly positive");
  }
  return PathOrder(OrderKind::weighted_shortlex, std::move(weights));
}

Rational PathOrder::weight(const Path& u) const {
  Rational total = 0;
  for (int a : u.arrows()) total += weights_.at(static_cast<std::size_t>(a));
  return total;
}

namespace {

std::strong_ordering shortlex_compare(const Path& u, const Path& v) {
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  return u.arrows() <=> v.arrows();
}

}  // namespace

std::strong_ordering PathOrder::compare(const Path& u, const Path& v) const {
  switch (kind_) {
    case OrderKind::shortlex:
      return shortlex_compare(u, v);
    case OrderKind::weighted_shortlex: {
      const Rational wu = weight(u);
      const Rational wv = weight(v);
      if (wu < wv) return std::strong_ordering::less;
      if (wv < wu) return std::strong_ordering::greater;
      return shortlex_compare(u, v);
    }
    case OrderKind::lex:
      // std::vector's lexicographic comparison: first difference, shorter prefix first.
      return u.arrows() <=> v.arrows();
  }
  return std::strong_ordering::equal;
}

void PathOrder::sort(std::vector<Path>& paths) const {
  std::sort(paths.begin(), paths.end(), [this](const Path& a, const Path& b) { return less(a, b); });
}

std::string order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::shortlex: return "shortlex";
    case OrderKind::weighted_shortlex: return "weighted-shortlex";
    case OrderKind::lex: return "lex";
  }
  return "?";
}

PathOrder parse_order(const FramedQuiver& fq, std::string_view kind, std::string_view weights) {
  if (kind == "shortlex" || kind == "lex") {
    if (!weights.empty()) throw std::invalid_argument("weights apply only to weighted-shortlex");
    return kind == "lex" ? PathOrder::lex() : PathOrder::shortlex();
  }
  if (kind != "weighted-shortlex") {
    throw std::invalid_argument("unknown order '" + std::string(kind) + "'");
  }
  std::vector<Rational> w(fq.arrows().size(), Rational(1));
  std::size_t start = 0;
  while (start < weights.size()) {
    auto end = weights.find(',', start);
    if (end == std::string_view::npos) end = weights.size();
    auto item = weights.substr(start, end - start);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("weights are name=value pairs");
    const int a = fq.find_arrow(item.substr(0, eq));
    if (a < 0) throw std::invalid_argument("unknown arrow '" + std::string(item.substr(0, eq)) + "'");
    w[static_cast<std::size_t>(a)] = parse_rational(item.substr(eq + 1));
    start = end + 1;
  }
  return PathOrder::weighted_shortlex(std::move(w));
}

std::vector<MonomialViolation> monomial_axiom_violations(const FramedQuiver& fq, const PathOrder& order,
                                                         std::size_t length_bound) {
  std::vector<MonomialViolation> out;
  if (length_bound == 0) return out;
  const auto paths = paths_up_to(fq, length_bound - 1);
  for (const auto& u : paths) {
    for (const auto& v : paths) {
      if (target(fq, u) != target(fq, v) || !order.less(u, v)) continue;
      for (const auto& au : children(fq, u)) {
        const int a = au.arrows().back();
        if (order.less(v.then(a), au)) out.push_back({a, u, v});
      }
    }
  }
  return out;
}

std::optional<MonomialViolation> monomial_axiom_check(const FramedQuiver& fq, const PathOrder& order,
                                                      std::size_t length_bound) {
  auto all = monomial_axiom_violations(fq, order, length_bound);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

bool compact_names(const FramedQuiver& fq) {
  return std::all_of(fq.arrows().begin(), fq.arrows().end(),
                     [](const Arrow& a) { return a.name.size() == 1; });
}

}  // namespace

std::string format_path_dotted(const FramedQuiver& fq, const Path& u) {
  if (u.is_root()) return "*";
  std::string out;
  for (auto it = u.arrows().rbegin(); it != u.arrows().rend(); ++it) {
    if (!out.empty()) out += '.';
    out += fq.arrows()[static_cast<std::size_t>(*it)].name;
  }
  return out;
}

std::string format_path(const FramedQuiver& fq, const Path& u) {
  if (u.is_root()) return "*";
  if (!compact_names(fq)) return format_path_dotted(fq, u);
  std::string out;
  for (auto it = u.arrows().rbegin(); it != u.arrows().rend(); ++it) {
    out += fq.arrows()[static_cast<std::size_t>(*it)].name;
  }
  return out;
}

Path parse_path(const FramedQuiver& fq, std::string_view text) {
  if (text == "*" || text == "e_inf") return Path::root();
  std::vector<std::string> names;  // written order (outermost arrow first)
  if (text.find('.') != std::string_view::npos || fq.find_arrow(text) >= 0) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('.', start);
      if (end == std::string_view::npos) end = text.size();
      names.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    if (!compact_names(fq)) {
      throw std::invalid_argument("path '" + std::string(text) + "': use the dotted form");
    }
    for (std::size_t i = 0; i < text.size();) {
      std::string name(1, text[i++]);
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("path '" + std::string(text) + "': bad power");
        power = std::stoi(std::string(text.substr(i, j - i)));
        i = j;
      }
      for (int k = 0; k < power; ++k) names.push_back(name);
    }
  }
  std::vector<int> arrows;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    const int a = fq.find_arrow(*it);
    if (a < 0) throw std::invalid_argument("unknown arrow '" + *it + "' in path '" + std::string(text) + "'");
    arrows.push_back(a);
  }
  Path p(std::move(arrows));
  validate_path(fq, p);
  return p;
}

}  // namespace coha
