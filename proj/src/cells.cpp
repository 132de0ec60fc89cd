#include "coha/cells.hpp"

#include "coha/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coha {

Subtree::Subtree() : paths_{Path::root()} {}

Subtree::Subtree(const FramedQuiver& fq, std::vector<Path> paths) : paths_(std::move(paths)) {
  paths_.push_back(Path::root());
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
  for (const auto& u : paths_) {
    validate_path(fq, u);
    if (!u.is_root() && !contains(u.parent())) {
      throw std::invalid_argument("tree is not lower-closed: missing parent of '" +
                                  format_path(fq, u) + "'");
    }
  }
}

bool Subtree::contains(const Path& u) const {
  return std::binary_search(paths_.begin(), paths_.end(), u);
}

DimVector Subtree::dim_vector(const FramedQuiver& fq) const {
  std::vector<int> counts(static_cast<std::size_t>(fq.vertex_count()), 0);
  for (const auto& u : paths_) {
    if (!u.is_root()) ++counts[static_cast<std::size_t>(target(fq, u))];
  }
  return DimVector(std::move(counts));
}

std::vector<Path> Subtree::sorted(const PathOrder& order) const {
  std::vector<Path> out;
  for (const auto& u : paths_) {
    if (!u.is_root()) out.push_back(u);
  }
  order.sort(out);
  return out;
}

std::vector<Path> Subtree::slice(const FramedQuiver& fq, const PathOrder& order, int vertex) const {
  std::vector<Path> out;
  for (auto& u : sorted(order)) {
    if (target(fq, u) == vertex) out.push_back(std::move(u));
  }
  return out;
}

Subtree Subtree::with(const Path& u) const {
  Subtree out = *this;
  auto it = std::lower_bound(out.paths_.begin(), out.paths_.end(), u);
  if (it == out.paths_.end() || *it != u) out.paths_.insert(it, u);
  return out;
}

std::vector<Path> CriticalSet::slice(const FramedQuiver& fq, int vertex) const {
  std::vector<Path> out;
  for (const auto& e : elements) {
    if (target(fq, e.path) == vertex) out.push_back(e.path);
  }
  return out;
}

DimVector CriticalSet::dim_vector(const FramedQuiver& fq) const {
  std::vector<int> counts(static_cast<std::size_t>(fq.vertex_count()), 0);
  for (const auto& e : elements) ++counts[static_cast<std::size_t>(target(fq, e.path))];
  return DimVector(std::move(counts));
}

CriticalSet critical_set(const FramedQuiver& fq, const Subtree& s, const PathOrder& order) {
  std::vector<Path> crit;
  for (const auto& u : s.paths()) {
    for (auto& c : children(fq, u)) {
      if (!s.contains(c)) crit.push_back(std::move(c));
    }
  }
  order.sort(crit);
  const auto members = s.sorted(order);
  CriticalSet out;
  for (auto& v : crit) {
    const int t = target(fq, v);
    int k = 0;
    for (const auto& u : members) {
      if (target(fq, u) == t && order.less(u, v)) ++k;
    }
    out.dim += k;
    out.elements.push_back({std::move(v), k});
  }
  return out;
}

int cell_dim(const FramedQuiver& fq, const Subtree& s, const PathOrder& order) {
  return critical_set(fq, s, order).dim;
}

namespace {

std::strong_ordering compare_sorted(const std::vector<Path>& a, const std::vector<Path>& b,
                                    const PathOrder& order) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = order.compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

struct TreeSearch {
  const FramedQuiver& fq;
  const DimVector& d;
  const PathOrder& order;
  std::vector<Path> members;  // ascending; the root is implicit
  std::vector<int> counts;
  std::vector<std::vector<Path>> found;

  void run() {
    if (static_cast<int>(members.size()) == d.total()) {
      found.push_back(members);
      return;
    }
    std::vector<Path> candidates;
    auto consider = [&](const Path& u) {
      for (auto& c : children(fq, u)) {
        const auto t = static_cast<std::size_t>(target(fq, c));
        if (counts[t] >= d[t]) continue;
        if (!members.empty() && !order.less(members.back(), c)) continue;
        if (std::find(members.begin(), members.end(), c) != members.end()) continue;
        candidates.push_back(std::move(c));
      }
    };
    consider(Path::root());
    for (const auto& u : members) consider(u);
    order.sort(candidates);
    for (const auto& c : candidates) {
      const auto t = static_cast<std::size_t>(target(fq, c));
      members.push_back(c);
      ++counts[t];
      run();
      --counts[t];
      members.pop_back();
    }
  }
};

}  // namespace

std::strong_ordering compare_trees(const Subtree& a, const Subtree& b, const PathOrder& order) {
  return compare_sorted(a.sorted(order), b.sorted(order), order);
}

std::vector<Subtree> enumerate_trees(const FramedQuiver& fq, const DimVector& d, const PathOrder& order) {
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw std::invalid_argument("dimension vector length does not match the quiver");
  }
  TreeSearch search{fq, d, order, {}, std::vector<int>(d.size(), 0), {}};
  search.run();
  std::sort(search.found.begin(), search.found.end(),
            [&](const auto& a, const auto& b) { return compare_sorted(a, b, order) < 0; });
  const auto expected = critical_dim_vector(fq, d);
  std::vector<Subtree> out;
  out.reserve(search.found.size());
  for (auto& members : search.found) {
    Subtree s(fq, std::move(members));
    if (critical_set(fq, s, order).dim_vector(fq).entries() != expected) {
      throw std::logic_error("critical set size differs from c(d)");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_tree(const FramedQuiver& fq, const Subtree& s, const PathOrder& order) {
  const auto members = s.sorted(order);
  if (members.empty()) return "*";
  std::string out;
  for (const auto& u : members) {
    if (!out.empty()) out += ',';
    out += format_path(fq, u);
  }
  return out;
}

Subtree parse_tree(const FramedQuiver& fq, std::string_view text) {
  std::vector<Path> paths;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) paths.push_back(parse_path(fq, item));
    start = end + 1;
  }
  return Subtree(fq, std::move(paths));
}

NumericRep NumericRep::zero(const FramedQuiver& fq, const DimVector& d) {
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw std::invalid_argument("dimension vector length does not match the quiver");
  }
  NumericRep m;
  m.dims = d;
  for (const auto& a : fq.base().arrows()) {
    m.arrows.push_back(RationalMatrix::Zero(d[static_cast<std::size_t>(a.target)],
                                            d[static_cast<std::size_t>(a.source)]));
  }
  for (int g = 0; g < fq.framing_arrow_count(); ++g) {
    m.framing.push_back(RationalVector::Zero(d[static_cast<std::size_t>(fq.arrows()[static_cast<std::size_t>(g)].target)]));
  }
  return m;
}

void NumericRep::validate(const FramedQuiver& fq) const {
  if (static_cast<int>(dims.size()) != fq.vertex_count() || arrows.size() != fq.base().arrows().size() ||
      static_cast<int>(framing.size()) != fq.framing_arrow_count()) {
    throw std::invalid_argument("representation does not match the quiver");
  }
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arrow = fq.base().arrows()[a];
    if (arrows[a].rows() != dims[static_cast<std::size_t>(arrow.target)] ||
        arrows[a].cols() != dims[static_cast<std::size_t>(arrow.source)]) {
      throw std::invalid_argument("matrix for arrow '" + arrow.name + "' has the wrong shape");
    }
  }
  for (std::size_t g = 0; g < framing.size(); ++g) {
    if (framing[g].size() != dims[static_cast<std::size_t>(fq.arrows()[g].target)]) {
      throw std::invalid_argument("framing vector has the wrong length");
    }
  }
}

RationalVector path_vector(const FramedQuiver& fq, const NumericRep& m, const Path& u) {
  if (u.is_root()) throw std::invalid_argument("the root has no vector in a base vertex");
  const auto& arrows = u.arrows();
  RationalVector v = m.framing.at(static_cast<std::size_t>(arrows.front()));
  for (std::size_t k = 1; k < arrows.size(); ++k) {
    v = m.arrows.at(static_cast<std::size_t>(arrows[k] - fq.framing_arrow_count())) * v;
  }
  return v;
}

namespace {

RationalMatrix columns(const FramedQuiver& fq, const NumericRep& m, const std::vector<Path>& paths,
                       int vertex) {
  RationalMatrix out(m.dims[static_cast<std::size_t>(vertex)], static_cast<Eigen::Index>(paths.size()));
  for (std::size_t c = 0; c < paths.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = path_vector(fq, m, paths[c]);
  return out;
}

}  // namespace

Subtree classify(const FramedQuiver& fq, const NumericRep& m, const PathOrder& order) {
  if (!order.is_monomial()) throw std::invalid_argument("classify requires a monomial order");
  m.validate(fq);
  const auto n = static_cast<std::size_t>(fq.vertex_count());
  std::vector<RationalMatrix> spans(n);
  for (std::size_t i = 0; i < n; ++i) spans[i] = RationalMatrix(m.dims[i], 0);
  Subtree s;
  while (s.size() < m.dims.total()) {
    bool grew = false;
    for (const auto& e : critical_set(fq, s, order).elements) {
      const auto t = static_cast<std::size_t>(target(fq, e.path));
      const RationalVector v = path_vector(fq, m, e.path);
      if (in_column_span(spans[t], v)) continue;
      RationalMatrix next(spans[t].rows(), spans[t].cols() + 1);
      next << spans[t], v;
      spans[t] = std::move(next);
      s = s.with(e.path);
      grew = true;
      break;
    }
    if (!grew) throw DomainError("not stable: the framing generates a proper subrepresentation");
  }
  return s;
}

bool z_conditions_hold(const FramedQuiver& fq, const NumericRep& m, const Subtree& s,
                       const PathOrder& order) {
  if (s.dim_vector(fq) != m.dims) return false;
  for (int i = 0; i < fq.vertex_count(); ++i) {
    const auto basis = s.slice(fq, order, i);
    if (rank(columns(fq, m, basis, i)) != static_cast<Eigen::Index>(basis.size())) return false;
  }
  for (const auto& e : critical_set(fq, s, order).elements) {
    const int t = target(fq, e.path);
    std::vector<Path> earlier;
    for (auto& u : s.slice(fq, order, t)) {
      if (order.less(u, e.path)) earlier.push_back(std::move(u));
    }
    if (!in_column_span(columns(fq, m, earlier, t), path_vector(fq, m, e.path))) return false;
  }
  return true;
}

bool in_degeneracy_locus(const FramedQuiver& fq, const NumericRep& m, const Subtree& s,
                         const PathOrder& order) {
  for (const auto& e : critical_set(fq, s, order).elements) {
    const int t = target(fq, e.path);
    std::vector<Path> family;
    for (auto& u : s.slice(fq, order, t)) {
      if (order.less(u, e.path)) family.push_back(std::move(u));
    }
    family.push_back(e.path);
    if (rank(columns(fq, m, family, t)) == static_cast<Eigen::Index>(family.size())) return false;
  }
  return true;
}

std::vector<ChartCoordinate> chart_coordinates(const FramedQuiver& fq, const Subtree& s,
                                               const PathOrder& order) {
  const auto crit = critical_set(fq, s, order);
  std::vector<ChartCoordinate> out;
  for (int i = 0; i < fq.vertex_count(); ++i) {
    const auto basis = s.slice(fq, order, i);
    for (const auto& v : crit.slice(fq, i)) {
      for (const auto& u : basis) out.push_back({u, v, i});
    }
  }
  return out;
}

NumericRep rep_from_chart(const FramedQuiver& fq, const Subtree& s, const PathOrder& order,
                          const std::vector<Rational>& values) {
  const auto coords = chart_coordinates(fq, s, order);
  if (values.size() != coords.size()) throw std::invalid_argument("wrong number of chart values");
  const DimVector d = s.dim_vector(fq);
  const auto n = static_cast<std::size_t>(fq.vertex_count());
  std::vector<std::vector<Path>> basis(n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = s.slice(fq, order, static_cast<int>(i));

  auto vector_of = [&](const Path& w) {
    const auto t = static_cast<std::size_t>(target(fq, w));
    RationalVector out = RationalVector::Zero(d[t]);
    auto it = std::find(basis[t].begin(), basis[t].end(), w);
    if (it != basis[t].end()) {
      out(it - basis[t].begin()) = 1;
      return out;
    }
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (coords[c].v != w) continue;
      auto pos = std::find(basis[t].begin(), basis[t].end(), coords[c].u) - basis[t].begin();
      out(pos) = values[c];
    }
    return out;
  };

  NumericRep m = NumericRep::zero(fq, d);
  for (int g = 0; g < fq.framing_arrow_count(); ++g) {
    m.framing[static_cast<std::size_t>(g)] = vector_of(Path::root().then(g));
  }
  for (std::size_t a = 0; a < fq.base().arrows().size(); ++a) {
    const auto& arrow = fq.base().arrows()[a];
    const auto& src = basis[static_cast<std::size_t>(arrow.source)];
    for (std::size_t c = 0; c < src.size(); ++c) {
      m.arrows[a].col(static_cast<Eigen::Index>(c)) = vector_of(src[c].then(fq.framed_index(static_cast<int>(a))));
    }
  }
  return m;
}

namespace {

Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

}  // namespace

NumericRep random_rep(const FramedQuiver& fq, const DimVector& d, std::mt19937_64& rng) {
  NumericRep m = NumericRep::zero(fq, d);
  for (auto& a : m.arrows) {
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = random_entry(rng);
  }
  for (auto& g : m.framing) {
    for (Eigen::Index r = 0; r < g.size(); ++r) g(r) = random_entry(rng);
  }
  return m;
}

bool is_stable(const FramedQuiver& fq, const NumericRep& m) {
  try {
    classify(fq, m, PathOrder::shortlex());
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

NumericRep random_stable_rep(const FramedQuiver& fq, const DimVector& d, std::mt19937_64& rng,
                             int attempts) {
  for (int i = 0; i < attempts; ++i) {
    NumericRep m = random_rep(fq, d, rng);
    if (is_stable(fq, m)) return m;
  }
  throw DomainError("no stable representation found; the moduli space may be empty");
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int to_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "expected an integer, got '" + token + "'");
}

}  // namespace

NumericRep parse_rep_file(const FramedQuiver& fq, std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) lines.push_back(split_tokens(line));
  }
  std::size_t at = 0;
  auto next_nonempty = [&]() {
    while (at < lines.size() && lines[at].empty()) ++at;
    return at < lines.size();
  };
  if (!next_nonempty() || lines[at][0] != "rep" || lines[at].size() != 2) {
    throw ParseError(static_cast<int>(at) + 1, "expected 'rep <dims>'");
  }
  DimVector d;
  try {
    d = parse_dim(lines[at][1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(static_cast<int>(at) + 1, e.what());
  }
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw ParseError(static_cast<int>(at) + 1, "dimension vector length does not match the quiver");
  }
  ++at;
  NumericRep m = NumericRep::zero(fq, d);

  // Reads `count` rationals from the lines after the header, row by row.
  auto read_entries = [&](std::size_t rows, std::size_t cols, int header_line) {
    std::vector<Rational> out;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!next_nonempty()) throw ParseError(header_line, "block ends early");
      const auto& tok = lines[at];
      if (tok.size() != cols) {
        throw ParseError(static_cast<int>(at) + 1,
                         "expected " + std::to_string(cols) + " entries, got " + std::to_string(tok.size()));
      }
      for (const auto& t : tok) {
        try {
          out.push_back(parse_rational(t));
        } catch (const std::invalid_argument& e) {
          throw ParseError(static_cast<int>(at) + 1, e.what());
        }
      }
      ++at;
    }
    return out;
  };

  while (next_nonempty()) {
    const auto tok = lines[at];
    const int line_no = static_cast<int>(at) + 1;
    ++at;
    if (tok[0] == "matrix") {
      if (tok.size() != 2) throw ParseError(line_no, "usage: matrix <arrow>");
      const int a = fq.find_arrow(tok[1]);
      if (a < 0 || fq.is_framing_arrow(a)) throw ParseError(line_no, "unknown arrow '" + tok[1] + "'");
      auto& mat = m.arrows[static_cast<std::size_t>(a - fq.framing_arrow_count())];
      const auto entries = read_entries(static_cast<std::size_t>(mat.rows()), static_cast<std::size_t>(mat.cols()), line_no);
      for (Eigen::Index r = 0; r < mat.rows(); ++r)
        for (Eigen::Index c = 0; c < mat.cols(); ++c) mat(r, c) = entries[static_cast<std::size_t>(r * mat.cols() + c)];
    } else if (tok[0] == "framing") {
      if (tok.size() != 3) throw ParseError(line_no, "usage: framing <vertex> <slot>");
      const int vertex = to_int(tok[1], line_no);
      const int slot = to_int(tok[2], line_no);
      if (vertex < 0 || vertex >= fq.vertex_count() || slot < 1 ||
          slot > fq.framing()[static_cast<std::size_t>(vertex)]) {
        throw ParseError(line_no, "framing slot out of range");
      }
      int g = slot - 1;
      for (int i = 0; i < vertex; ++i) g += fq.framing()[static_cast<std::size_t>(i)];
      auto& vec = m.framing[static_cast<std::size_t>(g)];
      const auto entries = read_entries(1, static_cast<std::size_t>(vec.size()), line_no);
      for (Eigen::Index r = 0; r < vec.size(); ++r) vec(r) = entries[static_cast<std::size_t>(r)];
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  return m;
}

std::string serialize_rep(const FramedQuiver& fq, const NumericRep& m) {
  std::ostringstream out;
  out << "rep " << format_dim(m.dims) << "\n";
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    const auto& mat = m.arrows[a];
    if (mat.size() == 0) continue;
    out << "matrix " << fq.base().arrows()[a].name << "\n";
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      for (Eigen::Index c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << to_string(mat(r, c));
      out << "\n";
    }
  }
  std::size_t g = 0;
  for (int i = 0; i < fq.vertex_count(); ++i) {
    for (int slot = 1; slot <= fq.framing()[static_cast<std::size_t>(i)]; ++slot, ++g) {
      const auto& vec = m.framing[g];
      if (vec.size() == 0) continue;
      out << "framing " << i << " " << slot << "\n";
      for (Eigen::Index r = 0; r < vec.size(); ++r) out << (r ? " " : "") << to_string(vec(r));
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace coha
