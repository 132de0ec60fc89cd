#include "coha/charts.hpp"

#include "coha/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coha {

std::vector<std::string> coordinate_names(const FramedQuiver& fq, const Subtree& chart, const PathOrder& order) {
  const auto coords = chart_coordinates(fq, chart, order);
  const auto crit = critical_set(fq, chart, order);
  std::vector<std::string> out;
  for (const auto& c : coords) {
    const auto basis = chart.slice(fq, order, c.vertex);
    const auto critical = crit.slice(fq, c.vertex);
    const auto i = std::find(basis.begin(), basis.end(), c.u) - basis.begin() + 1;
    const auto j = std::find(critical.begin(), critical.end(), c.v) - critical.begin() + 1;
    if (fq.vertex_count() == 1 && i < 10 && j < 10) {
      out.push_back("c" + std::to_string(i) + std::to_string(j));
    } else {
      out.push_back("c(" + format_path(fq, c.u) + ";" + format_path(fq, c.v) + ")");
    }
  }
  return out;
}

namespace {

struct ChartData {
  std::vector<ChartCoordinate> coords;
  std::vector<std::vector<Path>> basis;  // per vertex
};

ChartData chart_data(const FramedQuiver& fq, const Subtree& chart, const PathOrder& order) {
  ChartData data;
  data.coords = chart_coordinates(fq, chart, order);
  for (int i = 0; i < fq.vertex_count(); ++i) data.basis.push_back(chart.slice(fq, order, i));
  return data;
}

/// Column of the arrow action: w is a child of a basis path, so it lies in S or C(S).
std::vector<ChartPoly> column_of(const FramedQuiver& fq, const ChartData& data, const Path& w) {
  const auto t = static_cast<std::size_t>(target(fq, w));
  const auto& basis = data.basis[t];
  std::vector<ChartPoly> out(basis.size());
  auto it = std::find(basis.begin(), basis.end(), w);
  if (it != basis.end()) {
    out[static_cast<std::size_t>(it - basis.begin())] = 1;
    return out;
  }
  bool critical = false;
  for (std::size_t k = 0; k < data.coords.size(); ++k) {
    if (data.coords[k].v != w) continue;
    critical = true;
    const auto pos = std::find(basis.begin(), basis.end(), data.coords[k].u) - basis.begin();
    out[static_cast<std::size_t>(pos)] = ChartPoly::variable(static_cast<int>(k));
  }
  // A critical path at a vertex with empty basis has no coordinates and a zero vector.
  if (!critical && !basis.empty()) throw std::logic_error("path is neither in the chart tree nor critical");
  return out;
}

SymbolicVector symbolic_vector(const FramedQuiver& fq, const ChartData& data, const Path& v) {
  if (v.is_root()) throw std::invalid_argument("the root has no vector in a base vertex");
  SymbolicVector out;
  out.vertex = target(fq, v);
  if (v.length() == 1) {
    out.entries = column_of(fq, data, v);
    return out;
  }
  const Path u = v.parent();
  const int arrow = v.arrows().back();
  const auto inner = symbolic_vector(fq, data, u);
  const auto& src = data.basis[static_cast<std::size_t>(inner.vertex)];
  out.entries.assign(data.basis[static_cast<std::size_t>(out.vertex)].size(), ChartPoly());
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (inner.entries[k].is_zero()) continue;
    const auto col = column_of(fq, data, src[k].then(arrow));
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (!col[r].is_zero()) out.entries[r] += inner.entries[k] * col[r];
    }
  }
  return out;
}

}  // namespace

SymbolicVector symbolic_vector(const FramedQuiver& fq, const Subtree& chart, const PathOrder& order,
                               const Path& v) {
  validate_path(fq, v);
  return symbolic_vector(fq, chart_data(fq, chart, order), v);
}

std::vector<Minor> membership_minors(const FramedQuiver& fq, const Subtree& target_tree, const Subtree& chart,
                                     const PathOrder& order) {
  if (target_tree.dim_vector(fq) != chart.dim_vector(fq)) {
    throw std::invalid_argument("target and chart trees have different dimension vectors");
  }
  const auto data = chart_data(fq, chart, order);
  std::vector<Minor> out;
  for (const auto& e : critical_set(fq, target_tree, order).elements) {
    const int t = target(fq, e.path);
    const auto rows = static_cast<int>(data.basis[static_cast<std::size_t>(t)].size());
    const int cols = e.k + 1;
    if (cols > rows) continue;
    std::vector<SymbolicVector> columns;
    for (const auto& u : target_tree.slice(fq, order, t)) {
      if (order.less(u, e.path)) columns.push_back(symbolic_vector(fq, data, u));
    }
    columns.push_back(symbolic_vector(fq, data, e.path));
    // Row subsets of size `cols` in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(cols));
    for (int k = 0; k < cols; ++k) pick[static_cast<std::size_t>(k)] = k;
    while (true) {
      PolynomialMatrix m(cols, cols);
      for (int r = 0; r < cols; ++r)
        for (int c = 0; c < cols; ++c)
          m(r, c) = columns[static_cast<std::size_t>(c)].entries[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])];
      out.push_back({e.path, pick, bareiss_determinant(m)});
      int k = cols - 1;
      while (k >= 0 && pick[static_cast<std::size_t>(k)] == rows - cols + k) --k;
      if (k < 0) break;
      ++pick[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < cols; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::optional<int> multiplicity_power(const FramedQuiver& fq, const Subtree& target_tree, const Subtree& chart,
                                      const PathOrder& order) {
  const auto coords = chart_coordinates(fq, chart, order);
  std::set<int> transversal;  // c_{u,v} with u > v
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (order.less(coords[k].v, coords[k].u)) transversal.insert(static_cast<int>(k));
  }
  std::vector<ChartPoly> minors;
  for (auto& m : membership_minors(fq, target_tree, chart, order)) {
    if (!m.value.is_zero()) minors.push_back(std::move(m.value));
  }
  for (const auto& p : minors) {
    ChartPoly at_zero = p;
    for (int c : transversal) at_zero = at_zero.drop(c);
    if (!at_zero.is_zero()) return 0;
  }

  std::set<int> remaining = transversal;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& p : minors) {
      for (int c : remaining) {
        if (p.degree_in(c) != 1) continue;
        const ChartPoly rest = p.drop(c);
        const ChartPoly slope = (p - rest).divide_exact(ChartPoly::variable(c));
        if (!slope.is_constant()) continue;
        const ChartPoly solution = (-rest).divide_exact(slope);
        std::vector<ChartPoly> next;
        for (const auto& q : minors) {
          ChartPoly s = q.substitute(c, solution);
          if (!s.is_zero()) next.push_back(std::move(s));
        }
        minors = std::move(next);
        remaining.erase(c);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  if (remaining.empty()) return minors.empty() ? std::optional<int>(1) : std::nullopt;
  if (remaining.size() != 1 || minors.empty()) return std::nullopt;
  const int c = *remaining.begin();
  int best = -1;
  for (const auto& p : minors) {
    const int k = p.order_in(c);
    best = best < 0 ? k : std::min(best, k);
  }
  return best;
}

}  // namespace coha
