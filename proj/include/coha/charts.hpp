#pragma once

#include "coha/cells.hpp"
#include "coha/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coha {

/// Polynomial in the chart coordinates of U_S; variable k is chart_coordinates(...)[k].
using ChartPoly = Polynomial;

/// Coordinates of m_v in the basis {m_u : u ∈ S_{t(v)}}, ascending.
struct SymbolicVector {
  int vertex = 0;
  std::vector<ChartPoly> entries;
};

/// `c21` style names (basis index, then critical index) on one-vertex quivers
/// with small indices, `c(u;v)` otherwise.
std::vector<std::string> coordinate_names(const FramedQuiver& fq, const Subtree& chart, const PathOrder& order);

SymbolicVector symbolic_vector(const FramedQuiver& fq, const Subtree& chart, const PathOrder& order,
                               const Path& v);

struct Minor {
  Path v;                 ///< critical path of the target tree
  std::vector<int> rows;  ///< 0-based rows of the d_i × (k_v+1) matrix
  ChartPoly value;
};

/// For each v ∈ C(target), the maximal minors of the matrix with columns
/// symbolic_vector(chart, u), u ∈ {u ∈ target_{t(v)} : u < v} ∪ {v}.
/// Their common zero set in U_chart is D_target ∩ U_chart.
std::vector<Minor> membership_minors(const FramedQuiver& fq, const Subtree& target, const Subtree& chart,
                                     const PathOrder& order);

/// Order of the membership ideal along Z_chart when it reduces to a single
/// coordinate power. The coordinates c_{u,v} with u > v cut out Z_chart in
/// U_chart. Minors that are linear in one of them with a constant coefficient
/// are solved and substituted until none is left. With one coordinate c
/// remaining, the answer is the least power of c dividing a remaining minor;
/// with none remaining it is 1. Returns 0 when Z_chart is not contained in
/// D_target, and nothing when the elimination does not reach a single
/// coordinate.
std::optional<int> multiplicity_power(const FramedQuiver& fq, const Subtree& target, const Subtree& chart,
                                      const PathOrder& order);

}  // namespace coha
