#include "coha/cells.hpp"
#include "coha/errors.hpp"
#include "coha/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace coha;

namespace {

Subtree tree(const FramedQuiver& fq, const char* text) { return parse_tree(fq, text); }

std::vector<std::string> names(const FramedQuiver& fq, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(format_path(fq, p));
  return out;
}

std::vector<std::string> critical_names(const FramedQuiver& fq, const CriticalSet& c) {
  std::vector<std::string> out;
  for (const auto& e : c.elements) out.push_back(format_path(fq, e.path));
  return out;
}

/// Critical set straight from the definition, sorted with a hand-written shortlex key.
std::vector<Path> critical_oracle(const FramedQuiver& fq, const Subtree& s) {
  std::vector<Path> out;
  for (const auto& p : paths_up_to(fq, static_cast<std::size_t>(s.size()) + 1)) {
    if (!p.is_root() && !s.contains(p) && s.contains(p.parent())) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows() < b.arrows();
  });
  return out;
}

/// All lower-closed subsets with dimension vector d, by brute force over subsets of short paths.
std::set<std::vector<Path>> trees_oracle(const FramedQuiver& fq, const DimVector& d) {
  std::vector<Path> pool;
  for (const auto& p : paths_up_to(fq, static_cast<std::size_t>(d.total()))) {
    if (!p.is_root()) pool.push_back(p);
  }
  std::set<std::vector<Path>> out;
  const int n = static_cast<int>(pool.size());
  REQUIRE(n <= 22);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d.total()) continue;
    std::vector<Path> chosen;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) chosen.push_back(pool[static_cast<std::size_t>(k)]);
    bool closed = true;
    std::vector<int> counts(d.size(), 0);
    for (const auto& p : chosen) {
      ++counts[static_cast<std::size_t>(target(fq, p))];
      if (p.length() > 1 && std::find(chosen.begin(), chosen.end(), p.parent()) == chosen.end()) closed = false;
    }
    if (closed && counts == d.entries()) {
      std::sort(chosen.begin(), chosen.end());
      out.insert(chosen);
    }
  }
  return out;
}

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

NumericRep jordan(const FramedQuiver& fq) {
  NumericRep m = NumericRep::zero(fq, DimVector{3});
  m.arrows[1](1, 0) = 1;
  m.arrows[1](2, 1) = 1;
  m.framing[0] = vec({1, 0, 0});
  return m;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("subtrees") {
  const auto fq = fixtures::loop_quiver(2, 1);
  const auto s = tree(fq, "f,af,baf");
  CHECK(s.size() == 3);
  CHECK(s.dim_vector(fq) == DimVector{3});
  CHECK(format_tree(fq, s, PathOrder::shortlex()) == "f,af,baf");
  CHECK(format_tree(fq, Subtree(), PathOrder::shortlex()) == "*");
  CHECK_THROWS_AS(tree(fq, "f,baf"), std::invalid_argument);
  CHECK(tree(fq, "*, f") == tree(fq, "f"));
}

TEST_CASE("critical sets") {
  const auto fq = fixtures::loop_quiver(2, 1);
  const auto shortlex = PathOrder::shortlex();

  const auto c3 = critical_set(fq, tree(fq, "f,af,baf"), shortlex);
  CHECK(critical_names(fq, c3) == std::vector<std::string>{"bf", "aaf", "abaf", "bbaf"});
  CHECK(c3.elements[0].k == 2);
  CHECK(c3.elements[1].k == 2);
  CHECK(c3.elements[2].k == 3);
  CHECK(c3.dim == 10);

  const auto c4 = critical_set(fq, tree(fq, "f,bf,abf"), shortlex);
  CHECK(critical_names(fq, c4) == std::vector<std::string>{"af", "bbf", "aabf", "babf"});

  const auto root = critical_set(fq, Subtree(), shortlex);
  REQUIRE(root.elements.size() == 1);
  CHECK(format_path(fq, root.elements[0].path) == "f");
  CHECK(root.elements[0].k == 0);
  CHECK(root.dim == 0);

  CHECK(cell_dim(fq, tree(fq, "f,af,bf"), shortlex) == 12);
  CHECK(cell_dim(fq, tree(fq, "f,bf,bbf"), shortlex) == 9);
  CHECK(cell_dim(fq, Subtree(), shortlex) == 0);
}

TEST_CASE("worked examples on larger trees") {
  const auto w2 = fixtures::loop_quiver(2, 2);
  CHECK(cell_dim(w2, tree(w2, "e,f,bf"), PathOrder::shortlex()) == 12);
  CHECK(cell_dim(w2, tree(w2, "e,ae,be"), PathOrder::shortlex()) == 13);
  CHECK(compare_trees(tree(w2, "e,f,bf"), tree(w2, "e,ae,be"), PathOrder::shortlex()) < 0);

  const auto fq = fixtures::loop_quiver(2, 1);
  const auto s = tree(fq, "f,af,bf,bbf");
  const auto s2 = tree(fq, "f,bf,abf,bbf");
  CHECK(critical_names(fq, critical_set(fq, s, PathOrder::shortlex())) ==
        std::vector<std::string>{"aaf", "baf", "abf", "abbf", "bbbf"});
  CHECK(critical_names(fq, critical_set(fq, s2, PathOrder::shortlex())) ==
        std::vector<std::string>{"af", "aabf", "babf", "abbf", "bbbf"});
  CHECK(cell_dim(fq, s, PathOrder::shortlex()) == 17);
  CHECK(cell_dim(fq, s2, PathOrder::shortlex()) == 17);
}

TEST_CASE("enumerate trees") {
  const auto fq = fixtures::loop_quiver(2, 1);
  std::vector<std::string> shortlex;
  for (const auto& s : enumerate_trees(fq, DimVector{3}, PathOrder::shortlex()))
    shortlex.push_back(format_tree(fq, s, PathOrder::shortlex()));
  CHECK(shortlex == std::vector<std::string>{"f,af,bf", "f,af,aaf", "f,af,baf", "f,bf,abf", "f,bf,bbf"});

  std::vector<std::string> lex;
  for (const auto& s : enumerate_trees(fq, DimVector{3}, PathOrder::lex())) lex.push_back(format_tree(fq, s, PathOrder::lex()));
  CHECK(lex == std::vector<std::string>{"f,af,aaf", "f,af,baf", "f,af,bf", "f,bf,abf", "f,bf,bbf"});

  CHECK(enumerate_trees(fixtures::vertex_only(1), DimVector{2}, PathOrder::shortlex()).empty());
  CHECK(enumerate_trees(fq, DimVector{0}, PathOrder::shortlex()).size() == 1);
}

TEST_CASE("property: enumeration matches brute force and the critical-set invariants") {
  struct Case {
    FramedQuiver fq;
    DimVector d;
  };
  const std::vector<Case> cases = {
      {fixtures::loop_quiver(2, 1), DimVector{3}}, {fixtures::loop_quiver(2, 1), DimVector{4}},
      {fixtures::loop_quiver(1, 2), DimVector{3}}, {fixtures::loop_quiver(3, 1), DimVector{3}},
      {fixtures::vertex_only(4), DimVector{2}},    {fixtures::a2(2, 0), DimVector{2, 2}},
      {fixtures::a2(1, 1), DimVector{1, 2}},       {fixtures::loop_quiver(2, 2), DimVector{3}},
  };
  std::vector<Rational> weights;
  for (const auto& c : cases) {
    const auto oracle = trees_oracle(c.fq, c.d);
    weights.assign(c.fq.arrows().size(), Rational(1));
    weights.back() = Rational(5, 2);
    for (const auto& order : {PathOrder::shortlex(), PathOrder::lex(), PathOrder::weighted_shortlex(weights)}) {
      const auto trees = enumerate_trees(c.fq, c.d, order);
      CHECK(trees.size() == oracle.size());
      std::multiset<int> dims;
      int top = -1;
      for (std::size_t k = 0; k < trees.size(); ++k) {
        std::vector<Path> members;
        for (const auto& p : trees[k].paths())
          if (!p.is_root()) members.push_back(p);
        CHECK(oracle.count(members) == 1);
        if (k > 0) CHECK(compare_trees(trees[k - 1], trees[k], order) < 0);
        const auto crit = critical_set(c.fq, trees[k], order);
        CHECK(crit.dim_vector(c.fq).entries() == critical_dim_vector(c.fq, c.d));
        for (const auto& e : crit.elements) CHECK(e.k <= c.d[static_cast<std::size_t>(target(c.fq, e.path))]);
        dims.insert(crit.dim);
        top = std::max(top, crit.dim);
        if (order.kind() == OrderKind::shortlex) CHECK(names(c.fq, [&] {
                                                   std::vector<Path> v;
                                                   for (const auto& e : crit.elements) v.push_back(e.path);
                                                   return v;
                                                 }()) == names(c.fq, critical_oracle(c.fq, trees[k])));
      }
      if (!trees.empty()) CHECK(top == hilb_dim(c.fq, c.d));
      static std::multiset<int> reference;
      if (order.kind() == OrderKind::shortlex) reference = dims;
      else CHECK(dims == reference);
    }
  }
}

TEST_CASE("classify examples") {
  const auto fq = fixtures::loop_quiver(2, 1);
  const auto shortlex = PathOrder::shortlex();
  const auto m = jordan(fq);
  CHECK(format_tree(fq, classify(fq, m, shortlex), shortlex) == "f,bf,bbf");
  // Oracle: the greedy spans by hand. m_f = e1, m_af = 0, m_bf = e2, m_bbf = e3.
  CHECK(path_vector(fq, m, parse_path(fq, "af")) == vec({0, 0, 0}));
  CHECK(path_vector(fq, m, parse_path(fq, "bbf")) == vec({0, 0, 1}));
  CHECK(z_conditions_hold(fq, m, tree(fq, "f,bf,bbf"), shortlex));

  NumericRep one = NumericRep::zero(fq, DimVector{1});
  one.framing[0] = vec({3});
  CHECK(format_tree(fq, classify(fq, one, shortlex), shortlex) == "f");

  NumericRep unstable = NumericRep::zero(fq, DimVector{2});
  unstable.framing[0] = vec({1, 0});
  CHECK_THROWS_AS(classify(fq, unstable, shortlex), DomainError);
  CHECK_THROWS_AS(classify(fq, m, PathOrder::lex()), std::invalid_argument);

  std::mt19937_64 rng(17);
  int generic = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = random_stable_rep(fq, DimVector{3}, rng);
    std::vector<Path> top = tree(fq, "f,af,bf").sorted(shortlex);
    RationalMatrix cols(3, 3);
    for (int k = 0; k < 3; ++k) cols.col(k) = path_vector(fq, r, top[static_cast<std::size_t>(k)]);
    const bool independent = rank(cols) == 3;
    const bool lands_on_top = classify(fq, r, shortlex) == tree(fq, "f,af,bf");
    CHECK(independent == lands_on_top);
    generic += independent;
  }
  CHECK(generic > 20);
}

TEST_CASE("degeneracy loci") {
  const auto fq = fixtures::loop_quiver(2, 1);
  const auto shortlex = PathOrder::shortlex();
  const auto m = jordan(fq);
  // Every critical path of (f,af,bf) has k = 3 = d, so the locus is everything.
  CHECK(in_degeneracy_locus(fq, m, tree(fq, "f,af,bf"), shortlex));
  // (f,bf,bbf): v = af needs {m_f, m_af} = {e1, 0} dependent, which holds;
  // v = abf needs {m_f, m_bf, m_abf} = {e1, e2, 0} dependent, which holds.
  CHECK(in_degeneracy_locus(fq, m, tree(fq, "f,bf,bbf"), shortlex));
  // (f,af,aaf): v = bf needs {m_f, m_af, m_bf} = {e1, 0, e2} dependent: yes;
  // v = baf needs {m_f, m_af, m_aaf, m_baf}: four vectors, yes. All hold.
  CHECK(in_degeneracy_locus(fq, m, tree(fq, "f,af,aaf"), shortlex));

  NumericRep shifted = m;
  shifted.arrows[0] = shifted.arrows[1];  // A = B
  // (f,bf,bbf): v = af gives {e1, e2}, independent.
  CHECK_FALSE(in_degeneracy_locus(fq, shifted, tree(fq, "f,bf,bbf"), shortlex));

  NumericRep zero = NumericRep::zero(fq, DimVector{0});
  CHECK(in_degeneracy_locus(fq, zero, Subtree(), shortlex));
}

TEST_CASE("chart representations land in their cell") {
  const auto fq = fixtures::loop_quiver(2, 1);
  const auto shortlex = PathOrder::shortlex();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-5, 5);
  for (const auto& s : enumerate_trees(fq, DimVector{3}, shortlex)) {
    const auto coords = chart_coordinates(fq, s, shortlex);
    CHECK(static_cast<int>(coords.size()) == hilb_dim(fq, DimVector{3}));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> values;
      for (const auto& c : coords) values.emplace_back(shortlex.less(c.v, c.u) ? 0 : num(rng));
      const auto m = rep_from_chart(fq, s, shortlex, values);
      CHECK(z_conditions_hold(fq, m, s, shortlex));
      CHECK(in_degeneracy_locus(fq, m, s, shortlex));
      CHECK(classify(fq, m, shortlex) == s);
    }
  }
}

TEST_CASE("property: random reps land in exactly one cell") {
  struct Case {
    FramedQuiver fq;
    DimVector d;
  };
  const std::vector<Case> cases = {{fixtures::loop_quiver(2, 1), DimVector{3}},
                                   {fixtures::vertex_only(4), DimVector{2}},
                                   {fixtures::a2(2, 0), DimVector{2, 1}}};
  std::mt19937_64 rng(29);
  for (const auto& c : cases) {
    std::vector<Rational> weights(c.fq.arrows().size(), Rational(1));
    weights.front() = 3;
    for (const auto& order : {PathOrder::shortlex(), PathOrder::weighted_shortlex(weights)}) {
      const auto trees = enumerate_trees(c.fq, c.d, order);
      for (int trial = 0; trial < 100; ++trial) {
        auto m = random_stable_rep(c.fq, c.d, rng);
        if (trial % 3 == 0) {
          // Push toward lower cells: zero out one arrow matrix.
          if (!m.arrows.empty()) m.arrows[static_cast<std::size_t>(trial) % m.arrows.size()].setZero();
          if (!is_stable(c.fq, m)) continue;
        }
        const auto s = classify(c.fq, m, order);
        CHECK(z_conditions_hold(c.fq, m, s, order));
        int hits = 0;
        for (const auto& t : trees) {
          if (z_conditions_hold(c.fq, m, t, order)) ++hits;
          if (in_degeneracy_locus(c.fq, m, t, order)) CHECK(compare_trees(s, t, order) >= 0);
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("representation files") {
  const auto fq = parse_quiver_file(read(std::string(COHA_TEST_DATA) + "/twoloop.q"));
  const auto m = parse_rep_file(fq, read(std::string(COHA_TEST_DATA) + "/jordan.rep"));
  CHECK(format_tree(fq, classify(fq, m, PathOrder::shortlex()), PathOrder::shortlex()) == "f,bf,bbf");
  const auto again = parse_rep_file(fq, serialize_rep(fq, m));
  CHECK(again.arrows[1] == m.arrows[1]);
  CHECK(again.framing[0] == m.framing[0]);

  CHECK_THROWS_AS(parse_rep_file(fq, "rep 2\nmatrix c\n1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_rep_file(fq, "rep 2\nmatrix a\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_rep_file(fq, "rep 2\nframing 0 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_rep_file(fq, "rep 2\nmatrix a\n1 x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_rep_file(fq, "matrix a\n"), ParseError);
  const auto half = parse_rep_file(fq, "rep 2\nmatrix a\n0 0\n1/2 0\nframing 0 1\n1 0\n");
  CHECK(half.arrows[0](1, 0) == Rational(1, 2));
  CHECK(half.arrows[1].isZero());
}
