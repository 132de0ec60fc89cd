#include "coha/selfcheck.hpp"

#include "coha/cells.hpp"
#include "coha/coha.hpp"
#include "coha/fixtures.hpp"
#include "coha/partitions.hpp"
#include "coha/series.hpp"

#include <functional>
#include <iomanip>
#include <random>
#include <string>
#include <vector>

namespace coha {

namespace {

struct Case {
  std::string name;
  FramedQuiver fq;
  DimVector d;
};

std::vector<Case> small_cases() {
  using namespace fixtures;
  std::vector<Case> out;
  for (int d = 0; d <= 4; ++d) out.push_back({"2-loop w=1 d=" + std::to_string(d), loop_quiver(2, 1), DimVector{d}});
  for (int d = 0; d <= 3; ++d) out.push_back({"1-loop w=2 d=" + std::to_string(d), loop_quiver(1, 2), DimVector{d}});
  for (int d = 0; d <= 3; ++d) out.push_back({"vertex w=4 d=" + std::to_string(d), vertex_only(4), DimVector{d}});
  for (int d0 = 0; d0 <= 2; ++d0)
    for (int d1 = 0; d1 <= 2; ++d1)
      out.push_back({"A2 w=(2,0) d=(" + std::to_string(d0) + "," + std::to_string(d1) + ")", a2(2, 0), DimVector{d0, d1}});
  return out;
}

bool roundtrips() {
  for (const auto& c : small_cases()) {
    for (const auto& order : {PathOrder::shortlex(), PathOrder::lex()}) {
      const auto trees = enumerate_trees(c.fq, c.d, order);
      const auto parts = enumerate_partitions(c.fq, c.d, order);
      if (trees.size() != parts.size()) return false;
      for (const auto& s : trees) {
        if (partition_to_tree(c.fq, tree_to_partition(c.fq, s, order), order) != s) return false;
      }
      for (const auto& lambda : parts) {
        if (tree_to_partition(c.fq, partition_to_tree(c.fq, lambda, order), order) != lambda) return false;
      }
    }
  }
  return true;
}

bool order_independence() {
  for (const auto& c : small_cases()) {
    const auto direct = motivic_class(c.fq, c.d);
    if (motivic_class_from_trees(c.fq, c.d, PathOrder::shortlex()) != direct) return false;
    if (motivic_class_from_trees(c.fq, c.d, PathOrder::lex()) != direct) return false;
  }
  return true;
}

bool grassmannian_oracle() {
  for (int w = 0; w <= 6; ++w) {
    for (int d = 0; d <= w; ++d) {
      if (motivic_class(fixtures::vertex_only(w), DimVector{d}) != gaussian_binomial(w, d)) return false;
    }
  }
  return true;
}

bool basis_verification() {
  const std::vector<Case> cases = {
      {"vertex w=3 d=2", fixtures::vertex_only(3), DimVector{2}},
      {"1-loop w=2 d=2", fixtures::loop_quiver(1, 2), DimVector{2}},
      {"2-loop w=1 d=2", fixtures::loop_quiver(2, 1), DimVector{2}},
  };
  for (const auto& c : cases) {
    const int top = hilb_dim(c.fq, c.d);
    for (int n = 0; n <= top + 1; ++n) {
      if (!verify_basis(c.fq, c.d, n).independent) return false;
    }
  }
  return true;
}

bool shuffle_associativity(std::mt19937_64& rng) {
  const std::vector<FramedQuiver> quivers = {fixtures::vertex_only(1), fixtures::loop_quiver(1, 1),
                                             fixtures::loop_quiver(2, 1)};
  for (const auto& fq : quivers) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_element(DimVector{1}, 2, rng);
      const auto g = random_element(DimVector{1}, 2, rng);
      const auto h = random_element(DimVector{1}, 2, rng);
      if (shuffle_product(fq, shuffle_product(fq, f, g), h) != shuffle_product(fq, f, shuffle_product(fq, g, h))) {
        return false;
      }
    }
  }
  return true;
}

bool cell_partition(std::mt19937_64& rng) {
  const auto fq = fixtures::loop_quiver(2, 1);
  const DimVector d{3};
  const auto order = PathOrder::shortlex();
  const auto trees = enumerate_trees(fq, d, order);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_stable_rep(fq, d, rng);
    const auto s = classify(fq, m, order);
    int hits = 0;
    for (const auto& t : trees) {
      if (z_conditions_hold(fq, m, t, order)) ++hits;
      if (in_degeneracy_locus(fq, m, t, order) && compare_trees(s, t, order) < 0) return false;
    }
    if (hits != 1 || !z_conditions_hold(fq, m, s, order)) return false;
  }
  return true;
}

}  // namespace

bool run_self_check(std::ostream& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"bijection roundtrip", roundtrips},
      {"series order independence", order_independence},
      {"grassmannian q-binomial", grassmannian_oracle},
      {"tautological basis", basis_verification},
      {"shuffle associativity", [&] { return shuffle_associativity(rng); }},
      {"cell partition", [&] { return cell_partition(rng); }},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      out << "# " << name << ": " << e.what() << "\n";
    }
    all = all && ok;
    out << std::left << std::setw(28) << name << (ok ? "PASS" : "FAIL") << "\n";
  }
  return all;
}

}  // namespace coha
