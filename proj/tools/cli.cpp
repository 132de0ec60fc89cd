#include "cli.hpp"

#include "coha/cells.hpp"
#include "coha/charts.hpp"
#include "coha/coha.hpp"
#include "coha/errors.hpp"
#include "coha/partitions.hpp"
#include "coha/poly_parse.hpp"
#include "coha/selfcheck.hpp"
#include "coha/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace coha::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string quiver_file;
  std::string dim;
  std::string order = "shortlex";
  std::string weights;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;

  std::string tree;
  std::string partition;
  std::string target;
  std::string chart;
  std::string rep_file;
  std::string left;
  std::string right;
  int max_degree = -1;
  bool betti = false;
  bool multiplicity = false;
};

/// Bad flags or unreadable input; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FramedQuiver load_quiver(const Options& o) {
  if (o.quiver_file.empty()) throw UsageError("--quiver is required");
  return parse_quiver_file(read_file(o.quiver_file));
}

DimVector load_dim(const Options& o, const FramedQuiver& fq) {
  if (o.dim.empty()) throw UsageError("--dim is required");
  DimVector d = parse_dim(o.dim);
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw UsageError("--dim needs " + std::to_string(fq.vertex_count()) + " entries");
  }
  return d;
}

PathOrder load_order(const Options& o, const FramedQuiver& fq) { return parse_order(fq, o.order, o.weights); }

void trees_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto d = load_dim(o, fq);
  const auto order = load_order(o, fq);
  for (const auto& s : enumerate_trees(fq, d, order)) {
    const auto tree = format_tree(fq, s, order);
    const int dim = cell_dim(fq, s, order);
    const auto partition = format_partition(tree_to_partition(fq, s, order));
    if (o.json) {
      out << json{{"tree", tree}, {"dim", dim}, {"partition", partition}}.dump() << "\n";
    } else {
      out << tree << " dim=" << dim << " partition=" << partition << "\n";
    }
  }
}

void partitions_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto d = load_dim(o, fq);
  const auto order = load_order(o, fq);
  if (fq.vertex_count() > 1 && !o.json) out << "# induced order: " << order_name(order.kind()) << "\n";
  for (const auto& lambda : enumerate_partitions(fq, d, order)) {
    const auto partition = format_partition(lambda);
    const int dim = partition_cell_dim(fq, d, lambda);
    if (o.json) {
      out << json{{"partition", partition}, {"dim", dim}}.dump() << "\n";
    } else {
      out << partition << " dim=" << dim << "\n";
    }
  }
}

/// Without --dim, a one-vertex partition is padded to the smallest length at
/// which it satisfies (Phi).
MultiPartition resolve_partition(const Options& o, const FramedQuiver& fq) {
  if (!o.dim.empty()) {
    const auto d = load_dim(o, fq);
    return parse_partition(o.partition, &d);
  }
  MultiPartition given = parse_partition(o.partition);
  if (given.blocks().size() != static_cast<std::size_t>(fq.vertex_count())) {
    throw UsageError("--partition needs one bracket group per vertex");
  }
  DimVector d = given.shape();
  if (fq.vertex_count() == 1) {
    for (int extra = 0; extra <= given.size() + 1; ++extra) {
      const DimVector padded{d[0] + extra};
      auto lambda = parse_partition(o.partition, &padded);
      if (satisfies_phi(fq, padded, lambda)) return lambda;
    }
  }
  return parse_partition(o.partition, &d);
}

void bijection_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto order = load_order(o, fq);
  if (o.tree.empty() == o.partition.empty()) throw UsageError("give exactly one of --tree and --partition");
  if (!o.tree.empty()) {
    const auto s = parse_tree(fq, o.tree);
    const auto lambda = format_partition(tree_to_partition(fq, s, order));
    if (o.json) out << json{{"tree", format_tree(fq, s, order)}, {"partition", lambda}}.dump() << "\n";
    else out << lambda << "\n";
  } else {
    const auto lambda = resolve_partition(o, fq);
    const auto tree = format_tree(fq, partition_to_tree(fq, lambda, order), order);
    if (o.json) out << json{{"tree", tree}, {"partition", format_partition(lambda)}}.dump() << "\n";
    else out << tree << "\n";
  }
}

void series_cmd(const Options& o, std::ostream& out, bool betti) {
  const auto fq = load_quiver(o);
  const auto d = load_dim(o, fq);
  if (betti) {
    const auto ranks = betti_numbers(fq, d);
    if (o.json) {
      for (const auto& [deg, rank] : ranks) out << json{{"degree", deg}, {"coeff", to_string(rank)}}.dump() << "\n";
      return;
    }
    std::string line;
    for (const auto& [deg, rank] : ranks) line += (line.empty() ? "" : " ") + std::to_string(deg) + ":" + to_string(rank);
    out << line << "\n";
    return;
  }
  const auto series = motivic_class(fq, d);
  if (o.json) {
    for (auto it = series.terms().rbegin(); it != series.terms().rend(); ++it) {
      out << json{{"degree", it->first}, {"coeff", to_string(it->second)}}.dump() << "\n";
    }
    return;
  }
  out << to_string(series) << "\n";
}

void shuffle_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  if (o.left.empty() || o.right.empty()) throw UsageError("--left and --right are required");
  const auto f = parse_element(o.left);
  const auto g = parse_element(o.right);
  if (static_cast<int>(f.dim().size()) != fq.vertex_count() || static_cast<int>(g.dim().size()) != fq.vertex_count()) {
    throw UsageError("element dimension vectors must have one entry per vertex");
  }
  const auto h = shuffle_product(fq, f, g);
  if (o.json) {
    out << json{{"dim", format_dim(h.dim())}, {"degree", h.degree()}, {"coeff", to_string(h)}}.dump() << "\n";
  } else {
    out << "d=" << format_dim(h.dim()) << ":" << to_string(h) << "\n";
  }
}

void verify_basis_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto d = load_dim(o, fq);
  int top = o.max_degree;
  if (top < 0) top = std::max(0, hilb_dim(fq, d)) + 1;
  bool all = true;
  if (!o.json) out << "degree h_dim kernel quotient partitions independent\n";
  for (int n = 0; n <= top; ++n) {
    const auto r = verify_basis(fq, d, n);
    all = all && r.independent;
    if (o.json) {
      out << json{{"degree", n},          {"h_dim", r.h_dim},
                  {"kernel_dim", r.kernel_dim}, {"quotient_dim", r.quotient_dim},
                  {"partition_count", r.partition_count}, {"independent", r.independent}}
                 .dump()
          << "\n";
    } else {
      out << n << " " << r.h_dim << " " << r.kernel_dim << " " << r.quotient_dim << " " << r.partition_count << " "
          << (r.independent ? "yes" : "no") << "\n";
    }
  }
  if (!all) throw DomainError("tautological monomials do not form a basis in some degree");
}

void charts_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto order = load_order(o, fq);
  if (o.target.empty() || o.chart.empty()) throw UsageError("--target and --chart are required");
  const auto target_tree = parse_tree(fq, o.target);
  const auto chart = parse_tree(fq, o.chart);
  const auto names = coordinate_names(fq, chart, order);
  const auto coords = chart_coordinates(fq, chart, order);
  auto name_of = [&](int k) { return names[static_cast<std::size_t>(k)]; };
  if (!o.json) {
    out << "chart " << format_tree(fq, chart, order) << " coordinates:";
    for (std::size_t k = 0; k < coords.size(); ++k) {
      out << " " << names[k] << "=(" << format_path(fq, coords[k].u) << "," << format_path(fq, coords[k].v) << ")";
    }
    out << "\n";
  }
  for (const auto& m : membership_minors(fq, target_tree, chart, order)) {
    if (m.value.is_zero()) continue;
    std::string rows;
    for (int r : m.rows) rows += (rows.empty() ? "" : ",") + std::to_string(r);
    const auto value = to_string(m.value, name_of);
    if (o.json) {
      out << json{{"tree", format_path(fq, m.v)}, {"rows", m.rows}, {"coeff", value}}.dump() << "\n";
    } else {
      out << "v=" << format_path(fq, m.v) << " rows=" << rows << ": " << value << "\n";
    }
  }
  if (o.multiplicity) {
    const auto power = multiplicity_power(fq, target_tree, chart, order);
    if (o.json) {
      out << json{{"multiplicity", power ? json(*power) : json(nullptr)}}.dump() << "\n";
    } else {
      out << "multiplicity: " << (power ? std::to_string(*power) : "indeterminate") << "\n";
    }
  }
}

void classify_cmd(const Options& o, std::ostream& out) {
  const auto fq = load_quiver(o);
  const auto order = load_order(o, fq);
  if (o.rep_file.empty()) throw UsageError("--rep is required");
  const auto m = parse_rep_file(fq, read_file(o.rep_file));
  const auto s = classify(fq, m, order);
  const auto tree = format_tree(fq, s, order);
  const int dim = cell_dim(fq, s, order);
  const auto partition = format_partition(tree_to_partition(fq, s, order));
  if (o.json) {
    out << json{{"tree", tree}, {"dim", dim}, {"partition", partition}}.dump() << "\n";
  } else {
    out << tree << " dim=" << dim << " partition=" << partition << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells, multipartitions, series and shuffle products for framed quivers", "coha-lab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_dim, bool needs_order) {
    sub->add_option("-q,--quiver", o.quiver_file, "quiver file")->required();
    if (needs_dim) sub->add_option("--dim", o.dim, "dimension vector, e.g. 3 or 1,2");
    if (needs_order) {
      sub->add_option("--order", o.order, "shortlex | weighted-shortlex | lex")->capture_default_str();
      sub->add_option("--weights", o.weights, "arrow weights for weighted-shortlex, e.g. a=1,b=2");
    }
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_flag("--json", o.json, "one JSON object per output row");
  };

  std::function<void()> action;
  auto* trees = app.add_subcommand("trees", "list the trees of dimension d in tree order");
  common(trees, true, true);
  trees->callback([&] { action = [&] { trees_cmd(o, out); }; });

  auto* partitions = app.add_subcommand("partitions", "list the multipartitions of S(d)");
  common(partitions, true, true);
  partitions->callback([&] { action = [&] { partitions_cmd(o, out); }; });

  auto* bijection = app.add_subcommand("bijection", "map a tree to its multipartition or back");
  common(bijection, true, true);
  bijection->add_option("--tree", o.tree, "comma-separated paths, e.g. f,af,baf");
  bijection->add_option("--partition", o.partition, "bracket groups, e.g. [2,1]");
  bijection->callback([&] { action = [&] { bijection_cmd(o, out); }; });

  auto* series = app.add_subcommand("series", "motivic class of the moduli space");
  common(series, true, false);
  series->add_flag("--betti", o.betti, "print degree:rank pairs instead");
  series->callback([&] { action = [&] { series_cmd(o, out, o.betti); }; });

  auto* betti = app.add_subcommand("betti", "Betti numbers as degree:rank pairs");
  common(betti, true, false);
  betti->callback([&] { action = [&] { series_cmd(o, out, true); }; });

  auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two CoHA elements");
  common(shuffle, false, false);
  shuffle->add_option("--left", o.left, "element, e.g. d=1:x")->required();
  shuffle->add_option("--right", o.right, "element, e.g. d=1:1")->required();
  shuffle->callback([&] { action = [&] { shuffle_cmd(o, out); }; });

  auto* verify = app.add_subcommand("verify-basis", "check the tautological basis degree by degree");
  common(verify, true, false);
  verify->add_option("--max-degree", o.max_degree, "last degree to check (default: top degree + 1)");
  verify->callback([&] { action = [&] { verify_basis_cmd(o, out); }; });

  auto* charts = app.add_subcommand("charts", "degeneracy minors of a tree in a chart");
  common(charts, false, true);
  charts->add_option("--target", o.target, "tree whose degeneracy locus is cut out")->required();
  charts->add_option("--chart", o.chart, "tree of the chart")->required();
  charts->add_flag("--multiplicity", o.multiplicity, "also extract the multiplicity");
  charts->callback([&] { action = [&] { charts_cmd(o, out); }; });

  auto* classify = app.add_subcommand("classify", "cell of an explicit representation");
  common(classify, false, true);
  classify->add_option("--rep", o.rep_file, "representation file")->required();
  classify->callback([&] { action = [&] { classify_cmd(o, out); }; });

  auto* check = app.add_subcommand("check", "run the built-in property suite");
  check->add_option("--seed", o.seed, "random seed")->capture_default_str();
  bool check_ok = true;
  check->callback([&] { action = [&] { check_ok = run_self_check(out, o.seed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "coha-lab: " << e.what() << "\n";
    return 2;
  }

  try {
    action();
    return check_ok ? 0 : 1;
  } catch (const DomainError& e) {
    err << "coha-lab: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "coha-lab: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "coha-lab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "coha-lab: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coha::cli
