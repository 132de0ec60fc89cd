#include "coha/partitions.hpp"

#include "coha/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>

namespace coha {

MultiPartition::MultiPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] < 0) throw std::invalid_argument("partition parts are non-negative");
      if (k > 0 && b[k] > b[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

MultiPartition MultiPartition::zero(const DimVector& d) {
  std::vector<std::vector<int>> blocks;
  for (int di : d.entries()) blocks.emplace_back(static_cast<std::size_t>(di), 0);
  return MultiPartition(std::move(blocks));
}

DimVector MultiPartition::shape() const {
  std::vector<int> d;
  for (const auto& b : blocks_) d.push_back(static_cast<int>(b.size()));
  return DimVector(std::move(d));
}

int MultiPartition::size() const {
  int total = 0;
  for (const auto& b : blocks_) {
    for (int x : b) total += x;
  }
  return total;
}

std::string format_partition(const MultiPartition& lambda) {
  std::string out;
  for (const auto& b : lambda.blocks()) {
    out += '[';
    bool first = true;
    for (int x : b) {
      if (x == 0) break;
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += ']';
  }
  return out;
}

MultiPartition parse_partition(std::string_view text, const DimVector* d) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '[' && text[i] != '(') throw std::invalid_argument("partition groups are written [a,b,...]");
    const char close = text[i] == '[' ? ']' : ')';
    ++i;
    std::vector<int> block;
    std::string number;
    for (; i < text.size() && text[i] != close; ++i) {
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        number += c;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!number.empty()) block.push_back(std::stoi(number));
        number.clear();
      } else {
        throw std::invalid_argument("unexpected character in partition '" + std::string(text) + "'");
      }
    }
    if (i == text.size()) throw std::invalid_argument("unterminated partition group");
    if (!number.empty()) block.push_back(std::stoi(number));
    ++i;
    blocks.push_back(std::move(block));
    skip_space();
  }
  if (d != nullptr) {
    if (blocks.empty() && d->is_zero()) blocks.resize(d->size());
    if (blocks.size() != d->size()) throw std::invalid_argument("need one bracket group per vertex");
    for (std::size_t v = 0; v < blocks.size(); ++v) {
      const auto di = static_cast<std::size_t>((*d)[v]);
      while (blocks[v].size() > di && blocks[v].back() == 0) blocks[v].pop_back();
      if (blocks[v].size() > di) throw std::invalid_argument("partition has more parts than the dimension allows");
      blocks[v].resize(di, 0);
    }
  }
  return MultiPartition(std::move(blocks));
}

namespace {

void check_shape(const DimVector& d, const MultiPartition& lambda) {
  if (lambda.shape() != d) throw std::invalid_argument("multipartition shape does not match the dimension vector");
}

}  // namespace

bool satisfies_phi(const FramedQuiver& fq, const DimVector& d, const MultiPartition& lambda) {
  check_shape(d, lambda);
  for (const auto& beta : dim_vectors_below(d)) {
    if (beta == d) continue;
    const auto c = critical_dim_vector(fq, beta);
    bool witnessed = false;
    for (std::size_t i = 0; i < d.size() && !witnessed; ++i) {
      if (beta[i] < d[i] && lambda.part(i, d[i] - beta[i]) < c[i]) witnessed = true;
    }
    if (!witnessed) return false;
  }
  return true;
}

MultiPartition tree_to_partition(const FramedQuiver& fq, const Subtree& s, const PathOrder& order) {
  const auto crit = critical_set(fq, s, order);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < fq.vertex_count(); ++i) {
    const auto members = s.slice(fq, order, i);
    const auto critical = crit.slice(fq, i);
    const std::size_t di = members.size();
    std::vector<int> block(di, 0);
    for (std::size_t k = 0; k < di; ++k) {
      int count = 0;
      for (const auto& v : critical) {
        if (order.less(v, members[k])) ++count;
      }
      block[di - 1 - k] = count;  // λ_{d_i−k} counts critical paths below u_{k+1}
    }
    blocks.push_back(std::move(block));
  }
  return MultiPartition(std::move(blocks));
}

Subtree partition_to_tree(const FramedQuiver& fq, const MultiPartition& lambda, const PathOrder& order) {
  const DimVector d = lambda.shape();
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw std::invalid_argument("multipartition has the wrong number of vertices");
  }
  if (!satisfies_phi(fq, d, lambda)) throw DomainError("not in S(d): condition (Phi) fails");
  Subtree s;
  while (s.size() < d.total()) {
    const DimVector beta = s.dim_vector(fq);
    const auto c = critical_dim_vector(fq, beta);
    const auto crit = critical_set(fq, s, order);
    std::optional<Path> best;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (beta[i] >= d[i]) continue;  // m^{(i)} = λ_0 = ∞
      const int m = lambda.part(i, d[i] - beta[i]);
      if (m >= c[i]) continue;
      const auto slice = crit.slice(fq, static_cast<int>(i));
      const Path& v = slice.at(static_cast<std::size_t>(m));
      if (!best || order.less(v, *best)) best = v;
    }
    if (!best) throw DomainError("not in S(d): the construction stalls");
    s = s.with(*best);
  }
  return s;
}

std::strong_ordering compare_partitions(const MultiPartition& lambda, const MultiPartition& mu) {
  if (lambda.shape() != mu.shape()) throw std::invalid_argument("multipartition shapes differ");
  if (lambda.blocks().size() != 1) {
    throw std::invalid_argument("the intrinsic partition order is defined for one vertex; use the induced order");
  }
  const auto& a = lambda.block(0);
  const auto& b = mu.block(0);
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_partitions_induced(const FramedQuiver& fq, const MultiPartition& lambda,
                                                const MultiPartition& mu, const PathOrder& order) {
  return compare_trees(partition_to_tree(fq, lambda, order), partition_to_tree(fq, mu, order), order);
}

std::vector<MultiPartition> enumerate_partitions(const FramedQuiver& fq, const DimVector& d,
                                                 const PathOrder& order) {
  if (static_cast<int>(d.size()) != fq.vertex_count()) {
    throw std::invalid_argument("dimension vector length does not match the quiver");
  }
  const auto c = critical_dim_vector(fq, d);
  const std::size_t n = d.size();

  // Weakly decreasing blocks of length d_i with entries in [0, bound_i].
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int bound = std::max(0, c[i]);
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int cap) {
      if (static_cast<int>(cur.size()) == d[i]) {
        choices[i].push_back(cur);
        return;
      }
      for (int x = 0; x <= cap; ++x) {
        cur.push_back(x);
        grow(x);
        cur.pop_back();
      }
    };
    grow(bound);
  }

  std::vector<MultiPartition> out;
  std::vector<std::vector<int>> blocks(n);
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == n) {
      MultiPartition lambda(blocks);
      if (satisfies_phi(fq, d, lambda)) out.push_back(std::move(lambda));
      return;
    }
    for (const auto& b : choices[i]) {
      blocks[i] = b;
      combine(i + 1);
    }
  };
  combine(0);

  if (n == 1) {
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_partitions(a, b) < 0; });
  } else {
    std::vector<std::pair<std::vector<Path>, MultiPartition>> keyed;
    for (auto& lambda : out) keyed.emplace_back(partition_to_tree(fq, lambda, order).sorted(order), std::move(lambda));
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      const std::size_t m = std::min(a.first.size(), b.first.size());
      for (std::size_t k = 0; k < m; ++k) {
        if (auto r = order.compare(a.first[k], b.first[k]); r != 0) return r < 0;
      }
      return a.first.size() < b.first.size();
    });
    out.clear();
    for (auto& [key, lambda] : keyed) out.push_back(std::move(lambda));
  }
  return out;
}

int partition_cell_dim(const FramedQuiver& fq, const DimVector& d, const MultiPartition& lambda) {
  check_shape(d, lambda);
  return hilb_dim(fq, d) - lambda.size();
}

}  // namespace coha
