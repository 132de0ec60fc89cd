#include "coha/quiver.hpp"

#include "coha/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coha {

DimVector::DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int x : entries_) {
    if (x < 0) throw std::invalid_argument("dimension vectors are non-negative");
  }
}

DimVector DimVector::unit(std::size_t size, int vertex) {
  DimVector e(size);
  e.entries_.at(static_cast<std::size_t>(vertex)) = 1;
  return e;
}

int DimVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DimVector::fits_in(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("dimension vector length mismatch");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
  return DimVector(std::move(out));
}

DimVector DimVector::operator-(const DimVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("dimension vector length mismatch");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] - other.entries_[i];
  return DimVector(std::move(out));
}

std::vector<DimVector> dim_vectors_below(const DimVector& bound) {
  std::vector<DimVector> out;
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    out.emplace_back(cur);
    auto i = static_cast<std::ptrdiff_t>(cur.size()) - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return out;
    ++cur[static_cast<std::size_t>(i)];
  }
}

std::string format_dim(const DimVector& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

DimVector parse_dim(std::string_view text) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw std::invalid_argument("malformed dimension vector '" + std::string(text) + "'");
    }
    entries.push_back(value);
    start = end + 1;
  }
  return DimVector(std::move(entries));
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_) {
      throw std::invalid_argument("arrow '" + a.name + "': index out of range");
    }
    if (!names.insert(a.name).second) {
      throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
    }
  }
}

int Quiver::arrow_count(int source, int target) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return a.source == source && a.target == target;
  }));
}

FramedQuiver::FramedQuiver(Quiver base, DimVector framing, std::vector<std::string> framing_names)
    : base_(std::move(base)), framing_(std::move(framing)) {
  if (framing_.size() != static_cast<std::size_t>(base_.vertex_count())) {
    throw std::invalid_argument("framing length does not match the vertex count");
  }
  if (!framing_names.empty() && framing_names.size() != static_cast<std::size_t>(framing_.total())) {
    throw std::invalid_argument("framing-names must list one name per framing arrow");
  }
  default_names_ = framing_names.empty();
  std::size_t next = 0;
  for (int i = 0; i < base_.vertex_count(); ++i) {
    for (int copy = 1; copy <= framing_[static_cast<std::size_t>(i)]; ++copy) {
      std::string name = default_names_ ? "g" + std::to_string(i) + "_" + std::to_string(copy)
                                        : framing_names[next++];
      arrows_.push_back({std::move(name), kFramingVertex, i});
    }
  }
  for (const auto& a : base_.arrows()) arrows_.push_back(a);
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.empty() || a.name.find_first_of(".,*^[] \t") != std::string::npos) {
      throw std::invalid_argument("invalid arrow name '" + a.name + "'");
    }
    if (!names.insert(a.name).second) {
      throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
    }
  }
}

int FramedQuiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (d.size() != n || e.size() != n) {
    throw std::invalid_argument("euler_form: dimension vector length mismatch");
  }
  int value = 0;
  for (std::size_t i = 0; i < n; ++i) value += d[i] * e[i];
  for (const auto& a : q.arrows()) {
    value -= d[static_cast<std::size_t>(a.source)] * e[static_cast<std::size_t>(a.target)];
  }
  return value;
}

SignedVector critical_dim_vector(const FramedQuiver& fq, const DimVector& d) {
  const auto n = static_cast<std::size_t>(fq.vertex_count());
  SignedVector c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = fq.framing()[i] - euler_form(fq.base(), d, DimVector::unit(n, static_cast<int>(i)));
  }
  return c;
}

int hilb_dim(const FramedQuiver& fq, const DimVector& d) {
  int wd = 0;
  for (std::size_t i = 0; i < d.size(); ++i) wd += fq.framing()[i] * d[i];
  return wd - euler_form(fq.base(), d, d);
}

namespace {

int parse_index(const std::string& token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

FramedQuiver parse_quiver_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int vertices = -1;
  std::vector<Arrow> arrows;
  std::vector<int> framing;
  bool have_framing = false;
  std::vector<std::string> framing_names;
  std::set<std::string> names;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertices") {
      if (vertices >= 0) throw ParseError(line_no, "duplicate 'vertices' line");
      if (tok.size() != 2) throw ParseError(line_no, "usage: vertices <n>");
      vertices = parse_index(tok[1], line_no);
      if (vertices < 0) throw ParseError(line_no, "negative vertex count");
    } else if (kw == "arrow") {
      if (vertices < 0) throw ParseError(line_no, "'arrow' before 'vertices'");
      if (tok.size() != 4) throw ParseError(line_no, "usage: arrow <name> <src> <tgt>");
      const int s = parse_index(tok[2], line_no);
      const int t = parse_index(tok[3], line_no);
      if (s < 0 || s >= vertices || t < 0 || t >= vertices) {
        throw ParseError(line_no, "index out of range in arrow '" + tok[1] + "'");
      }
      if (!names.insert(tok[1]).second) {
        throw ParseError(line_no, "duplicate arrow name '" + tok[1] + "'");
      }
      arrows.push_back({tok[1], s, t});
    } else if (kw == "framing") {
      if (vertices < 0) throw ParseError(line_no, "'framing' before 'vertices'");
      if (have_framing) throw ParseError(line_no, "duplicate 'framing' line");
      if (tok.size() != static_cast<std::size_t>(vertices) + 1) {
        throw ParseError(line_no, "framing needs one entry per vertex");
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const int w = parse_index(tok[i], line_no);
        if (w < 0) throw ParseError(line_no, "negative framing entry");
        framing.push_back(w);
      }
      have_framing = true;
    } else if (kw == "framing-names") {
      framing_names.assign(tok.begin() + 1, tok.end());
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (vertices < 0) throw ParseError(line_no, "missing 'vertices' line");
  if (!have_framing) throw ParseError(line_no, "missing 'framing' line");
  try {
    return FramedQuiver(Quiver(vertices, std::move(arrows)), DimVector(framing),
                        std::move(framing_names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string serialize_quiver(const FramedQuiver& fq) {
  std::ostringstream out;
  out << "vertices " << fq.vertex_count() << '\n';
  for (const auto& a : fq.base().arrows()) {
    out << "arrow " << a.name << ' ' << a.source << ' ' << a.target << '\n';
  }
  out << "framing";
  for (int w : fq.framing().entries()) out << ' ' << w;
  out << '\n';
  if (!fq.default_framing_names() && fq.framing_arrow_count() > 0) {
    out << "framing-names";
    for (int i = 0; i < fq.framing_arrow_count(); ++i) out << ' ' << fq.arrows()[i].name;
    out << '\n';
  }
  return out.str();
}

}  // namespace coha
