#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coha::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(COHA_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("trees") {
  const auto r = run({"trees", "-q", data("twoloop.q"), "--dim", "3", "--order", "shortlex"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"f,af,bf dim=12 partition=[]", "f,af,aaf dim=11 partition=[1]",
                                                 "f,af,baf dim=10 partition=[2]", "f,bf,abf dim=10 partition=[1,1]",
                                                 "f,bf,bbf dim=9 partition=[2,1]"});
  const auto lex = run({"trees", "-q", data("twoloop.q"), "--dim", "3", "--order", "lex"});
  CHECK(lines(lex.out).front() == "f,af,aaf dim=12 partition=[]");
}

TEST_CASE("series and betti") {
  const auto r = run({"series", "-q", data("twoloop.q"), "--dim", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "L^12 + L^11 + 2*L^10 + L^9\n");
  CHECK(run({"series", "-q", data("vertex4.q"), "--dim", "2"}).out == "L^4 + L^3 + 2*L^2 + L + 1\n");
  CHECK(run({"betti", "-q", data("twoloop.q"), "--dim", "3"}).out == "0:1 2:1 4:2 6:1\n");
  CHECK(run({"series", "-q", data("twoloop.q"), "--dim", "3", "--betti"}).out == "0:1 2:1 4:2 6:1\n");
}

TEST_CASE("bijection") {
  CHECK(run({"bijection", "-q", data("twoloop.q"), "--partition", "[2]", "--order", "lex"}).out == "f,af,bf\n");
  CHECK(run({"bijection", "-q", data("twoloop.q"), "--tree", "f,af,baf", "--order", "shortlex"}).out == "[2]\n");
  const auto bad = run({"bijection", "-q", data("twoloop.q"), "--partition", "[3]", "--dim", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not in S(d)") != std::string::npos);
}

TEST_CASE("shuffle, classify, charts, verify-basis") {
  CHECK(run({"shuffle", "-q", data("vertex1.q"), "--left", "d=1:x[0,1]", "--right", "d=1:1"}).out == "d=2:-1\n");
  CHECK(run({"classify", "-q", data("twoloop.q"), "--rep", data("jordan.rep")}).out == "f,bf,bbf dim=9 partition=[2,1]\n");
  const auto unstable = run({"classify", "-q", data("twoloop.q"), "--rep", data("unstable.rep")});
  CHECK(unstable.code == 1);
  CHECK(unstable.err.find("not stable") != std::string::npos);

  const auto charts = run({"charts", "-q", data("twoloop.q"), "--target", "f,af,baf", "--chart", "f,bf,abf",
                           "--multiplicity"});
  CHECK(charts.code == 0);
  CHECK(lines(charts.out).back() == "multiplicity: 2");

  const auto vb = run({"verify-basis", "-q", data("twoloop.q"), "--dim", "3", "--max-degree", "3"});
  CHECK(vb.code == 0);
  CHECK(lines(vb.out)[3] == "2 2 0 2 2 yes");
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"trees", "-q", data("twoloop.q")}).code == 2);
  CHECK(run({"trees", "-q", data("missing.q"), "--dim", "3"}).code == 2);
  CHECK(run({"trees", "-q", data("twoloop.q"), "--dim", "x"}).code == 2);
  CHECK(run({"trees", "-q", data("twoloop.q"), "--dim", "3", "--order", "colex"}).code == 2);
  CHECK(run({"classify", "-q", data("twoloop.q"), "--rep", data("jordan.rep"), "--order", "lex"}).code == 2);
}

TEST_CASE("json lines parse and match the text output") {
  const auto text = lines(run({"trees", "-q", data("twoloop.q"), "--dim", "3"}).out);
  const auto json = lines(run({"trees", "-q", data("twoloop.q"), "--dim", "3", "--json"}).out);
  REQUIRE(text.size() == json.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto row = nlohmann::json::parse(json[k]);
    const std::string rendered = row.at("tree").get<std::string>() + " dim=" + std::to_string(row.at("dim").get<int>()) +
                                 " partition=" + row.at("partition").get<std::string>();
    CHECK(rendered == text[k]);
  }

  const auto series = lines(run({"series", "-q", data("twoloop.q"), "--dim", "3", "--json"}).out);
  std::string rebuilt;
  for (const auto& line : series) {
    const auto row = nlohmann::json::parse(line);
    if (!rebuilt.empty()) rebuilt += " + ";
    const auto coeff = row.at("coeff").get<std::string>();
    rebuilt += (coeff == "1" ? "" : coeff + "*") + "L^" + std::to_string(row.at("degree").get<int>());
  }
  CHECK(rebuilt == "L^12 + L^11 + 2*L^10 + L^9");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"check", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"partitions", "-q", data("a2.q"), "--dim", "2,1"}).out ==
        run({"partitions", "-q", data("a2.q"), "--dim", "2,1"}).out);
}
