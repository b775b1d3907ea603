#include <cctype>
#include <cstdlib>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "effrank/report.hpp"

using namespace effrank;

namespace {

BootstrapDistribution dist(std::string name, std::vector<double> samples) {
  BootstrapDistribution d;
  d.setup = std::move(name);
  d.samples = std::move(samples);
  d.stats = boxplot_stats(d.samples);
  return d;
}

// Minimal checker for the DOT subset we emit:
//   digraph ID { (quoted (-> quoted)? ;)* }
bool dot_grammar_ok(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (text.compare(i, tok.size(), tok) != 0) return false;
    i += tok.size();
    return true;
  };
  auto quoted = [&] {
    skip_ws();
    if (i >= text.size() || text[i] != '"') return false;
    ++i;
    while (i < text.size() && text[i] != '"') ++i;
    if (i >= text.size()) return false;
    ++i;
    return true;
  };
  if (!expect("digraph")) return false;
  skip_ws();
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
  if (!expect("{")) return false;
  while (true) {
    skip_ws();
    if (i < text.size() && text[i] == '}') { ++i; break; }
    if (!quoted()) return false;
    skip_ws();
    if (text.compare(i, 2, "->") == 0) {
      i += 2;
      if (!quoted()) return false;
    }
    if (!expect(";")) return false;
  }
  skip_ws();
  return i == text.size();
}

}  // namespace

TEST_CASE("format_number round-trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, 68.2, 1e-9, 12345.678901234567, -2.5e17}) {
    const std::string s = format_number(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("render_dot node-only graph") {
  DominanceGraph g;
  g.nodes = {"A"};
  CHECK(render_dot(g) == "digraph dominance {\n  \"A\";\n}\n");
}

TEST_CASE("render_dot chain uses reduced edges only") {
  DominanceGraph g;
  g.nodes = {"C", "A", "B"};
  g.edges = {{"A", "B"}, {"A", "C"}, {"B", "C"}};
  g.reduced_edges = {{"A", "B"}, {"B", "C"}};
  const auto out = render_dot(g);
  CHECK(out.find("digraph dominance {") == 0);
  CHECK(out.find("  \"A\" -> \"B\";") != std::string::npos);
  CHECK(out.find("  \"B\" -> \"C\";") != std::string::npos);
  CHECK(out.find("\"A\" -> \"C\"") == std::string::npos);
  // nodes sorted lexicographically before edges
  CHECK(out.find("\"A\";") < out.find("\"B\";"));
}

TEST_CASE("render_dot quotes names with spaces") {
  DominanceGraph g;
  g.nodes = {"net one", "net two"};
  g.edges = {{"net one", "net two"}};
  g.reduced_edges = g.edges;
  const auto out = render_dot(g);
  CHECK(out.find("\"net one\" -> \"net two\";") != std::string::npos);
  CHECK(dot_grammar_ok(out));
}

TEST_CASE("render_dot output passes the grammar check") {
  DominanceGraph g;
  g.nodes = {"A", "B", "C"};
  g.edges = {{"A", "B"}, {"B", "C"}, {"A", "C"}};
  g.reduced_edges = {{"A", "B"}, {"B", "C"}};
  CHECK(dot_grammar_ok(render_dot(g)));
  DominanceGraph empty;
  CHECK(dot_grammar_ok(render_dot(empty)));
  CHECK_FALSE(dot_grammar_ok("digraph { \"A\" -> ; }"));
  CHECK_FALSE(dot_grammar_ok("graph dominance { \"A\"; }"));
}

TEST_CASE("efficiency csv respects percent scaling") {
  EfficiencyResult a{"A", 1.0, {{"A", 1.0}}, FrontierForm::Affine, LpStatus::Optimal};
  EfficiencyResult b{"B", 0.5, {{"A", 0.5}}, FrontierForm::Affine, LpStatus::Optimal};
  ReportOptions percent;
  CHECK(efficiency_csv({a, b}, percent) == "setup,theta\nA,100\nB,50\n");
  ReportOptions plain;
  plain.scale_percent = false;
  CHECK(efficiency_csv({a, b}, plain) == "setup,theta\nA,1\nB,0.5\n");
}

TEST_CASE("rank json schema") {
  EfficiencyResult ra{"A", 1.0, {}, FrontierForm::Convex, LpStatus::Optimal};
  auto da = dist("A", {1.0, 1.0});
  DominanceGraph g;
  g.nodes = {"A"};
  auto entries = rank_report({ra}, {da}, g, {"A"});
  const auto text = rank_json(entries, {}, "convex", 2, 0, 1e-12);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("config").at("replicates") == 2);
  REQUIRE(j.at("setups").size() == 1);
  const auto& s = j.at("setups")[0];
  CHECK(s.at("name") == "A");
  CHECK(s.at("theta") == 100.0);
  CHECK(s.at("frontier") == true);
  CHECK(s.at("stats").contains("median"));
  CHECK(s.at("dominates").is_array());
  CHECK(s.at("dominated_by").is_array());
}

TEST_CASE("bootstrap json raw samples flag") {
  auto d = dist("A", {0.5, 0.6});
  ReportOptions opts;
  opts.scale_percent = false;
  auto without = nlohmann::json::parse(bootstrap_json({d}, opts));
  CHECK_FALSE(without[0].contains("samples"));
  opts.raw_samples = true;
  auto with = nlohmann::json::parse(bootstrap_json({d}, opts));
  REQUIRE(with[0].contains("samples"));
  CHECK(with[0]["samples"].size() == 2);
}
