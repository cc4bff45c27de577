#include <algorithm>
#include <charconv>
#include <sstream>

#include "sf/harness.hpp"

namespace sf {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw SolverError(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

std::size_t number(const Line& line, std::size_t i) {
  if (i >= line.words.size()) fail(line.number, "missing number");
  const std::string& w = line.words[i];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) fail(line.number, "expected a number, got '" + w + "'");
  return value;
}

void expect(const Line& line, std::initializer_list<const char*> words) {
  std::vector<std::string> want(words.begin(), words.end());
  if (line.words != want) {
    std::string joined;
    for (const auto& w : want) joined += (joined.empty() ? "" : " ") + w;
    fail(line.number, "expected '" + joined + "'");
  }
}

Vertex vertex(const Line& line, std::size_t i, std::size_t n) {
  const std::size_t v = number(line, i);
  if (v < 1 || v > n) fail(line.number, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

}  // namespace

Parsed parse_instance(const std::string& text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  auto next = [&](const char* what) -> const Line& {
    if (i >= lines.size()) {
      const std::size_t last = lines.empty() ? 0 : lines.back().number;
      fail(last, std::string("unexpected end of file, missing ") + what);
    }
    return lines[i++];
  };
  Parsed out;
  expect(next("header"), {"SFP", "1"});
  expect(next("graph section"), {"SECTION", "Graph"});
  const Line& nodes = next("Nodes");
  if (nodes.words.size() != 2 || nodes.words[0] != "Nodes") fail(nodes.number, "expected 'Nodes <n>'");
  const std::size_t n = number(nodes, 1);
  const Line& count = next("Edges");
  if (count.words.size() != 2 || count.words[0] != "Edges") fail(count.number, "expected 'Edges <m>'");
  const std::size_t m = number(count, 1);
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const Line& e = next("edge");
    if (e.words.size() != 3 || e.words[0] != "E") fail(e.number, "expected 'E <u> <v>'");
    const Vertex u = vertex(e, 1, n), v = vertex(e, 2, n);
    if (u == v) fail(e.number, "loop at vertex " + std::to_string(u + 1));
    edges.emplace_back(u, v);
    seen.emplace_back(Edge(u, v), e.number);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 1; k < seen.size(); ++k)
    if (seen[k].first == seen[k - 1].first) fail(seen[k].second, "duplicate edge");
  expect(next("END"), {"END"});
  expect(next("pairs section"), {"SECTION", "Pairs"});
  std::vector<Pair> pairs;
  for (;;) {
    const Line& p = next("END");
    if (p.words.size() == 1 && p.words[0] == "END") break;
    if (p.words.size() != 3 || p.words[0] != "P") fail(p.number, "expected 'P <s> <t>' or 'END'");
    const Vertex s = vertex(p, 1, n), t = vertex(p, 2, n);
    if (s == t) {
      out.warnings.push_back("line " + std::to_string(p.number) + ": pair with s = t dropped");
      continue;
    }
    pairs.emplace_back(s, t);
  }
  expect(next("EOF"), {"EOF"});
  if (i != lines.size()) fail(lines[i].number, "content after EOF");
  out.instance = Instance(Graph(n, std::move(edges)), std::move(pairs));
  return out;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "SFP 1\nSECTION Graph\nNodes " << inst.num_vertices() << "\nEdges " << inst.graph.num_edges() << "\n";
  for (const Edge& e : inst.graph.edges()) out << "E " << e.u + 1 << " " << e.v + 1 << "\n";
  out << "END\nSECTION Pairs\n";
  for (const Pair& p : inst.pairs) out << "P " << p.u + 1 << " " << p.v + 1 << "\n";
  out << "END\nEOF\n";
  return out.str();
}

std::string write_certificate(const ForestCertificate& cert) {
  std::ostringstream out;
  for (const Edge& e : cert.edges) out << "E " << e.u + 1 << " " << e.v + 1 << "\n";
  return out.str();
}

ForestCertificate parse_certificate(const std::string& text, std::size_t num_vertices) {
  std::vector<Edge> edges;
  for (const Line& line : tokenize(text)) {
    if (line.words.size() != 3 || line.words[0] != "E") fail(line.number, "expected 'E <u> <v>'");
    const Vertex u = vertex(line, 1, num_vertices), v = vertex(line, 2, num_vertices);
    if (u == v) fail(line.number, "loop at vertex " + std::to_string(u + 1));
    edges.emplace_back(u, v);
  }
  return make_certificate(std::move(edges));
}

}  // namespace sf
