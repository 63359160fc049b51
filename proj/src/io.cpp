#include "cokernel/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cokernel {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      if (l.tokens.empty() && line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      l.tokens.push_back(line.substr(start, i - start));
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

int to_int(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) throw ParseError(l.number, "missing integer");
  const auto tok = l.tokens[i];
  int value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw ParseError(l.number, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

void expect_arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    throw ParseError(l.number, "expected " + std::to_string(n) + " fields, got " +
                                   std::to_string(l.tokens.size()));
}

// Parses the header and edge lines; hands every keyword line to `extra`.
template <typename Extra>
Graph parse_with(std::string_view text, Extra&& extra) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'n m'");
  const Line& head = lines.front();
  expect_arity(head, 2);
  const int n = to_int(head, 0), m = to_int(head, 1);
  if (n < 0 || m < 0) throw ParseError(head.number, "negative size in header");
  Graph g(n);
  int edges = 0;
  int last_line = head.number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    last_line = l.number;
    if (!std::isdigit(static_cast<unsigned char>(l.tokens[0][0])) && l.tokens[0][0] != '-') {
      extra(l, g);
      continue;
    }
    expect_arity(l, 2);
    const int u = to_int(l, 0), v = to_int(l, 1);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(l.number, "endpoint out of range");
    if (u == v) throw ParseError(l.number, "self-loop");
    if (g.has_edge(u, v)) throw ParseError(l.number, "duplicate edge");
    g.add_edge(u, v);
    ++edges;
  }
  if (edges != m)
    throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges));
  return g;
}

int vertex(const Line& l, std::size_t i, const Graph& g) {
  const int v = to_int(l, i);
  if (v < 0 || v >= g.vertex_count()) throw ParseError(l.number, "vertex out of range");
  return v;
}

[[noreturn]] void unknown(const Line& l) {
  throw ParseError(l.number, "unknown directive '" + std::string(l.tokens[0]) + "'");
}

void append_edges(std::ostringstream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

}  // namespace

Graph parse_graph(std::string_view text) {
  return parse_with(text, [](const Line& l, const Graph&) { unknown(l); });
}

BicoloredInstance parse_bicolored(std::string_view text) {
  std::vector<std::pair<Line, VertexPair>> colored;
  std::map<VertexPair, int> coloring;
  std::optional<int> k;
  Graph g = parse_with(text, [&](const Line& l, const Graph& g) {
    if (l.tokens[0] == "k") {
      expect_arity(l, 2);
      if (k) throw ParseError(l.number, "duplicate k line");
      k = to_int(l, 1);
      if (*k < 0) throw ParseError(l.number, "k must be >= 0");
    } else if (l.tokens[0] == "c") {
      expect_arity(l, 4);
      const auto p = VertexPair::of(vertex(l, 1, g), vertex(l, 2, g));
      const int b = to_int(l, 3);
      if (b != 0 && b != 1) throw ParseError(l.number, "colour must be 0 or 1");
      if (!coloring.emplace(p, b).second) throw ParseError(l.number, "edge coloured twice");
      colored.push_back({l, p});
    } else {
      unknown(l);
    }
  });
  for (const auto& [l, p] : colored)
    if (!g.has_edge(p.u, p.v)) throw ParseError(l.number, "coloured pair is not an edge");
  if (!k) throw ParseError(1, "missing 'k' line");
  return {std::move(g), std::move(coloring), *k};
}

AnnotatedInstance parse_annotated(std::string_view text) {
  std::vector<int> allowed;
  std::optional<int> k;
  std::optional<Pattern> pattern;
  Graph g = parse_with(text, [&](const Line& l, const Graph& g) {
    if (l.tokens[0] == "k") {
      expect_arity(l, 2);
      if (k) throw ParseError(l.number, "duplicate k line");
      k = to_int(l, 1);
      if (*k < 0) throw ParseError(l.number, "k must be >= 0");
    } else if (l.tokens[0] == "s") {
      expect_arity(l, 2);
      allowed.push_back(vertex(l, 1, g));
    } else if (l.tokens[0] == "pattern") {
      expect_arity(l, 3);
      if (pattern) throw ParseError(l.number, "duplicate pattern line");
      Pattern p;
      if (l.tokens[1] == "cycle") p.kind = PatternKind::cycle;
      else if (l.tokens[1] == "path") p.kind = PatternKind::path;
      else throw ParseError(l.number, "pattern must be cycle or path");
      p.length = to_int(l, 2);
      if (p.length < (p.kind == PatternKind::cycle ? 3 : 1))
        throw ParseError(l.number, "pattern length too small");
      pattern = p;
    } else {
      unknown(l);
    }
  });
  if (!k) throw ParseError(1, "missing 'k' line");
  if (!pattern) throw ParseError(1, "missing 'pattern' line");
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  return {std::move(g), std::move(allowed), *k, *pattern};
}

EditSet parse_edit_list(std::string_view text, Variant variant) {
  EditSet f{variant, {}};
  for (const auto& l : tokenize(text)) {
    if (l.tokens[0] == "NO") throw ParseError(l.number, "edit list says NO");
    if (l.tokens[0] != "del" && l.tokens[0] != "add") unknown(l);
    expect_arity(l, 3);
    const int u = to_int(l, 1), v = to_int(l, 2);
    if (u < 0 || v < 0 || u == v) throw ParseError(l.number, "bad vertex pair");
    if (l.tokens[0] == "del" && variant == Variant::completion)
      throw ParseError(l.number, "deletion in a completion edit list");
    if (l.tokens[0] == "add" && variant == Variant::deletion)
      throw ParseError(l.number, "addition in a deletion edit list");
    if (!f.pairs.insert(VertexPair::of(u, v)).second) throw ParseError(l.number, "pair listed twice");
  }
  return f;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  append_edges(os, g);
  return os.str();
}

std::string format_bicolored(const BicoloredInstance& inst) {
  std::ostringstream os;
  append_edges(os, inst.graph);
  for (const auto& [p, b] : inst.coloring) os << "c " << p.u << ' ' << p.v << ' ' << b << '\n';
  os << "k " << inst.k << '\n';
  return os.str();
}

std::string format_annotated(const AnnotatedInstance& inst) {
  std::ostringstream os;
  append_edges(os, inst.graph);
  for (int v : inst.allowed) os << "s " << v << '\n';
  os << "k " << inst.k << '\n';
  os << "pattern " << to_string(inst.pattern.kind) << ' ' << inst.pattern.length << '\n';
  return os.str();
}

std::string format_edit_list(const Graph& g, const EditSet& f) {
  std::ostringstream os;
  for (const auto& p : f.pairs) os << (g.has_edge(p.u, p.v) ? "del " : "add ") << p.u << ' ' << p.v << '\n';
  return os.str();
}

nlohmann::json to_json(const RuleApplication& a) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : a.pairs) pairs.push_back({p.u, p.v});
  return {{"rule", std::string(to_string(a.rule))},
          {"vertices", a.vertices},
          {"pairs", std::move(pairs)},
          {"k_before", a.k_before},
          {"k_after", a.k_after}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace cokernel
