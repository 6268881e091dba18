#include "edgepow/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "edgepow/error.hpp"
#include "json.hpp"

namespace edgepow {

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<long long> parse_ints(std::string_view s, int line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc() || ptr != s.data() + j)
      fail_at(line, "expected an integer, got '" + std::string(s.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

// Validates one edge and records it; `line` is used for diagnostics.
void add_edge(long long n, long long u, long long v, int line,
              std::set<std::pair<int, int>>& seen, std::vector<std::pair<int, int>>& edges) {
  if (u < 1 || u > n || v < 1 || v > n)
    fail_at(line, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} has an endpoint outside 1.." + std::to_string(n));
  if (u == v) fail_at(line, "loop at vertex " + std::to_string(u));
  const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
  if (!seen.insert(key).second)
    fail_at(line, "duplicate edge {" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + "}");
  edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
}

void check_n(long long n, int line) {
  if (n < 0 || n > kMaxVertices)
    fail_at(line, "vertex count " + std::to_string(n) + " out of range 0.." +
                      std::to_string(kMaxVertices));
}

// Line numbers of each `[` opening an element of the top-level "edges" array.
std::vector<int> edge_lines(std::string_view text) {
  std::vector<int> lines;
  auto key = text.find("\"edges\"");
  if (key == std::string_view::npos) return lines;
  int line = 1;
  for (std::size_t i = 0; i < key; ++i)
    if (text[i] == '\n') ++line;
  int depth = 0;
  for (std::size_t i = key; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') ++line;
    if (c == '[') {
      ++depth;
      if (depth == 2) lines.push_back(line);
    } else if (c == ']') {
      if (--depth == 0) break;
    }
  }
  return lines;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  long long n = -1, m = -1;
  int header_line = 0;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto ints = parse_ints(raw.substr(0, raw.find('#')), line_no);
    if (ints.empty()) continue;
    if (n < 0) {
      if (ints.size() != 2) fail_at(line_no, "header must be `n m`");
      n = ints[0];
      m = ints[1];
      check_n(n, line_no);
      if (m < 0) fail_at(line_no, "negative edge count");
      header_line = line_no;
      continue;
    }
    if (ints.size() != 2) fail_at(line_no, "edge line must be `i j`");
    if (static_cast<long long>(edges.size()) >= m)
      fail_at(line_no, "more edge lines than the declared m = " + std::to_string(m));
    add_edge(n, ints[0], ints[1], line_no, seen, edges);
  }
  if (n < 0) throw InputError("line 1: empty graph file (expected `n m`)");
  if (static_cast<long long>(edges.size()) != m)
    fail_at(header_line, "declared m = " + std::to_string(m) + " but found " +
                             std::to_string(edges.size()) + " edge lines");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw InputError("line 1: JSON graph must be an object with \"n\" and \"edges\"");
  const auto lines = edge_lines(text);
  auto line_of = [&](std::size_t k) { return k < lines.size() ? lines[k] : 1; };
  if (!doc["n"].is_number_integer()) fail_at(1, "\"n\" must be an integer");
  long long n = doc["n"].get<long long>();
  check_n(n, 1);
  if (!doc["edges"].is_array()) fail_at(1, "\"edges\" must be an array");
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail_at(line_of(k), "edge " + std::to_string(k) + " must be a pair of integers");
    add_edge(n, e[0].get<long long>(), e[1].get<long long>(), line_of(k), seen, edges);
    ++k;
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph parse_edge_list(std::string_view spec, int n) {
  std::vector<std::pair<int, int>> edges;
  int max_label = 0;
  std::string s(spec);
  for (char& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  std::string token;
  while (in >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos) throw InputError("edge '" + token + "' must look like i-j");
    int u = 0, v = 0;
    auto r1 = std::from_chars(token.data(), token.data() + dash, u);
    auto r2 = std::from_chars(token.data() + dash + 1, token.data() + token.size(), v);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != token.data() + dash ||
        r2.ptr != token.data() + token.size())
      throw InputError("edge '" + token + "' must look like i-j");
    edges.emplace_back(u, v);
    max_label = std::max({max_label, u, v});
  }
  return Graph(n > 0 ? n : max_label, edges);
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.n() << ' ' << edges.size() << '\n';
  for (auto e : edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_json_string(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.n();
  doc["edges"] = nlohmann::json::array();
  for (auto e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

}  // namespace edgepow
