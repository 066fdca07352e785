#include "crux/graph_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>

#include "crux/rational.hpp"

namespace crux {

namespace {

// Parses "a b" into two ints, rejecting anything else on the line.
bool parse_int_pair(std::string_view line, long& a, long& b) {
  const char* begin = line.data();
  const char* end = line.data() + line.size();
  auto r1 = std::from_chars(begin, end, a);
  if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, end, b);
  if (r2.ec != std::errc() || r2.ptr != end) return false;
  return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<std::string_view> lines;
  {
    std::string_view rest(text);
    while (!rest.empty()) {
      std::size_t pos = rest.find('\n');
      if (pos == std::string_view::npos) {
        lines.push_back(rest);
        break;
      }
      lines.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    // A trailing LF leaves no empty tail entry; an empty final line would.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
  }

  if (lines.empty()) throw ParseError("parse: malformed header (empty input)");
  long n = 0, m = 0;
  if (!parse_int_pair(lines[0], n, m) || n < 0 || m < 0)
    throw ParseError("parse: malformed header '" + std::string(lines[0]) + "'");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError("parse: edge count mismatch (header says " +
                     std::to_string(m) + ", found " +
                     std::to_string(lines.size() - 1) + " edge lines)");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  Edge prev{-1, -1};
  for (long i = 1; i <= m; ++i) {
    long u = 0, v = 0;
    if (!parse_int_pair(lines[static_cast<std::size_t>(i)], u, v))
      throw ParseError("parse: malformed edge line '" +
                       std::string(lines[static_cast<std::size_t>(i)]) + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("parse: vertex id out of range on line " +
                       std::to_string(i + 1));
    if (u == v)
      throw ParseError("parse: self-loop on line " + std::to_string(i + 1));
    if (u > v)
      throw ParseError("parse: edge endpoints out of order on line " +
                       std::to_string(i + 1));
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (e == prev)
      throw ParseError("parse: duplicate edge on line " + std::to_string(i + 1));
    prev = e;
    edges.push_back(e);
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& ex) {
    // Non-consecutive duplicates reach here via the Graph constructor.
    throw ParseError(std::string("parse: ") + ex.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("parse: cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write: cannot open file '" + path + "'");
  out << serialize_graph(g);
}

// Accepts "p/q", plain integers, and terminating decimals like "0.25".
Rational parse_rational(const std::string& text) {
  auto parse_i64 = [](const std::string& s) {
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
      throw std::invalid_argument("parse_rational: bad integer '" + s + "'");
    return value;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t num = parse_i64(text.substr(0, slash));
    std::int64_t den = parse_i64(text.substr(slash + 1));
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty() || tail.size() > 15)
      throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    std::int64_t whole = head.empty() || head == "-" ? 0 : parse_i64(head);
    std::int64_t frac = parse_i64(tail);
    if (frac < 0)
      throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Rational magnitude =
        Rational(std::llabs(whole)) + Rational(frac, scale);
    return negative || whole < 0 ? Rational(0) - magnitude : magnitude;
  }
  return Rational(parse_i64(text));
}

}  // namespace crux
