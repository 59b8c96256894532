#include "loopswap/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace loopswap {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Tokens of the next line; throws if the input ended early.
  std::vector<std::string_view> next(const char* expecting) {
    if (!std::getline(in_, line_)) {
      throw ParseError(line_number_ + 1, std::string("unexpected end of input, expected ") +
                                             expecting);
    }
    ++line_number_;
    return tokenize();
  }

  void expect_end() {
    while (std::getline(in_, line_)) {
      ++line_number_;
      if (!tokenize().empty()) throw ParseError(line_number_, "unexpected trailing content");
    }
  }

  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::vector<std::string_view> tokenize() const {
    std::vector<std::string_view> tokens;
    std::string_view rest(line_);
    while (!rest.empty()) {
      auto start = rest.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      auto stop = rest.find_first_of(" \t\r");
      tokens.push_back(rest.substr(0, stop));
      rest.remove_prefix(stop == std::string_view::npos ? rest.size() : stop);
    }
    return tokens;
  }

  std::istream& in_;
  std::string line_;
  std::size_t line_number_ = 0;
};

std::int64_t parse_integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "integer out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Weight parse_weight(std::string_view token, std::size_t line, bool allow_infinity) {
  if (token == "inf") {
    if (!allow_infinity) throw ParseError(line, "edge weight must be finite");
    return kInfinity;
  }
  std::int64_t value = parse_integer(token, line);
  if (value > kWeightMax || value < -kWeightMax) {
    throw ParseError(line, "weight outside the finite range: " + std::string(token));
  }
  return Weight(value);
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = parse_integer(token, line);
  if (value < 0) throw ParseError(line, std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(value);
}

std::int64_t magnitude(Weight w) { return w.value() < 0 ? -w.value() : w.value(); }

void check_declared_bound(Weight w, const ParseOptions& options, std::size_t line) {
  if (options.weight_bound && magnitude(w) > *options.weight_bound) {
    throw ParseError(line, "weight " + w.to_string() + " exceeds declared bound " +
                               std::to_string(*options.weight_bound));
  }
}

Graph build(std::size_t n, std::vector<Edge> edges, const ParseOptions& options) {
  try {
    return Graph(n, std::move(edges), options.weight_bound);
  } catch (const InvalidGraph& e) {
    throw ParseError(1, e.what());
  }
}

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  LineReader reader(in);
  auto header = reader.next("header 'n m'");
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const std::size_t n = parse_count(header[0], 1, "vertex count");
  const std::size_t m = parse_count(header[1], 1, "edge count");
  if (n == 0) throw ParseError(1, "vertex count must be at least 1");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    auto tokens = reader.next("edge line 'u v w'");
    const std::size_t line = reader.line_number();
    if (tokens.size() != 3) throw ParseError(line, "edge line must be 'u v w'");
    std::int64_t u = parse_integer(tokens[0], line);
    std::int64_t v = parse_integer(tokens[1], line);
    if (u < 1 || v < 1 || static_cast<std::uint64_t>(u) > n ||
        static_cast<std::uint64_t>(v) > n) {
      throw ParseError(line, "vertex out of range [1, " + std::to_string(n) + "]");
    }
    Weight w = parse_weight(tokens[2], line, false);
    check_declared_bound(w, options, line);
    if (u == v && w < Weight(0)) {
      throw NegativeCycleError("line " + std::to_string(line) + ": negative self-loop at vertex " +
                               std::to_string(u));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
  }
  reader.expect_end();
  return build(n, std::move(edges), options);
}

DistMatrix read_matrix(LineReader& reader) {
  auto header = reader.next("header 'n'");
  if (header.size() != 1) throw ParseError(1, "header must be 'n'");
  const std::size_t n = parse_count(header[0], 1, "dimension");
  if (n == 0) throw ParseError(1, "dimension must be at least 1");

  DistMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto tokens = reader.next("matrix row");
    const std::size_t line = reader.line_number();
    if (tokens.size() != n) {
      throw ParseError(line, "expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_weight(tokens[j], line, true);
  }
  reader.expect_end();
  return m;
}

Graph parse_matrix_graph(std::istream& in, const ParseOptions& options) {
  LineReader reader(in);
  DistMatrix m = read_matrix(reader);
  const std::size_t n = m.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t line = i + 2;
    for (std::size_t j = 0; j < n; ++j) {
      Weight w = m(i, j);
      if (w.is_infinite()) continue;
      check_declared_bound(w, options, line);
      if (i == j && w < Weight(0)) {
        throw NegativeCycleError("line " + std::to_string(line) +
                                 ": negative diagonal entry at vertex " + std::to_string(i + 1));
      }
      edges.push_back({i, j, w});
    }
  }
  return build(n, std::move(edges), options);
}

}  // namespace

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "matrix") return GraphFormat::kMatrix;
  return std::nullopt;
}

Graph parse_graph(std::istream& in, GraphFormat format, const ParseOptions& options) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(in, options)
                                          : parse_matrix_graph(in, options);
}

Graph parse_graph(std::string_view text, GraphFormat format, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format, options);
}

DistMatrix parse_matrix(std::istream& in) {
  LineReader reader(in);
  return read_matrix(reader);
}

DistMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const DistMatrix& m) {
  std::string buffer = std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) buffer += ' ';
      buffer += m(i, j).to_string();
    }
    buffer += '\n';
  }
  out << buffer;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight << '\n';
  }
}

}  // namespace loopswap
