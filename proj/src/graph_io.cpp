#include "tcmis/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tcmis {

namespace {

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

ParseError::ParseError(Kind kind, long line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      kind_(kind),
      line_(line) {}

Graph parse_matrix_market(std::istream& in) {
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line))
    throw ParseError(ParseError::Kind::MalformedHeader, 1, "empty input");
  ++line_no;
  auto banner = split_ws(line);
  if (banner.size() < 4 || to_lower(std::string(banner[0])) != "%%matrixmarket" ||
      to_lower(std::string(banner[1])) != "matrix")
    throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                     "expected '%%MatrixMarket matrix coordinate ...' banner");
  std::string format = to_lower(std::string(banner[2]));
  std::string field = to_lower(std::string(banner[3]));
  std::string symmetry =
      banner.size() > 4 ? to_lower(std::string(banner[4])) : "general";
  if (format != "coordinate")
    throw ParseError(ParseError::Kind::UnsupportedFormat, line_no,
                     "only coordinate format is supported, got '" + format + "'");
  if (field != "pattern" && field != "real" && field != "integer")
    throw ParseError(ParseError::Kind::UnsupportedFormat, line_no,
                     "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError(ParseError::Kind::UnsupportedFormat, line_no,
                     "unsupported symmetry '" + symmetry + "'");

  // size line: first non-comment, non-blank line after the banner
  long long rows = 0, cols = 0, declared = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError(ParseError::Kind::Truncated, line_no,
                       "missing size line");
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || !parse_int(tokens[0], rows) ||
        !parse_int(tokens[1], cols) || !parse_int(tokens[2], declared))
      throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                       "size line must be 'rows cols nnz'");
    break;
  }
  if (rows != cols)
    throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                     "adjacency matrix must be square, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  if (rows <= 0)
    throw ParseError(ParseError::Kind::EmptyVertexSet, line_no,
                     "graph declares no vertices");
  if (declared < 0 || rows > std::numeric_limits<VertexId>::max() - 1)
    throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                     "size line out of range");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(declared));
  long long seen = 0;
  while (seen < declared) {
    if (!std::getline(in, line))
      throw ParseError(ParseError::Kind::Truncated, line_no,
                       "expected " + std::to_string(declared) +
                           " entries, got " + std::to_string(seen));
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    long long u = 0, v = 0;
    if (tokens.size() < 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw ParseError(ParseError::Kind::BadToken, line_no,
                       "entry must start with two integer indices");
    if (u < 1 || u > rows || v < 1 || v > rows)
      throw ParseError(ParseError::Kind::IndexOutOfBounds, line_no,
                       "index (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside declared bounds 1.." + std::to_string(rows));
    // weights, if any, are discarded
    edges.emplace_back(static_cast<VertexId>(u - 1),
                       static_cast<VertexId>(v - 1));
    ++seen;
  }
  return graph_from_edges(static_cast<VertexId>(rows), edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long max_id = -1;
  std::optional<long long> dangling;
  long dangling_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    for (auto token : tokens) {
      long long id = 0;
      if (!parse_int(token, id))
        throw ParseError(ParseError::Kind::BadToken, line_no,
                         "non-integer token '" + std::string(token) + "'");
      if (id < 0)
        throw ParseError(ParseError::Kind::NegativeId, line_no,
                         "negative vertex id " + std::to_string(id));
      if (id > std::numeric_limits<VertexId>::max() - 1)
        throw ParseError(ParseError::Kind::BadToken, line_no,
                         "vertex id " + std::to_string(id) + " too large");
      if (dangling) {
        edges.emplace_back(static_cast<VertexId>(*dangling),
                           static_cast<VertexId>(id));
        dangling.reset();
      } else {
        dangling = id;
        dangling_line = line_no;
      }
      max_id = std::max(max_id, id);
    }
  }
  if (dangling)
    throw ParseError(ParseError::Kind::Truncated, dangling_line,
                     "dangling vertex id without a pair");
  if (max_id < 0)
    throw ParseError(ParseError::Kind::EmptyVertexSet, 0, "empty graph");
  return graph_from_edges(static_cast<VertexId>(max_id + 1), edges);
}

void write_matrix_market(std::ostream& out, const Graph& g) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.n << ' ' << g.n << ' ' << g.num_edges() << '\n';
  // lower triangle, 1-based
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.neighbors_of(v))
      if (u < v) out << v + 1 << ' ' << u + 1 << '\n';
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.neighbors_of(v))
      if (v < u) out << v << ' ' << u << '\n';
}

Graph load_graph(const std::filesystem::path& path,
                 std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open input file: " + path.string());
  GraphFormat fmt = format.value_or([&] {
    auto ext = to_lower(path.extension().string());
    return (ext == ".mtx" || ext == ".mm") ? GraphFormat::MatrixMarket
                                           : GraphFormat::EdgeList;
  }());
  return fmt == GraphFormat::MatrixMarket ? parse_matrix_market(in)
                                          : parse_edge_list(in);
}

std::vector<VertexId> read_vertex_set(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::vector<VertexId> ids;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    for (auto token : tokens) {
      long long id = 0;
      if (!parse_int(token, id))
        throw ParseError(ParseError::Kind::BadToken, line_no,
                         "non-integer token '" + std::string(token) + "'");
      if (id < 0)
        throw ParseError(ParseError::Kind::NegativeId, line_no,
                         "negative vertex id " + std::to_string(id));
      ids.push_back(static_cast<VertexId>(id));
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace tcmis
