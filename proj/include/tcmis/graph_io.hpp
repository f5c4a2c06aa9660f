#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcmis/graph.hpp"

namespace tcmis {

enum class GraphFormat { MatrixMarket, EdgeList };

/// Parse failure with the 1-based input line it was detected on (0 when no
/// line applies, e.g. truncated input).
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedHeader,
    UnsupportedFormat,
    IndexOutOfBounds,
    EmptyVertexSet,
    BadToken,
    NegativeId,
    Truncated,
  };

  ParseError(Kind kind, long line, const std::string& message);

  Kind kind() const { return kind_; }
  long line() const { return line_; }

 private:
  Kind kind_;
  long line_;
};

/// Matrix Market coordinate input, pattern or weighted (values discarded),
/// general or symmetric. The result is normalized: symmetrized,
/// deduplicated, self loops dropped, ids rebased to 0.
Graph parse_matrix_market(std::istream& in);

/// Whitespace-separated "u v" pairs with 0-based ids; lines starting with
/// '#' or '%' are comments. Result normalized as above.
Graph parse_edge_list(std::istream& in);

void write_matrix_market(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);

/// Load from disk. Format inferred from the extension (.mtx / .mm means
/// Matrix Market) unless given explicitly. Throws std::system_error style
/// std::runtime_error on unopenable files, ParseError on bad content.
Graph load_graph(const std::filesystem::path& path,
                 std::optional<GraphFormat> format = std::nullopt);

/// Whitespace-separated vertex ids, '#'/'%' comment lines allowed.
/// Used for externally supplied independent sets.
std::vector<VertexId> read_vertex_set(std::istream& in);

}  // namespace tcmis
