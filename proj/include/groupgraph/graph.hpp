#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace groupgraph {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphKind { Commuting, Coprime, OrderSum, NonInverse };

const char* to_string(GraphKind kind);
// Accepts commuting, coprime, ordersum, noninverse.
std::optional<GraphKind> parse_graph_kind(std::string_view text);
inline constexpr GraphKind kAllGraphKinds[] = {
    GraphKind::Commuting, GraphKind::Coprime, GraphKind::OrderSum,
    GraphKind::NonInverse};

// Loop-free undirected graph on vertices [0, n). Adjacency is held as packed
// bit rows; the canonical edge list is kept sorted. Immutable: every
// modification returns a new graph.
class SimpleGraph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SimpleGraph() = default;
  // Throws GraphError on loops or out-of-range endpoints. Duplicates collapse.
  SimpleGraph(std::size_t n, std::span<const Edge> edges,
              std::optional<GraphKind> kind = std::nullopt);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph empty(std::size_t n);
  static SimpleGraph star(std::size_t leaves);  // center 0
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<GraphKind> kind() const noexcept { return kind_; }

  bool adjacent(Vertex a, Vertex b) const {
    return (row(a)[b / kWordBits] >> (b % kWordBits)) & 1U;
  }
  bool has_edge(const Edge& e) const { return e.u < n_ && e.v < n_ && adjacent(e.u, e.v); }
  std::size_t degree(Vertex a) const { return degrees_[a]; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::vector<Vertex> neighbors(Vertex a) const;
  std::span<const Word> row(Vertex a) const {
    return {bits_.data() + static_cast<std::size_t>(a) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  // Throws GraphError if e is absent.
  SimpleGraph delete_edge(const Edge& e) const;
  // Throws GraphError if e is present or a loop.
  SimpleGraph add_edge(const Edge& e) const;
  // Induced subgraph on all vertices except x; later vertices shift down.
  SimpleGraph delete_vertex(Vertex x) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void set_bit(Vertex a, Vertex b) {
    bits_[static_cast<std::size_t>(a) * words_ + b / kWordBits] |= Word{1} << (b % kWordBits);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::optional<GraphKind> kind_;
};

struct GraphShape {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool is_regular = false;
  bool is_complete = false;
  bool is_star = false;
  std::optional<Vertex> star_center;
  std::vector<Vertex> dominating_vertices;
  bool is_connected = false;
  // nullopt encodes an infinite diameter (disconnected graph).
  std::optional<std::size_t> diameter;
  std::vector<std::size_t> degree_sequence;  // indexed by vertex
  bool is_tree = false;
};

bool is_connected(const SimpleGraph& g);
GraphShape shape_profile(const SimpleGraph& g);

// Graphviz DOT. When orders is non-empty, labels read "i (o=k)".
std::string to_dot(const SimpleGraph& g, std::span<const std::uint64_t> orders = {},
                   const std::string& name = "G");
// "u,v" rows with a header line.
std::string to_edge_csv(const SimpleGraph& g);

}  // namespace groupgraph
