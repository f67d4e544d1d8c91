#include <sstream>

#include "groupgraph/graph.hpp"

namespace groupgraph {

std::string to_dot(const SimpleGraph& g, std::span<const std::uint64_t> orders,
                   const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  if (g.kind()) os << "  // kind: " << to_string(*g.kind()) << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << v;
    if (v < orders.size()) os << " (o=" << orders[v] << ")";
    os << "\"];\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_csv(const SimpleGraph& g) {
  std::ostringstream os;
  os << "u,v\n";
  for (const Edge& e : g.edges()) os << e.u << "," << e.v << "\n";
  return os.str();
}

}  // namespace groupgraph
