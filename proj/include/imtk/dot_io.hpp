#ifndef IMTK_DOT_IO_HPP
#define IMTK_DOT_IO_HPP

#include <sstream>
#include <string>

#include "imtk/ordered_graph.hpp"

namespace imtk {

namespace detail {

inline void dot_part(std::ostringstream& out, const std::string& prefix, int size,
                     const std::string& label) {
  out << "  subgraph cluster_" << prefix << " {\n    label=\"" << label << "\";\n    rank=same;\n   ";
  for (int i = 0; i < size; ++i) out << " " << prefix << (i + 1) << ";";
  out << "\n  }\n";
  if (size > 1) {
    out << "  ";
    for (int i = 0; i < size; ++i) out << (i ? " -- " : "") << prefix << (i + 1);
    out << " [style=invis];\n";  // pins the linear order left to right
  }
}

}  // namespace detail

/// Graphviz output; each part is a same-rank cluster with an invisible chain
/// fixing the linear order, vertices listed in order, edges sorted.
inline std::string to_dot(const OrderedBipartiteGraph& g) {
  std::ostringstream out;
  out << "graph g {\n  rankdir=LR;\n  node [shape=circle];\n";
  detail::dot_part(out, "a", g.a_size(), "A");
  detail::dot_part(out, "b", g.b_size(), "B");
  for (const Edge& e : g.edges()) out << "  a" << (e.a + 1) << " -- b" << (e.b + 1) << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const OrderedMultipartiteGraph& g) {
  std::ostringstream out;
  out << "graph g {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int u = 0; u < g.part_count(); ++u) {
    const std::string prefix = "p" + std::to_string(u + 1) + "_";
    detail::dot_part(out, prefix, g.part_size(u), "A" + std::to_string(u + 1));
  }
  for (const MultiEdge& e : g.edges())
    out << "  p" << (e.u + 1) << "_" << (e.i + 1) << " -- p" << (e.v + 1) << "_" << (e.j + 1)
        << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace imtk

#endif
