#ifndef IMTK_JSON_IO_HPP
#define IMTK_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "imtk/minor_check.hpp"
#include "imtk/ordered_graph.hpp"

namespace imtk {

using AnyGraph = std::variant<OrderedBipartiteGraph, OrderedMultipartiteGraph>;

/// {"kind":"bipartite","p":3,"q":4,"edges":[[1,1],[1,2]]} - 1-based, edges
/// sorted lexicographically.
inline nlohmann::ordered_json to_json(const OrderedBipartiteGraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = "bipartite";
  j["p"] = g.a_size();
  j["q"] = g.b_size();
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.a + 1, e.b + 1});
  j["edges"] = std::move(arr);
  return j;
}

/// {"kind":"multipartite","parts":[2,3,4],"edges":[[[1,1],[2,1]]]} - 1-based,
/// endpoints canonical (lower part first), edges sorted lexicographically.
inline nlohmann::ordered_json to_json(const OrderedMultipartiteGraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = "multipartite";
  j["parts"] = g.part_sizes();
  auto arr = nlohmann::ordered_json::array();
  for (const MultiEdge& e : g.edges())
    arr.push_back({{e.u + 1, e.i + 1}, {e.v + 1, e.j + 1}});
  j["edges"] = std::move(arr);
  return j;
}

inline nlohmann::ordered_json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

namespace detail {

inline int json_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::runtime_error(std::string("graph JSON: ") + what + " must be an integer");
  return j.get<int>();
}

}  // namespace detail

/// Parses either graph kind.  Edges may come in any order and duplicates
/// collapse; intra-part or out-of-range edges are rejected.
inline AnyGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::runtime_error("graph JSON: expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "bipartite") {
    const int p = detail::json_int(j.at("p"), "p");
    const int q = detail::json_int(j.at("q"), "q");
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error("graph JSON: bipartite edge must be a pair [a,b]");
      const int a = detail::json_int(e[0], "edge endpoint");
      const int b = detail::json_int(e[1], "edge endpoint");
      if (a < 1 || a > p || b < 1 || b > q)
        throw std::runtime_error("graph JSON: edge (" + std::to_string(a) + "," +
                                 std::to_string(b) + ") out of range");
      edges.push_back({a - 1, b - 1});
    }
    return OrderedBipartiteGraph::from_edges(p, q, edges);
  }
  if (kind == "multipartite") {
    std::vector<int> parts;
    for (const auto& s : j.at("parts")) parts.push_back(detail::json_int(s, "part size"));
    std::vector<MultiEdge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
          !e[1].is_array() || e[1].size() != 2)
        throw std::runtime_error("graph JSON: multipartite edge must be [[u,i],[v,j]]");
      const int u = detail::json_int(e[0][0], "part id");
      const int i = detail::json_int(e[0][1], "position");
      const int v = detail::json_int(e[1][0], "part id");
      const int jj = detail::json_int(e[1][1], "position");
      const int t = static_cast<int>(parts.size());
      if (u < 1 || u > t || v < 1 || v > t)
        throw std::runtime_error("graph JSON: part id out of range");
      if (u == v) throw std::runtime_error("graph JSON: intra-part edges are not allowed");
      if (i < 1 || i > parts[static_cast<std::size_t>(u - 1)] || jj < 1 ||
          jj > parts[static_cast<std::size_t>(v - 1)])
        throw std::runtime_error("graph JSON: position out of range");
      edges.push_back({u - 1, i - 1, v - 1, jj - 1});
    }
    return OrderedMultipartiteGraph::from_edges(parts, edges);
  }
  throw std::runtime_error("graph JSON: unknown kind \"" + kind + "\"");
}

inline AnyGraph graph_from_string(const std::string& text) {
  return graph_from_json(nlohmann::json::parse(text));
}

/// {"assignment":[...],"blocks":[[...],...]} - assignment maps pattern parts
/// to host parts, blocks lists block sizes per host part; all 1-based.
inline nlohmann::ordered_json to_json(const ContainmentWitness& w) {
  nlohmann::ordered_json j;
  auto assign = nlohmann::ordered_json::array();
  for (int h : w.host_of_part) assign.push_back(h + 1);
  j["assignment"] = std::move(assign);
  auto blocks = nlohmann::ordered_json::array();
  for (const IntervalPartition& part : w.partitions) {
    auto sizes = nlohmann::ordered_json::array();
    for (int s : part.sizes()) sizes.push_back(s);
    blocks.push_back(std::move(sizes));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

inline ContainmentWitness witness_from_json(const nlohmann::json& j) {
  ContainmentWitness w;
  for (const auto& h : j.at("assignment"))
    w.host_of_part.push_back(detail::json_int(h, "assignment entry") - 1);
  for (const auto& b : j.at("blocks")) {
    std::vector<int> sizes;
    for (const auto& s : b) sizes.push_back(detail::json_int(s, "block size"));
    w.partitions.emplace_back(std::move(sizes));
  }
  return w;
}

}  // namespace imtk

#endif
