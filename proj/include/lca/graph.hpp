#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lca/gf2.hpp"
#include "lca/rules.hpp"

namespace lca {

/// Edge colour: the fundamental that produced the edge, or none for graphs
/// read straight off an adjacency matrix.
using EdgeColor = std::optional<Fundamental>;

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  EdgeColor color;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GridDims {
  std::size_t rows = 0;
  std::size_t cols = 0;

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Directed graph on vertex_count() vertices (one per grid cell). Edges are
/// kept sorted by (source, target) with no duplicate pairs.
class RuleGraph {
 public:
  /// Throws InvalidArgument on an out-of-range endpoint, a duplicate
  /// (source, target) pair or a self-loop coloured other than kSelf.
  RuleGraph(std::size_t vertex_count, std::vector<Edge> edges,
            std::optional<GridDims> dims = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<GridDims>& dims() const { return dims_; }

  /// Same edges with every colour dropped.
  RuleGraph uncolored() const;

  friend bool operator==(const RuleGraph&, const RuleGraph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::optional<GridDims> dims_;
};

/// Uncoloured graph whose adjacency matrix is `a`.
RuleGraph from_matrix(const Gf2Matrix& a);

/// Union of the fundamental graphs of `rule`, each edge coloured by its
/// fundamental. uncolored() equals from_matrix(build_rule_matrix(...)).
RuleGraph colored_graph(RuleNumber rule, std::size_t rows, std::size_t cols);

struct GraphStats {
  std::size_t self_loop_count = 0;
  /// Vertices with no incident edge at all (a self-loop counts).
  std::vector<std::size_t> isolated;
  /// Components of the underlying undirected graph, each sorted, ordered
  /// by smallest member.
  std::vector<std::vector<std::size_t>> weak_components;
  std::vector<std::size_t> out_degrees;
  std::vector<std::size_t> in_degrees;
};

GraphStats stats(const RuleGraph& g);

/// Graphviz palette for edge colours; "gray" for uncoloured edges.
std::string_view dot_color(const EdgeColor& color);

/// Deterministic Graphviz digraph: nodes v0..v{n-1}, edges in
/// (source, target) order with a color attribute.
std::string to_dot(const RuleGraph& g);

}  // namespace lca
