#include "lca/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "lca/error.hpp"
#include "lca/rulematrix.hpp"

namespace lca {

RuleGraph::RuleGraph(std::size_t vertex_count, std::vector<Edge> edges, std::optional<GridDims> dims)
    : vertex_count_(vertex_count), edges_(std::move(edges)), dims_(dims) {
  if (dims_ && dims_->rows * dims_->cols != vertex_count_) {
    throw InvalidArgument("grid dimensions do not match vertex count");
  }
  std::ranges::sort(edges_, [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw InvalidArgument("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) +
                            " is out of range");
    }
    if (k > 0 && edges_[k - 1].source == e.source && edges_[k - 1].target == e.target) {
      throw InvalidArgument("duplicate edge " + std::to_string(e.source) + "->" + std::to_string(e.target));
    }
    if (e.source == e.target && e.color && *e.color != Fundamental::kSelf) {
      throw InvalidArgument("self-loop at v" + std::to_string(e.source) + " must be coloured by rule 1");
    }
  }
}

RuleGraph RuleGraph::uncolored() const {
  std::vector<Edge> plain = edges_;
  for (Edge& e : plain) e.color.reset();
  return RuleGraph(vertex_count_, std::move(plain), dims_);
}

RuleGraph from_matrix(const Gf2Matrix& a) {
  std::vector<Edge> edges;
  for (const auto& [i, j] : nonzero_entries(a)) edges.push_back({i, j, std::nullopt});
  return RuleGraph(a.dim(), std::move(edges));
}

RuleGraph colored_graph(RuleNumber rule, std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (Fundamental f : decompose(rule)) {
    for (const auto& [i, j] : nonzero_entries(build_rule_matrix(f, rows, cols))) {
      edges.push_back({i, j, f});
    }
  }
  return RuleGraph(rows * cols, std::move(edges), GridDims{rows, cols});
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

GraphStats stats(const RuleGraph& g) {
  const std::size_t n = g.vertex_count();
  GraphStats s;
  s.out_degrees.assign(n, 0);
  s.in_degrees.assign(n, 0);
  DisjointSets sets(n);
  for (const Edge& e : g.edges()) {
    ++s.out_degrees[e.source];
    ++s.in_degrees[e.target];
    if (e.source == e.target) {
      ++s.self_loop_count;
    } else {
      sets.unite(e.source, e.target);
    }
  }

  std::map<std::size_t, std::size_t> root_to_component;
  for (std::size_t v = 0; v < n; ++v) {
    if (s.out_degrees[v] == 0 && s.in_degrees[v] == 0) s.isolated.push_back(v);
    const std::size_t root = sets.find(v);
    auto [it, inserted] = root_to_component.try_emplace(root, s.weak_components.size());
    if (inserted) s.weak_components.emplace_back();
    s.weak_components[it->second].push_back(v);
  }
  return s;
}

std::string_view dot_color(const EdgeColor& color) {
  if (!color) return "gray";
  switch (*color) {
    case Fundamental::kSelf: return "black";
    case Fundamental::kRight: return "red";
    case Fundamental::kBottomRight: return "orange";
    case Fundamental::kBottom: return "gold";
    case Fundamental::kBottomLeft: return "green";
    case Fundamental::kLeft: return "blue";
    case Fundamental::kTopLeft: return "purple";
    case Fundamental::kTop: return "brown";
    case Fundamental::kTopRight: return "cyan";
  }
  return "gray";
}

std::string to_dot(const RuleGraph& g) {
  std::ostringstream os;
  os << "digraph rule_graph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << v << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  v" << e.source << " -> v" << e.target << " [color=" << dot_color(e.color) << "];\n";
  }
  os << "}\n";
  return std::move(os).str();
}

}  // namespace lca
