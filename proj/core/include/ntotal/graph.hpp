#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ntotal/bitset.hpp"
#include "ntotal/ideal.hpp"
#include "ntotal/ring.hpp"

namespace ntotal {

enum class VertexSelector { All, Reg, ZeroDivisors };

std::string to_string(VertexSelector selector);

// Finite or infinite value of a graph metric; std::nullopt means infinite.
using Metric = std::optional<std::size_t>;

std::string metric_to_string(const Metric& value);

// The graph on the selected elements of R with u ~ v (u != v) iff
// u^n + v^n is a zero-divisor. Immutable once built; adjacency is kept as a
// triangular bit matrix over vertex positions, which follow the ring
// enumeration order.
class NTotalGraph {
 public:
  const RingPtr& ring() const { return ring_; }
  unsigned exponent() const { return n_; }
  VertexSelector selector() const { return selector_; }

  std::size_t vertex_count() const { return vertices_.size(); }

  // Ring enumeration index of the vertex at this position.
  std::size_t vertex_ring_index(std::size_t position) const;
  const Element& vertex_element(std::size_t position) const;
  std::string vertex_label(std::size_t position) const;

  // Position of the given ring element; throws VertexNotInGraph if the
  // element is not a selected vertex.
  std::size_t position_of(const Element& a) const;

  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const { return edge_count_; }

  // Unordered edges (u, v) with u < v, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend NTotalGraph build_graph(const ZeroDivisorProfile& profile, unsigned n,
                                 VertexSelector selector);

 private:
  NTotalGraph() = default;

  RingPtr ring_;
  unsigned n_ = 0;
  VertexSelector selector_ = VertexSelector::All;
  std::vector<std::size_t> vertices_;        // ring indices, ascending
  std::vector<std::size_t> position_of_;     // ring index -> position or npos
  PairBitMatrix adjacency_;
  std::size_t edge_count_ = 0;
};

// Builds the adjacency once from a power table over the vertex set and the
// zero-divisor membership mask.
NTotalGraph build_graph(const ZeroDivisorProfile& profile, unsigned n,
                        VertexSelector selector);
NTotalGraph build_graph(const RingPtr& ring, unsigned n, VertexSelector selector);

// Connected components as vertex position lists; components are ordered by
// their smallest vertex and each component lists its vertices ascending.
std::vector<std::vector<std::size_t>> components(const NTotalGraph& graph);

bool is_connected(const NTotalGraph& graph);
bool is_totally_disconnected(const NTotalGraph& graph);

// BFS distance between two vertices; infinite when they lie in different
// components.
Metric distance(const NTotalGraph& graph, std::size_t u, std::size_t v);
Metric distance(const NTotalGraph& graph, const Element& u, const Element& v);

// Max finite distance; 0 for a single vertex, infinite for a disconnected
// graph on at least two vertices.
Metric diameter(const NTotalGraph& graph);

// Length of a shortest cycle; infinite for forests.
Metric girth(const NTotalGraph& graph);

// Isomorphism class of one component. Singletons are represented as
// Complete(1); K_2 is Complete(2) rather than CompleteBipartite(1, 1).
struct ComponentClass {
  enum class Kind { Complete, CompleteBipartite, Other };

  Kind kind = Kind::Complete;
  // Complete: a = vertex count. CompleteBipartite: part sizes a <= b.
  // Other: a = vertex count, b = edge count.
  std::size_t a = 0;
  std::size_t b = 0;

  static ComponentClass complete(std::size_t k) {
    return {Kind::Complete, k, 0};
  }
  static ComponentClass singleton() { return complete(1); }
  static ComponentClass complete_bipartite(std::size_t a, std::size_t b);
  static ComponentClass other(std::size_t vertices, std::size_t edges) {
    return {Kind::Other, vertices, edges};
  }

  bool is_singleton() const { return kind == Kind::Complete && a == 1; }

  bool operator==(const ComponentClass&) const = default;
  bool operator<(const ComponentClass& o) const;

  std::string to_string() const;
};

// Multiset of component classes, kept sorted.
struct DecompositionSignature {
  std::vector<ComponentClass> classes;

  static DecompositionSignature of(std::vector<ComponentClass> classes);

  std::size_t component_count() const { return classes.size(); }

  bool operator==(const DecompositionSignature&) const = default;

  // Grouped rendering, e.g. "K_7 + 3*K_{7,7}".
  std::string to_string() const;
};

// Classifies one component; the vertex list must be exactly a component of
// the graph (throws NotAComponent otherwise).
ComponentClass classify_component(const NTotalGraph& graph,
                                  std::span<const std::size_t> component);

DecompositionSignature signature(const NTotalGraph& graph);

// Exports. All three are deterministic byte-for-byte for a given graph.
std::string to_dot(const NTotalGraph& graph);
std::string to_json(const NTotalGraph& graph);
std::string to_csv(const NTotalGraph& graph);

}  // namespace ntotal
