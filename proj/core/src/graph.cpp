#include "ntotal/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "json.hpp"

namespace ntotal {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string graph_title(const NTotalGraph& graph) {
  std::string inner = graph.ring()->name();
  switch (graph.selector()) {
    case VertexSelector::All:
      break;
    case VertexSelector::Reg:
      inner = "Reg(" + inner + ")";
      break;
    case VertexSelector::ZeroDivisors:
      inner = "Z(" + inner + ")";
      break;
  }
  return std::to_string(graph.exponent()) + "-T(" + inner + ")";
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Component of the vertex at `seed`, ascending.
std::vector<std::size_t> component_of(const NTotalGraph& graph, std::size_t seed,
                                      Bitset& visited) {
  std::vector<std::size_t> comp;
  std::deque<std::size_t> queue{seed};
  visited.set(seed);
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    comp.push_back(u);
    for (std::size_t w = 0; w < graph.vertex_count(); ++w) {
      if (!visited.test(w) && graph.adjacent(u, w)) {
        visited.set(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<Bitset> adjacency_rows(const NTotalGraph& graph) {
  const auto count = graph.vertex_count();
  std::vector<Bitset> rows(count, Bitset(count));
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = u + 1; v < count; ++v)
      if (graph.adjacent(u, v)) {
        rows[u].set(v);
        rows[v].set(u);
      }
  return rows;
}

std::size_t eccentricity(const std::vector<Bitset>& rows, std::size_t source) {
  const auto count = rows.size();
  Bitset visited(count), frontier(count);
  visited.set(source);
  frontier.set(source);
  std::size_t ecc = 0;
  while (true) {
    Bitset next(count);
    frontier.for_each([&](std::size_t v) { next |= rows[v]; });
    next.and_not(visited);
    if (next.none()) return ecc;
    ++ecc;
    visited |= next;
    frontier = std::move(next);
  }
}

}  // namespace

std::string to_string(VertexSelector selector) {
  switch (selector) {
    case VertexSelector::All:
      return "all";
    case VertexSelector::Reg:
      return "reg";
    case VertexSelector::ZeroDivisors:
      return "zd";
  }
  return "all";
}

std::string metric_to_string(const Metric& value) {
  return value ? std::to_string(*value) : "inf";
}

std::size_t NTotalGraph::vertex_ring_index(std::size_t position) const {
  if (position >= vertices_.size())
    throw Error(ErrorCode::VertexNotInGraph, "vertex position out of range");
  return vertices_[position];
}

const Element& NTotalGraph::vertex_element(std::size_t position) const {
  return ring_->element_at(vertex_ring_index(position));
}

std::string NTotalGraph::vertex_label(std::size_t position) const {
  return ring_->to_string(vertex_element(position));
}

std::size_t NTotalGraph::position_of(const Element& a) const {
  if (!ring_->contains(a))
    throw Error(ErrorCode::VertexNotInGraph,
                "element does not belong to " + ring_->name());
  const auto position = position_of_[ring_->index_of(a)];
  if (position == npos)
    throw Error(ErrorCode::VertexNotInGraph,
                "element " + ring_->to_string(a) + " is not a vertex of " +
                    graph_title(*this));
  return position;
}

bool NTotalGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= vertices_.size() || v >= vertices_.size())
    throw Error(ErrorCode::VertexNotInGraph, "vertex position out of range");
  if (u == v) return false;
  return adjacency_.test(u, v);
}

std::size_t NTotalGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (adjacent(u, v)) ++d;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> NTotalGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    for (std::size_t v = u + 1; v < vertices_.size(); ++v)
      if (adjacency_.test(u, v)) out.emplace_back(u, v);
  return out;
}

NTotalGraph build_graph(const ZeroDivisorProfile& profile, unsigned n,
                        VertexSelector selector) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  const auto& ring = *profile.ring;

  NTotalGraph graph;
  graph.ring_ = profile.ring;
  graph.n_ = n;
  graph.selector_ = selector;
  switch (selector) {
    case VertexSelector::All:
      graph.vertices_.resize(ring.cardinality());
      for (std::size_t i = 0; i < ring.cardinality(); ++i) graph.vertices_[i] = i;
      break;
    case VertexSelector::Reg:
      graph.vertices_ = profile.regulars;
      break;
    case VertexSelector::ZeroDivisors:
      graph.vertices_ = profile.zero_divisors;
      break;
  }
  const auto count = graph.vertices_.size();
  graph.position_of_.assign(ring.cardinality(), npos);
  for (std::size_t p = 0; p < count; ++p)
    graph.position_of_[graph.vertices_[p]] = p;

  // Adjacency depends on vertices only through their n-th powers, so group
  // vertices by power value and decide each class pair once.
  std::vector<std::size_t> power_value;          // class id -> ring index of the power
  std::vector<std::vector<std::size_t>> members;  // class id -> vertex positions
  {
    std::unordered_map<std::size_t, std::size_t> class_of_power;
    for (std::size_t p = 0; p < count; ++p) {
      const auto pw = ring.pow_index(graph.vertices_[p], n);
      auto [it, added] = class_of_power.try_emplace(pw, power_value.size());
      if (added) {
        power_value.push_back(pw);
        members.emplace_back();
      }
      members[it->second].push_back(p);
    }
  }

  graph.adjacency_ = PairBitMatrix(count);
  for (std::size_t a = 0; a < power_value.size(); ++a) {
    for (std::size_t b = a; b < power_value.size(); ++b) {
      const auto sum = ring.add_index(power_value[a], power_value[b]);
      if (!profile.zd_mask.test(sum)) continue;
      const auto& ma = members[a];
      const auto& mb = members[b];
      if (a == b) {
        for (std::size_t x = 0; x < ma.size(); ++x)
          for (std::size_t y = x + 1; y < ma.size(); ++y)
            graph.adjacency_.set(ma[x], ma[y]);
        graph.edge_count_ += ma.size() * (ma.size() - 1) / 2;
      } else {
        for (const auto u : ma)
          for (const auto v : mb) graph.adjacency_.set(u, v);
        graph.edge_count_ += ma.size() * mb.size();
      }
    }
  }
  return graph;
}

NTotalGraph build_graph(const RingPtr& ring, unsigned n, VertexSelector selector) {
  return build_graph(zero_divisor_profile(ring), n, selector);
}

std::vector<std::vector<std::size_t>> components(const NTotalGraph& graph) {
  std::vector<std::vector<std::size_t>> out;
  Bitset visited(graph.vertex_count());
  for (std::size_t seed = 0; seed < graph.vertex_count(); ++seed)
    if (!visited.test(seed)) out.push_back(component_of(graph, seed, visited));
  return out;
}

bool is_connected(const NTotalGraph& graph) {
  Bitset visited(graph.vertex_count());
  return graph.vertex_count() > 0 &&
         component_of(graph, 0, visited).size() == graph.vertex_count();
}

bool is_totally_disconnected(const NTotalGraph& graph) {
  return graph.edge_count() == 0;
}

Metric distance(const NTotalGraph& graph, std::size_t u, std::size_t v) {
  if (u >= graph.vertex_count() || v >= graph.vertex_count())
    throw Error(ErrorCode::VertexNotInGraph, "vertex position out of range");
  if (u == v) return 0;
  const auto count = graph.vertex_count();
  std::vector<std::size_t> dist(count, npos);
  std::deque<std::size_t> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < count; ++w) {
      if (dist[w] == npos && graph.adjacent(x, w)) {
        dist[w] = dist[x] + 1;
        if (w == v) return dist[w];
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

Metric distance(const NTotalGraph& graph, const Element& u, const Element& v) {
  return distance(graph, graph.position_of(u), graph.position_of(v));
}

Metric diameter(const NTotalGraph& graph) {
  const auto count = graph.vertex_count();
  if (count <= 1) return 0;
  if (!is_connected(graph)) return std::nullopt;
  const auto rows = adjacency_rows(graph);
  std::size_t best = 0;
  for (std::size_t s = 0; s < count; ++s)
    best = std::max(best, eccentricity(rows, s));
  return best;
}

Metric girth(const NTotalGraph& graph) {
  const auto count = graph.vertex_count();
  std::vector<std::vector<std::size_t>> nbrs(count);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = u + 1; v < count; ++v)
      if (graph.adjacent(u, v)) {
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
      }

  std::size_t best = npos;
  std::vector<std::size_t> dist(count), parent(count);
  for (std::size_t s = 0; s < count && best != 3; ++s) {
    std::fill(dist.begin(), dist.end(), npos);
    std::fill(parent.begin(), parent.end(), npos);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      // every cycle through vertices at this depth has length >= 2*dist[u]
      if (best != npos && 2 * dist[u] >= best) break;
      for (const auto w : nbrs[u]) {
        if (dist[w] == npos) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == npos) return std::nullopt;
  return best;
}

ComponentClass ComponentClass::complete_bipartite(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 1) return complete(2);  // K_{1,1} and K_2 coincide
  return {Kind::CompleteBipartite, a, b};
}

bool ComponentClass::operator<(const ComponentClass& o) const {
  const auto rank = [](Kind k) {
    return k == Kind::Complete ? 0 : k == Kind::CompleteBipartite ? 1 : 2;
  };
  if (rank(kind) != rank(o.kind)) return rank(kind) < rank(o.kind);
  if (a != o.a) return a > o.a;
  return b > o.b;
}

std::string ComponentClass::to_string() const {
  switch (kind) {
    case Kind::Complete:
      return "K_" + std::to_string(a);
    case Kind::CompleteBipartite:
      return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::Other:
      return "Other(" + std::to_string(a) + "v," + std::to_string(b) + "e)";
  }
  return "";
}

DecompositionSignature DecompositionSignature::of(
    std::vector<ComponentClass> classes) {
  std::sort(classes.begin(), classes.end());
  return {std::move(classes)};
}

std::string DecompositionSignature::to_string() const {
  if (classes.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < classes.size();) {
    std::size_t run = i + 1;
    while (run < classes.size() && classes[run] == classes[i]) ++run;
    if (!out.empty()) out += " + ";
    if (run - i > 1) out += std::to_string(run - i) + "*";
    out += classes[i].to_string();
    i = run;
  }
  return out;
}

ComponentClass classify_component(const NTotalGraph& graph,
                                  std::span<const std::size_t> component) {
  if (component.empty())
    throw Error(ErrorCode::NotAComponent, "empty vertex list");
  for (const auto v : component)
    if (v >= graph.vertex_count())
      throw Error(ErrorCode::VertexNotInGraph, "vertex position out of range");

  Bitset visited(graph.vertex_count());
  const auto actual = component_of(graph, component[0], visited);
  std::vector<std::size_t> given(component.begin(), component.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != actual)
    throw Error(ErrorCode::NotAComponent,
                "vertex list is not a connected component");

  const auto k = actual.size();
  if (k == 1) return ComponentClass::singleton();

  std::size_t edges = 0;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      if (graph.adjacent(actual[x], actual[y])) ++edges;

  if (edges == k * (k - 1) / 2) return ComponentClass::complete(k);

  // 2-color by BFS layer parity; the component is connected by construction
  std::unordered_map<std::size_t, int> color;
  std::deque<std::size_t> queue{actual[0]};
  color[actual[0]] = 0;
  bool bipartite = true;
  while (!queue.empty() && bipartite) {
    const auto u = queue.front();
    queue.pop_front();
    for (const auto w : actual) {
      if (!graph.adjacent(u, w)) continue;
      auto it = color.find(w);
      if (it == color.end()) {
        color[w] = 1 - color[u];
        queue.push_back(w);
      } else if (it->second == color[u]) {
        bipartite = false;
        break;
      }
    }
  }
  if (bipartite) {
    std::size_t side = 0;
    for (const auto v : actual) side += static_cast<std::size_t>(color[v] == 0);
    if (edges == side * (k - side))
      return ComponentClass::complete_bipartite(side, k - side);
  }
  return ComponentClass::other(k, edges);
}

DecompositionSignature signature(const NTotalGraph& graph) {
  std::vector<ComponentClass> classes;
  for (const auto& comp : components(graph))
    classes.push_back(classify_component(graph, comp));
  return DecompositionSignature::of(std::move(classes));
}

std::string to_dot(const NTotalGraph& graph) {
  const auto comps = components(graph);
  std::vector<std::size_t> comp_of(graph.vertex_count(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto v : comps[c]) comp_of[v] = c;

  std::string out = "graph \"" + graph_title(graph) + "\" {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + graph.vertex_label(v) +
           "\", component=" + std::to_string(comp_of[v]) + "];\n";
  for (const auto& [u, v] : graph.edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  return out + "}\n";
}

std::string to_json(const NTotalGraph& graph) {
  ordered_json doc;
  doc["ring"] = graph.ring()->name();
  doc["n"] = graph.exponent();
  doc["selector"] = to_string(graph.selector());
  auto& vertices = doc["vertices"] = ordered_json::array();
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    vertices.push_back(graph.vertex_label(v));
  auto& edges = doc["edges"] = ordered_json::array();
  for (const auto& [u, v] : graph.edges())
    edges.push_back(
        ordered_json::array({graph.vertex_label(u), graph.vertex_label(v)}));
  auto& sig = doc["signature"] = ordered_json::array();
  for (const auto& cls : signature(graph).classes) sig.push_back(cls.to_string());
  const auto diam = diameter(graph);
  doc["diameter"] = diam ? ordered_json(*diam) : ordered_json(nullptr);
  const auto g = girth(graph);
  doc["girth"] = g ? ordered_json(*g) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

std::string to_csv(const NTotalGraph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.edges())
    out += quote_csv(graph.vertex_label(u)) + "," + quote_csv(graph.vertex_label(v)) +
           "\n";
  return out;
}

}  // namespace ntotal
