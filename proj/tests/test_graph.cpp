#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ntotal/graph.hpp"
#include "ntotal/ideal.hpp"
#include "ntotal/ring.hpp"
#include "oracles.hpp"

using ntotal::ComponentClass;
using ntotal::DecompositionSignature;
using ntotal::Element;
using ntotal::Metric;
using ntotal::VertexSelector;

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// edges as unordered pairs of ring indices
std::set<Edge> ring_index_edges(const ntotal::NTotalGraph& graph) {
  std::set<Edge> out;
  for (const auto& [u, v] : graph.edges()) {
    auto a = graph.vertex_ring_index(u);
    auto b = graph.vertex_ring_index(v);
    if (a > b) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

ntotal::NTotalGraph graph_of(const char* text, unsigned n,
                             VertexSelector selector = VertexSelector::All) {
  return ntotal::build_graph(ntotal::parse_ring(text), n, selector);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("adjacency matches a definitional recomputation") {
  const std::vector<const char*> rings = {
      "Z2",       "Z5",     "Z6",      "Z8",       "Z9",
      "Z12",      "Z16",    "Z21",     "Z30",      "GF(2)[x]/(x^2+x+1)",
      "GF(3)[x]/(x^2)",     "GF(2)[x]/(x^3+x+1)",  "Z2 x Z2",
      "Z2 x Z4",  "Z3 x Z3", "Z2 x Z2 x Z2",
  };
  for (const auto* text : rings) {
    CAPTURE(text);
    const auto ring = ntotal::parse_ring(text);
    const auto profile = ntotal::zero_divisor_profile(ring);
    for (const unsigned n : {1u, 2u, 3u, 5u}) {
      CAPTURE(n);
      const auto graph = ntotal::build_graph(profile, n, VertexSelector::All);
      REQUIRE(graph.vertex_count() == ring->cardinality());
      std::size_t expected_edges = 0;
      for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
        CHECK_FALSE(graph.adjacent(u, u));
        for (std::size_t v = u + 1; v < graph.vertex_count(); ++v) {
          const bool expected = oracle::naive_adjacent(
              *ring, graph.vertex_ring_index(u), graph.vertex_ring_index(v), n);
          CHECK(graph.adjacent(u, v) == expected);
          CHECK(graph.adjacent(v, u) == expected);
          if (expected) ++expected_edges;
        }
      }
      CHECK(graph.edge_count() == expected_edges);
    }
  }
}

TEST_CASE("selector graphs are induced subgraphs") {
  for (const auto* text : {"Z6", "Z8", "Z12", "Z2 x Z4"}) {
    CAPTURE(text);
    const auto ring = ntotal::parse_ring(text);
    const auto profile = ntotal::zero_divisor_profile(ring);
    for (const unsigned n : {1u, 2u, 3u}) {
      const auto all = ntotal::build_graph(profile, n, VertexSelector::All);
      const auto reg = ntotal::build_graph(profile, n, VertexSelector::Reg);
      const auto zd =
          ntotal::build_graph(profile, n, VertexSelector::ZeroDivisors);

      std::vector<std::size_t> reg_indices, zd_indices;
      for (std::size_t p = 0; p < reg.vertex_count(); ++p)
        reg_indices.push_back(reg.vertex_ring_index(p));
      for (std::size_t p = 0; p < zd.vertex_count(); ++p)
        zd_indices.push_back(zd.vertex_ring_index(p));
      CHECK(reg_indices == profile.regulars);
      CHECK(zd_indices == profile.zero_divisors);

      for (std::size_t u = 0; u < reg.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < reg.vertex_count(); ++v)
          CHECK(reg.adjacent(u, v) ==
                all.adjacent(all.position_of(reg.vertex_element(u)),
                             all.position_of(reg.vertex_element(v))));
      for (std::size_t u = 0; u < zd.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < zd.vertex_count(); ++v)
          CHECK(zd.adjacent(u, v) ==
                all.adjacent(all.position_of(zd.vertex_element(u)),
                             all.position_of(zd.vertex_element(v))));
    }
  }
}

TEST_CASE("known small graphs are reproduced edge for edge") {
  CHECK(ring_index_edges(graph_of("Z6", 2)) ==
        std::set<Edge>{{0, 2}, {0, 3}, {0, 4}, {2, 4}, {1, 3}, {1, 5}, {3, 5}});
  CHECK(ring_index_edges(graph_of("Z6", 3)) ==
        std::set<Edge>{{0, 2},
                       {0, 3},
                       {0, 4},
                       {2, 4},
                       {1, 3},
                       {1, 5},
                       {3, 5},
                       {1, 2},
                       {4, 5}});

  // Z_8 splits into the even and odd K_4 blocks for every exponent
  for (unsigned n = 1; n <= 4; ++n) {
    std::set<Edge> expected;
    for (const auto& block :
         {std::vector<std::size_t>{0, 2, 4, 6}, std::vector<std::size_t>{1, 3, 5, 7}})
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
          expected.insert({block[i], block[j]});
    CHECK(ring_index_edges(graph_of("Z8", n)) == expected);
  }

  // regular elements of Z_6 are 1 and 5; 1 + 125 = 126 = 0 in Z_6
  CHECK(ring_index_edges(graph_of("Z6", 3, VertexSelector::Reg)) ==
        std::set<Edge>{{1, 5}});

  // (a,b) at ring index 3a+b
  CHECK(ring_index_edges(graph_of("Z3 x Z3", 2)) ==
        std::set<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 6}, {3, 6}});

  // (a,b) at ring index 2a+b: a 4-cycle
  CHECK(ring_index_edges(graph_of("Z2 x Z2", 2)) ==
        std::set<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("components are ordered partitions") {
  const auto graph = graph_of("Z8", 2);
  const auto parts = ntotal::components(graph);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(parts[1] == std::vector<std::size_t>{1, 3, 5, 7});

  CHECK_FALSE(ntotal::is_connected(graph));
  CHECK(ntotal::is_connected(graph_of("Z6", 2)));
  CHECK(ntotal::is_totally_disconnected(graph_of("Z9", 2, VertexSelector::Reg)));
  CHECK_FALSE(ntotal::is_totally_disconnected(graph_of("Z6", 2)));
}

TEST_CASE("distances, diameter, and girth") {
  const auto z6n2 = graph_of("Z6", 2);
  CHECK(ntotal::distance(z6n2, Element::residue(0), Element::residue(1)) ==
        Metric(2));
  CHECK(ntotal::distance(z6n2, Element::residue(0), Element::residue(0)) ==
        Metric(0));
  CHECK(ntotal::diameter(z6n2) == Metric(3));
  CHECK(ntotal::girth(z6n2) == Metric(3));  // 0-2-4

  CHECK(ntotal::diameter(graph_of("Z6", 3)) == Metric(2));

  const auto z3z3 = graph_of("Z3 x Z3", 2);
  const auto zero = Element::tuple({Element::residue(0), Element::residue(0)});
  const auto one = Element::tuple({Element::residue(1), Element::residue(1)});
  CHECK_FALSE(ntotal::distance(z3z3, zero, one).has_value());
  CHECK_FALSE(ntotal::diameter(z3z3).has_value());

  // single vertex: diameter 0, no cycles
  const auto z2reg = graph_of("Z2", 1, VertexSelector::Reg);
  CHECK(z2reg.vertex_count() == 1);
  CHECK(ntotal::diameter(z2reg) == Metric(0));
  CHECK_FALSE(ntotal::girth(z2reg).has_value());

  // K_4 on the regulars of Z_8
  const auto z8reg = graph_of("Z8", 2, VertexSelector::Reg);
  CHECK(ntotal::diameter(z8reg) == Metric(1));
  CHECK(ntotal::girth(z8reg) == Metric(3));

  // K_{10,10} on the regulars of Z_25: shortest cycle is a square
  const auto z25reg = graph_of("Z25", 2, VertexSelector::Reg);
  CHECK(ntotal::diameter(z25reg) == Metric(2));
  CHECK(ntotal::girth(z25reg) == Metric(4));

  // totally disconnected regulars: no paths, no cycles
  const auto z9reg = graph_of("Z9", 2, VertexSelector::Reg);
  CHECK_FALSE(ntotal::diameter(z9reg).has_value());
  CHECK_FALSE(ntotal::girth(z9reg).has_value());

  // 4-cycle
  const auto c4 = graph_of("Z2 x Z2", 2);
  CHECK(ntotal::diameter(c4) == Metric(2));
  CHECK(ntotal::girth(c4) == Metric(4));
}

TEST_CASE("component classification") {
  const auto z8 = graph_of("Z8", 2);
  const auto parts = ntotal::components(z8);
  REQUIRE(parts.size() == 2);
  CHECK(ntotal::classify_component(z8, parts[0]) == ComponentClass::complete(4));

  // a strict subset of a component is rejected, as is a union of two
  const std::vector<std::size_t> subset{0, 2};
  CHECK_THROWS_AS(ntotal::classify_component(z8, subset), ntotal::Error);
  std::vector<std::size_t> both = parts[0];
  both.insert(both.end(), parts[1].begin(), parts[1].end());
  std::sort(both.begin(), both.end());
  CHECK_THROWS_AS(ntotal::classify_component(z8, both), ntotal::Error);

  const auto c4 = graph_of("Z2 x Z2", 2);
  const auto c4_parts = ntotal::components(c4);
  REQUIRE(c4_parts.size() == 1);
  CHECK(ntotal::classify_component(c4, c4_parts[0]) ==
        ComponentClass::complete_bipartite(2, 2));

  const auto z3z3 = graph_of("Z3 x Z3", 2);
  const auto z3_parts = ntotal::components(z3z3);
  REQUIRE(z3_parts.size() == 5);
  CHECK(ntotal::classify_component(z3z3, z3_parts[0]) ==
        ComponentClass::other(5, 6));
  CHECK(ntotal::classify_component(z3z3, z3_parts[1]).is_singleton());
}

TEST_CASE("decomposition signatures") {
  CHECK(ntotal::signature(graph_of("Z8", 3)) ==
        DecompositionSignature::of(
            {ComponentClass::complete(4), ComponentClass::complete(4)}));

  CHECK(ntotal::signature(graph_of("Z49", 1)).to_string() ==
        "K_7 + 3*K_{7,7}");
  CHECK(ntotal::signature(graph_of("Z49", 3)).to_string() ==
        "K_7 + K_{21,21}");
  CHECK(ntotal::signature(graph_of("Z9", 1)).to_string() == "K_3 + K_{3,3}");

  // normalization: K_{1,1} renders as K_2, one vertex as K_1
  CHECK(ComponentClass::complete_bipartite(1, 1) == ComponentClass::complete(2));
  CHECK(ComponentClass::complete_bipartite(3, 1) ==
        ComponentClass::complete_bipartite(1, 3));
  CHECK(ComponentClass::singleton().to_string() == "K_1");

  // of() sorts, so signatures compare as multisets
  const auto sig1 = DecompositionSignature::of(
      {ComponentClass::complete(2), ComponentClass::complete(7)});
  const auto sig2 = DecompositionSignature::of(
      {ComponentClass::complete(7), ComponentClass::complete(2)});
  CHECK(sig1 == sig2);
}

TEST_CASE("exports are deterministic and well formed") {
  const auto graph = graph_of("Z2 x Z3", 2);

  const auto dot = ntotal::to_dot(graph);
  CHECK(dot == ntotal::to_dot(graph));
  CHECK(dot.find("graph \"2-T(Z2xZ3)\"") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
  CHECK(dot.find("label=\"(0,1)\"") != std::string::npos);

  const auto json = ntotal::to_json(graph);
  CHECK(json == ntotal::to_json(graph));
  CHECK(json.find("\"ring\": \"Z2xZ3\"") != std::string::npos);
  CHECK(json.find("\"selector\": \"all\"") != std::string::npos);

  // tuple labels contain commas, so csv rows must quote them
  const auto csv = ntotal::to_csv(graph);
  CHECK(csv == ntotal::to_csv(graph));
  CHECK(csv.find("\"(") != std::string::npos);

  const auto reg = graph_of("Z8", 2, VertexSelector::Reg);
  CHECK(ntotal::to_dot(reg).find("2-T(Reg(Z8))") != std::string::npos);
}

}  // TEST_SUITE
