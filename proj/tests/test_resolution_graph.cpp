#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "conifold/error.hpp"
#include "conifold/resolution_graph.hpp"

using namespace conifold;

namespace {

// N classes of two nodes each, base chosen consistent.
ConifoldData data_with_classes(std::size_t big_n) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < big_n; ++k) classes.push_back({2 * k, 2 * k + 1});
  auto base = GradedSpace::from_dims({1, 0, 1, 0, 1 + static_cast<long long>(big_n), 0, 1});
  return ConifoldData(base, 2 * big_n, classes);
}

unsigned mask_of(const ResolutionChoice& c) {
  unsigned m = 0;
  for (std::size_t k = 0; k < c.class_count(); ++k) m |= static_cast<unsigned>(c.orientation[k]) << k;
  return m;
}

}  // namespace

TEST(Enumerate, CountsArePowersOfTwo) {
  for (std::size_t big_n = 1; big_n <= 10; ++big_n) {
    auto e = enumerate_small_resolutions(data_with_classes(big_n));
    EXPECT_EQ(e.choices.size(), std::size_t{1} << big_n);
    std::set<unsigned> masks;
    for (const auto& c : e.choices) {
      EXPECT_EQ(c.class_count(), big_n);
      masks.insert(mask_of(c));
    }
    EXPECT_EQ(masks.size(), e.choices.size());
    EXPECT_EQ(e.naive_count, std::to_string(1ULL << (2 * big_n)));
  }
  ConifoldData empty(GradedSpace::from_dims({1}), 0, {});
  EXPECT_EQ(enumerate_small_resolutions(empty).choices.size(), 1U);
}

TEST(Enumerate, NaiveCountIsExactForManyNodes) {
  std::vector<std::size_t> all(125);
  std::iota(all.begin(), all.end(), 0);
  ConifoldData d(GradedSpace::from_dims({1, 0, 1, 0, 2, 0, 1}), 125, {all});
  EXPECT_EQ(enumerate_small_resolutions(d).naive_count, "42535295865117307932921825928971026432");
}

TEST(Enumerate, ResourceLimit) {
  try {
    enumerate_small_resolutions(data_with_classes(21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
}

TEST(Flop, Examples) {
  EXPECT_EQ(flop(ResolutionChoice{{false}}, 1), ResolutionChoice{{true}});
  EXPECT_EQ(flop(ResolutionChoice{{false, true, false}}, 2), (ResolutionChoice{{false, false, false}}));
  EXPECT_THROW(flop(ResolutionChoice{{false}}, 0), Error);
  EXPECT_THROW(flop(ResolutionChoice{{false}}, 2), Error);
}

TEST(Flop, RandomInvolution) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t big_n = 1 + rng() % 12;
    ResolutionChoice c;
    for (std::size_t k = 0; k < big_n; ++k) c.orientation.push_back(rng() & 1U);
    std::size_t k = 1 + rng() % big_n;
    ResolutionChoice f = flop(c, k);
    EXPECT_EQ(hamming_distance(c, f), 1U);
    EXPECT_EQ(flop(f, k), c);
  }
}

TEST(Graph, SingleClassDiagram) {
  auto g = build_transition_graph(data_with_classes(1));
  ASSERT_EQ(g.vertices.size(), 4U);
  EXPECT_EQ(g.edges.size(), 4U);
  const auto flat = g.index_of("M_flat");
  const auto bar = g.index_of("V_bar");
  const auto r1 = g.index_of("M_res_1");
  const auto r2 = g.index_of("M_res_2");
  auto has = [&](std::size_t a, std::size_t b, EdgeKind k) {
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) {
      return e.kind == k && ((e.from == a && e.to == b) || (e.from == b && e.to == a));
    });
  };
  EXPECT_TRUE(has(flat, bar, EdgeKind::Defo));
  EXPECT_TRUE(has(bar, r1, EdgeKind::Exoflop));
  EXPECT_TRUE(has(bar, r2, EdgeKind::Exoflop));
  EXPECT_TRUE(has(r1, r2, EdgeKind::Flop));
  EXPECT_FALSE(g.hypercube_extension);
  EXPECT_NE(g.edges[0].note.find("3-bundle"), std::string::npos);
}

TEST(Graph, TwoClasses) {
  auto g = build_transition_graph(data_with_classes(2));
  EXPECT_EQ(g.vertices.size(), 6U);
  EXPECT_EQ(g.count(EdgeKind::Defo), 1U);
  EXPECT_EQ(g.count(EdgeKind::Exoflop), 4U);
  EXPECT_EQ(g.count(EdgeKind::Flop), 4U);
  EXPECT_TRUE(g.hypercube_extension);
}

TEST(Graph, NoNodes) {
  ConifoldData d(GradedSpace::from_dims({1, 0, 1, 204, 1, 0, 1}), 0, {});
  auto g = build_transition_graph(d);
  EXPECT_EQ(g.vertices.size(), 1U);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Graph, HypercubeProperties) {
  for (std::size_t big_n = 1; big_n <= 7; ++big_n) {
    auto d = data_with_classes(big_n);
    auto g = build_transition_graph(d);
    EXPECT_EQ(g.count(EdgeKind::Flop), big_n << (big_n - 1));
    const GradedSpace closure = cohomology_of_closure(d);
    std::vector<std::size_t> res;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.vertices[i].kind != VertexKind::Resolution) continue;
      res.push_back(i);
      EXPECT_EQ(g.degree(i, EdgeKind::Exoflop), 1U);
      EXPECT_EQ(g.degree(i, EdgeKind::Flop), big_n);
      ASSERT_TRUE(g.vertices[i].dims);
      EXPECT_EQ((*g.vertices[i].dims)[2], d.base()[2] + static_cast<long long>(big_n));
      EXPECT_EQ(*g.vertices[i].dims, closure);
    }
    // Brute force: flop edge iff the orientations differ in exactly one bit.
    for (auto a : res) {
      for (auto b : res) {
        if (a >= b) continue;
        const bool adjacent = std::popcount(mask_of(*g.vertices[a].choice) ^ mask_of(*g.vertices[b].choice)) == 1;
        const bool edge = std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) {
          return e.kind == EdgeKind::Flop && e.from == a && e.to == b;
        });
        EXPECT_EQ(adjacent, edge);
      }
    }
  }
}

TEST(Dot, Labels) {
  std::string dot = to_dot(build_transition_graph(data_with_classes(1)));
  EXPECT_EQ(dot.rfind("graph transitions {", 0), 0U);
  EXPECT_NE(dot.find("M_flat -- V_bar [label=\"defo\"]"), std::string::npos);
  EXPECT_NE(dot.find("V_bar -- M_res_2 [label=\"exoflop\"]"), std::string::npos);
  EXPECT_NE(dot.find("M_res_1 -- M_res_2 [label=\"flop 1\"]"), std::string::npos);
}
