#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "ksync/graph.hpp"
#include "ksync/rng.hpp"

using namespace ksync;
using namespace ksync::testing;

namespace {

ThresholdCode random_code(std::size_t length, uint64_t seed) {
  std::vector<bool> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = uniform01(seed, i) < 0.5;
  return ThresholdCode(std::move(bits));
}

}  // namespace

TEST_CASE("construction codes parse strictly") {
  CHECK(ThresholdCode::parse("1").length() == 1);
  CHECK(ThresholdCode::parse("1").vertex_count() == 2);

  ThresholdCode star = ThresholdCode::parse("000000000000000001");
  CHECK(star.length() == 18);
  CHECK(star.connected());

  try {
    ThresholdCode::parse("01a1");
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::InvalidCharacter);
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  try {
    ThresholdCode::parse("");
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
  CHECK(ThresholdCode::parse("0110").str() == "0110");
}

TEST_CASE("building a code yields the expected graphs") {
  Graph clique = build_threshold(ThresholdCode::parse("111111111111111111"));
  CHECK(clique.vertex_count() == 19);
  CHECK(clique.edge_count() == 171);
  CHECK(clique == complete_graph(19));

  Graph star = build_threshold(ThresholdCode::parse("000000000000000001"));
  CHECK(star.edge_count() == 18);
  CHECK(star.degree(18) == 18);
  for (int v = 0; v < 18; ++v) CHECK(star.degree(v) == 1);

  Graph alternating = build_threshold(ThresholdCode::parse("01010101"));
  CHECK(alternating == Graph(9, alternating9_edges()));

  Graph single = build_threshold(ThresholdCode{});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("edge count follows directly from the code") {
  CHECK(edge_count_from_code(ThresholdCode::parse("000000000000000001")) == 18);
  CHECK(edge_count_from_code(ThresholdCode{}) == 0);
  CHECK(edge_count_from_code(ThresholdCode::parse("01010101")) == 20);

  for (int trial = 0; trial < 200; ++trial) {
    uint64_t seed = derive_seed(17, static_cast<uint64_t>(trial));
    auto length = static_cast<std::size_t>(uniform01(seed, 1000) * 65);
    ThresholdCode code = random_code(length, seed);
    CHECK(edge_count_from_code(code) == build_threshold(code).edge_count());
  }
}

TEST_CASE("recognition peels generated graphs back to their codes") {
  CHECK_THROWS_AS(recognize_threshold(path_graph(4)), DomainError);
  CHECK(recognize_threshold(build_threshold(ThresholdCode::parse("0101"))).str() ==
        "0101");
  CHECK(recognize_threshold(complete_graph(5)).str() == "1111");
  CHECK(recognize_threshold(Graph(1)).length() == 0);

  // Exhaustive roundtrip over all codes up to length 9.
  for (int length = 0; length <= 9; ++length) {
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
      std::vector<bool> bits(static_cast<std::size_t>(length));
      for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = mask >> i & 1u;
      ThresholdCode code(bits);
      CHECK(recognize_threshold(build_threshold(code)) == code);
    }
  }
}

TEST_CASE("recognition handles relabeled inputs") {
  // Threshold graphs are determined by their degree sequences, so a peel of
  // any relabeling must rebuild to the same sorted degrees.
  for (int trial = 0; trial < 30; ++trial) {
    uint64_t seed = derive_seed(37, static_cast<uint64_t>(trial));
    auto length = 1 + static_cast<std::size_t>(uniform01(seed, 999) * 12);
    ThresholdCode code = random_code(length, seed);
    Graph g = build_threshold(code);
    const int n = g.vertex_count();

    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(uniform01(seed, 2000 + static_cast<uint64_t>(i)) * (i + 1));
      std::swap(relabel[static_cast<std::size_t>(i)], relabel[static_cast<std::size_t>(j)]);
    }
    Graph shuffled(n);
    for (auto [u, v] : g.edges()) shuffled.add_edge(relabel[u], relabel[v]);

    Graph rebuilt = build_threshold(recognize_threshold(shuffled));
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
      da.push_back(shuffled.degree(v));
      db.push_back(rebuilt.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
  }
}

TEST_CASE("forbidden quadruple scan") {
  CHECK_FALSE(is_forbidden_free(cycle_graph(4)));
  CHECK(is_forbidden_free(complete_graph(4)));
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_forbidden_free(two_edges));
  CHECK_FALSE(is_forbidden_free(path_graph(4)));
  CHECK(is_forbidden_free(path_graph(3)));
}

TEST_CASE("neighborhood nesting") {
  CHECK(nested_neighborhoods(star_graph(4)));
  CHECK_FALSE(nested_neighborhoods(path_graph(4)));
  CHECK(nested_neighborhoods(build_threshold(ThresholdCode::parse("0101"))));
}

TEST_CASE("the three recognition routes agree on every small graph") {
  for (int n = 1; n <= 5; ++n) {
    unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      bool peels = true;
      try {
        recognize_threshold(g);
      } catch (const DomainError&) {
        peels = false;
      }
      CHECK(peels == is_forbidden_free(g));
      CHECK(peels == nested_neighborhoods(g));
    }
  }
}

TEST_CASE("weight representations verify against every pair") {
  WeightRep k2 = weight_representation(complete_graph(2));
  CHECK(k2.weights[0] + k2.weights[1] >= k2.threshold);

  Graph s3 = star_graph(3);
  WeightRep rep = weight_representation(s3);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      CHECK((rep.weights[u] + rep.weights[v] >= rep.threshold) ==
            s3.adjacent(u, v));
    }
  }

  CHECK_THROWS_AS(weight_representation(path_graph(4)), DomainError);

  for (int trial = 0; trial < 50; ++trial) {
    uint64_t seed = derive_seed(23, static_cast<uint64_t>(trial));
    auto length = static_cast<std::size_t>(uniform01(seed, 999) * 33);
    Graph g = build_threshold(random_code(length, seed));
    WeightRep r = weight_representation(g);  // self-verifying
    CHECK(r.weights.size() == static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST_CASE("closed twin classes") {
  TwinPartition clique = closed_twin_classes(complete_graph(6));
  REQUIRE(clique.classes.size() == 1);
  CHECK(clique.classes[0].size() == 6);

  TwinPartition alternating =
      closed_twin_classes(Graph(9, alternating9_edges()));
  CHECK(alternating.classes.size() == 9);  // no two vertices merge

  TwinPartition mill = closed_twin_classes(windmill(3, 2));
  REQUIRE(mill.classes.size() == 3);
  CHECK(mill.classes[0] == std::vector<int>{0});
  CHECK(mill.classes[1].size() == 2);
  CHECK(mill.classes[2].size() == 2);

  // Soundness: same class means equal closed neighborhoods, different class
  // means different ones.
  for (int trial = 0; trial < 20; ++trial) {
    uint64_t seed = derive_seed(29, static_cast<uint64_t>(trial));
    Graph g = build_threshold(random_code(10, seed));
    TwinPartition partition = closed_twin_classes(g);
    std::vector<int> class_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
      for (int v : partition.classes[c]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        bool same_closed = g.closed_neighborhood(u) == g.closed_neighborhood(v);
        CHECK(same_closed == (class_of[u] == class_of[v]));
      }
    }
  }
}

TEST_CASE("block decomposition splits the creation sequence") {
  BlockStructure alternating =
      block_decomposition(ThresholdCode::parse("01010101"));
  REQUIRE(alternating.block_count() == 4);
  CHECK(alternating.isolated_blocks[0] == std::vector<int>{0, 1});
  CHECK(alternating.dominating_blocks[0] == std::vector<int>{2});
  CHECK(alternating.isolated_blocks[3] == std::vector<int>{7});
  CHECK(alternating.dominating_blocks[3] == std::vector<int>{8});

  BlockStructure run = block_decomposition(ThresholdCode::parse("111"));
  REQUIRE(run.block_count() == 1);
  CHECK(run.isolated_blocks[0] == std::vector<int>{0});
  CHECK(run.dominating_blocks[0] == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(block_decomposition(ThresholdCode::parse("0110")), DomainError);

  // Blocks partition the vertex set and restore creation order when
  // concatenated alternately.
  for (int trial = 0; trial < 40; ++trial) {
    uint64_t seed = derive_seed(31, static_cast<uint64_t>(trial));
    auto length = static_cast<std::size_t>(uniform01(seed, 999) * 20);
    std::vector<bool> bits(length);
    for (std::size_t i = 0; i < length; ++i) bits[i] = uniform01(seed, i) < 0.5;
    if (!bits.empty()) bits.back() = true;
    ThresholdCode code{bits};
    BlockStructure blocks = block_decomposition(code);
    std::vector<int> restored;
    for (int b = 0; b < blocks.block_count(); ++b) {
      restored.insert(restored.end(), blocks.isolated_blocks[b].begin(),
                      blocks.isolated_blocks[b].end());
      restored.insert(restored.end(), blocks.dominating_blocks[b].begin(),
                      blocks.dominating_blocks[b].end());
    }
    if (blocks.block_count() == 0) restored = blocks.isolated_blocks[0];
    std::vector<int> expected(static_cast<std::size_t>(code.vertex_count()));
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(restored == expected);
  }
}

TEST_CASE("windmills") {
  Graph star_like = windmill(2, 5);
  CHECK(star_like == star_graph(5));

  Graph mill = windmill(5, 6);
  CHECK(mill.vertex_count() == 25);
  CHECK(mill.edge_count() == 60);  // six K_5 blades sharing the hub
  CHECK(mill.degree(0) == 24);

  CHECK_THROWS_AS(windmill(1, 3), DomainError);
  CHECK_THROWS_AS(windmill(3, 0), DomainError);
}
