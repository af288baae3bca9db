#include <gtest/gtest.h>

#include "botscope/graph.hpp"
#include "botscope/rng.hpp"
#include "support.hpp"

using namespace botscope;
using namespace botscope::graph;
using namespace testing_support;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::string node(std::size_t i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "n%03zu", i);
  return buf;
}

struct RandomGraph {
  AccountSet nodes;
  Pairs edges;
};

RandomGraph random_graph(Rng& rng, std::size_t max_nodes) {
  RandomGraph g;
  std::size_t n = rng.below(max_nodes + 1);
  for (std::size_t i = 0; i < n; ++i) g.nodes.insert(node(i));
  if (n == 0) return g;
  double density = rng.uniform() * 3.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.bernoulli(density)) g.edges.emplace_back(node(i), node(j));
  return g;
}

// Largest weak component by transitive closure of the symmetric adjacency
// matrix (Warshall), ties to the component holding the smallest id.
AccountSet brute_force_largest_wcc(const RandomGraph& rg) {
  std::vector<std::string> ids(rg.nodes.begin(), rg.nodes.end());
  std::size_t n = ids.size();
  if (n == 0) return {};
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[ids[i]] = i;
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [s, t] : rg.edges) r[at[s]][at[t]] = r[at[t]][at[s]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  AccountSet best;
  for (std::size_t i = 0; i < n; ++i) {
    AccountSet comp;
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) comp.insert(ids[j]);
    if (comp.size() > best.size()) best = comp;  // i ascending: first of equal size kept
  }
  return best;
}

}  // namespace

TEST(BuildGraph, ParallelRepliesAccumulate) {
  Fixture fx;
  fx.accounts({"A", "B"});
  for (int i = 0; i < 3; ++i) fx.post("A", TweetKind::reply, "hi", "B");
  auto g = build_graph(fx.build(), EdgeKind::reply);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.id(g.edges()[0].source), "A");
  EXPECT_EQ(g.id(g.edges()[0].target), "B");
  EXPECT_EQ(g.edges()[0].weight, 3u);
}

TEST(BuildGraph, RestrictionDropsOutsideEndpoints) {
  Fixture fx;
  fx.accounts({"A", "B", "C"}).post("A", TweetKind::reply, "x", "C");
  auto g = build_graph(fx.build(), EdgeKind::reply, AccountSet{"A", "B"});
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, QuotesAreNotRetweets) {
  Fixture fx;
  fx.accounts({"A", "B"}).post("A", TweetKind::quote, "x", "B");
  EXPECT_EQ(build_graph(fx.build(), EdgeKind::retweet).edge_count(), 0u);
  Fixture rt;
  rt.accounts({"A", "B"}).post("A", TweetKind::retweet, "x", "B");
  EXPECT_EQ(build_graph(rt.build(), EdgeKind::retweet).edge_count(), 1u);
}

TEST(BuildGraph, FollowEdgesAndOutsideTargets) {
  Fixture fx;
  fx.accounts({"A", "B"}).follow("A", "B").post("B", TweetKind::reply, "x", "ext");
  auto f = build_graph(fx.build(), EdgeKind::follow);
  EXPECT_EQ(f.edge_count(), 1u);
  auto r = build_graph(fx.build(), EdgeKind::reply);
  EXPECT_EQ(r.node_count(), 3u);  // unrestricted graphs include outside endpoints
  EXPECT_TRUE(r.index_of("ext"));
}

TEST(DegreeStats, Chain) {
  InteractionGraph g(EdgeKind::follow, {"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
  auto s = degree_stats(g);
  EXPECT_DOUBLE_EQ(s.mean_in, 2.0 / 3);
  EXPECT_DOUBLE_EQ(s.mean_out, 2.0 / 3);
  EXPECT_EQ(s.in_histogram, (std::map<std::size_t, std::size_t>{{0, 1}, {1, 2}}));
}

TEST(DegreeStats, CompleteDigraph) {
  AccountSet n{"A", "B", "C", "D"};
  Pairs e;
  for (const auto& a : n)
    for (const auto& b : n) e.emplace_back(a, b);
  auto s = degree_stats(InteractionGraph(EdgeKind::reply, n, e));
  EXPECT_DOUBLE_EQ(s.mean_in, 3.0);
  EXPECT_DOUBLE_EQ(s.mean_out, 3.0);
  EXPECT_DOUBLE_EQ(s.sd_in, 0.0);
  EXPECT_DOUBLE_EQ(s.sd_out, 0.0);
}

TEST(DegreeStats, EmptyGraph) {
  auto s = degree_stats(InteractionGraph(EdgeKind::follow, {}, {}));
  EXPECT_EQ(s.mean_in, 0.0);
  EXPECT_TRUE(s.in_histogram.empty());
  EXPECT_TRUE(largest_wcc(InteractionGraph(EdgeKind::follow, {}, {})).empty());
}

TEST(DegreeStats, HandshakeIdentity) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto rg = random_graph(rng, 40);
    InteractionGraph g(EdgeKind::reply, rg.nodes, rg.edges);
    auto s = degree_stats(g);
    std::size_t sum_in = 0, sum_out = 0, nodes_in = 0, nodes_out = 0;
    for (auto [d, c] : s.in_histogram) sum_in += d * c, nodes_in += c;
    for (auto [d, c] : s.out_histogram) sum_out += d * c, nodes_out += c;
    EXPECT_EQ(sum_in, g.edge_count());
    EXPECT_EQ(sum_out, g.edge_count());
    EXPECT_EQ(nodes_in, g.node_count());
    EXPECT_EQ(nodes_out, g.node_count());
    EXPECT_NEAR(s.mean_in, s.mean_out, 1e-12);
  }
}

TEST(BuildGraph, RestrictionEqualsInducedSubgraph) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Fixture fx;
    std::vector<std::string> ids;
    for (int i = 0; i < 15; ++i) {
      ids.push_back(node(i));
      fx.d.accounts.push_back(account(ids.back()));
    }
    for (int k = 0; k < 40; ++k) fx.post(ids[rng.below(15)], TweetKind::reply, "x", ids[rng.below(15)]);
    auto c = fx.build();
    AccountSet keep;
    for (const auto& id : ids)
      if (rng.bernoulli(0.5)) keep.insert(id);
    auto full = build_graph(c, EdgeKind::reply);
    auto sub = build_graph(c, EdgeKind::reply, keep);
    std::set<std::tuple<std::string, std::string, std::size_t>> a, b;
    for (const auto& e : full.edges())
      if (keep.count(full.id(e.source)) && keep.count(full.id(e.target))) a.emplace(full.id(e.source), full.id(e.target), e.weight);
    for (const auto& e : sub.edges()) b.emplace(sub.id(e.source), sub.id(e.target), e.weight);
    EXPECT_EQ(a, b);
  }
}

TEST(DegreeStats, RelabelInvariant) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto rg = random_graph(rng, 30);
    std::vector<std::string> ids(rg.nodes.begin(), rg.nodes.end());
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < ids.size(); ++i) rename[ids[i]] = "z" + ids[ids.size() - 1 - i];
    AccountSet nodes2;
    Pairs edges2;
    for (const auto& id : ids) nodes2.insert(rename[id]);
    for (const auto& [s, t] : rg.edges) edges2.emplace_back(rename[s], rename[t]);
    auto a = degree_stats(InteractionGraph(EdgeKind::follow, rg.nodes, rg.edges));
    auto b = degree_stats(InteractionGraph(EdgeKind::follow, nodes2, edges2));
    EXPECT_EQ(a.in_histogram, b.in_histogram);
    EXPECT_EQ(a.out_histogram, b.out_histogram);
    EXPECT_NEAR(a.sd_in, b.sd_in, 1e-12);
    EXPECT_EQ(largest_wcc(InteractionGraph(EdgeKind::follow, rg.nodes, rg.edges)).size(),
              largest_wcc(InteractionGraph(EdgeKind::follow, nodes2, edges2)).size());
  }
}

TEST(Wcc, Examples) {
  InteractionGraph g(EdgeKind::follow, {"A", "B", "C", "D", "E"}, {{"A", "B"}, {"C", "D"}, {"E", "D"}});
  EXPECT_EQ(largest_wcc(g), (AccountSet{"C", "D", "E"}));
  EXPECT_EQ(largest_wcc(InteractionGraph(EdgeKind::follow, {"solo"}, {})), (AccountSet{"solo"}));
  EXPECT_EQ(weak_components(g).size(), 2u);
}

TEST(Wcc, MatchesBruteForce) {
  Rng rng(500);
  for (int trial = 0; trial < 300; ++trial) {
    auto rg = random_graph(rng, 50);
    EXPECT_EQ(largest_wcc(InteractionGraph(EdgeKind::reply, rg.nodes, rg.edges)), brute_force_largest_wcc(rg))
        << "trial " << trial;
  }
}

TEST(PairRates, WithinAndCross) {
  InteractionGraph g(EdgeKind::reply, {"A", "B", "C", "D"}, {{"A", "B"}});
  GroupPartition p;
  p.groups["X"] = {"A", "B"};
  p.groups["Y"] = {"C", "D"};
  auto m = pair_rate_matrix(g, p);
  EXPECT_EQ(m.groups, (std::vector<std::string>{"X", "Y"}));
  EXPECT_DOUBLE_EQ(m.rates[0][0], 0.5);
  EXPECT_EQ(m.denominators[0][0], 2u);
  EXPECT_EQ(m.rates[0][1], 0.0);
  EXPECT_EQ(m.rates[1][0], 0.0);
  EXPECT_EQ(m.denominators[0][1], 4u);
}

TEST(PairRates, WeightDoesNotInflate) {
  InteractionGraph g(EdgeKind::reply, {"A", "B"}, {{"A", "B"}, {"A", "B"}, {"A", "B"}});
  GroupPartition p;
  p.groups["X"] = {"A", "B"};
  EXPECT_DOUBLE_EQ(pair_rate_matrix(g, p).rates[0][0], 0.5);
}

TEST(PairRates, Preconditions) {
  InteractionGraph g(EdgeKind::reply, {"A", "B", "C"}, {});
  GroupPartition small;
  small.groups["X"] = {"A"};
  EXPECT_THROW(pair_rate_matrix(g, small), PreconditionError);
  GroupPartition missing;
  missing.groups["X"] = {"A", "Q"};
  EXPECT_THROW(pair_rate_matrix(g, missing), PreconditionError);
  GroupPartition overlap;
  overlap.groups["X"] = {"A", "B"};
  overlap.groups["Y"] = {"B", "C"};
  EXPECT_THROW(pair_rate_matrix(g, overlap), PreconditionError);
}

TEST(InteractionGraph, UnknownEndpointRejected) {
  EXPECT_THROW(InteractionGraph(EdgeKind::reply, {"A"}, {{"A", "B"}}), PreconditionError);
}
