#pragma once

// Interaction graphs (follow / reply / retweet) over account identifiers and
// the coordination metrics computed on them.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"

namespace botscope::graph {

enum class EdgeKind { follow, reply, retweet };

inline std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::follow: return "follow";
    case EdgeKind::reply: return "reply";
    case EdgeKind::retweet: return "retweet";
  }
  return "follow";
}

inline std::optional<EdgeKind> parse_edge_kind(std::string_view s) {
  if (s == "follow") return EdgeKind::follow;
  if (s == "reply") return EdgeKind::reply;
  if (s == "retweet") return EdgeKind::retweet;
  return std::nullopt;
}

/// Union-find with path halving and union by size.
template <typename Index = std::size_t>
class DisjointSets {
 public:
  explicit DisjointSets(Index n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<Index> parent_;
  std::vector<Index> size_;
};

struct Edge {
  std::size_t source;  // node index
  std::size_t target;
  std::size_t weight;
};

/// Directed, weighted, loop-free graph. Nodes are kept sorted by identifier;
/// edges sorted by (source, target). Immutable once built.
class InteractionGraph {
 public:
  InteractionGraph() = default;

  /// `nodes` must contain every edge endpoint. Self-loops are dropped and
  /// parallel (source, target) entries accumulate weight.
  InteractionGraph(EdgeKind kind, const AccountSet& nodes,
                   const std::vector<std::pair<std::string, std::string>>& interactions)
      : kind_(kind), nodes_(nodes.begin(), nodes.end()) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> acc;
    for (const auto& [s, t] : interactions) {
      if (s == t) continue;
      auto si = index_of(s), ti = index_of(t);
      if (!si || !ti) throw PreconditionError("edge endpoint is not a node: " + s + "->" + t);
      ++acc[{*si, *ti}];
    }
    edges_.reserve(acc.size());
    for (const auto& [st, w] : acc) edges_.push_back({st.first, st.second, w});
  }

  EdgeKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& id(std::size_t i) const { return nodes_.at(i); }

  std::optional<std::size_t> index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  EdgeKind kind_ = EdgeKind::follow;
  std::vector<std::string> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
};

/// Raw (source, target) interactions of one kind, one entry per record.
/// Reply/retweet interactions from authors missing from the account table are
/// skipped; quotes never produce retweet edges.
inline std::vector<std::pair<std::string, std::string>> interactions(const Corpus& corpus,
                                                                     EdgeKind kind) {
  std::vector<std::pair<std::string, std::string>> out;
  if (kind == EdgeKind::follow) {
    for (const auto& e : corpus.follow_edges()) out.emplace_back(e.source, e.target);
    return out;
  }
  for (const auto& t : corpus.tweets()) {
    if (!corpus.has_account(t.author_id)) continue;
    if (kind == EdgeKind::reply && t.kind == TweetKind::reply && t.in_reply_to_account)
      out.emplace_back(t.author_id, *t.in_reply_to_account);
    else if (kind == EdgeKind::retweet && t.kind == TweetKind::retweet && t.referenced_account)
      out.emplace_back(t.author_id, *t.referenced_account);
  }
  return out;
}

/// Without a restriction the node set is every account plus every edge
/// endpoint. With one, the node set is exactly the restriction and only edges
/// with both endpoints inside it are kept.
inline InteractionGraph build_graph(const Corpus& corpus, EdgeKind kind,
                                    const std::optional<AccountSet>& restriction = std::nullopt) {
  auto raw = interactions(corpus, kind);
  raw.erase(std::remove_if(raw.begin(), raw.end(), [](const auto& p) { return p.first == p.second; }),
            raw.end());
  if (restriction) {
    std::erase_if(raw, [&](const auto& p) {
      return !restriction->count(p.first) || !restriction->count(p.second);
    });
    return InteractionGraph(kind, *restriction, raw);
  }
  AccountSet nodes = corpus.all_account_ids();
  for (const auto& [s, t] : raw) {
    nodes.insert(s);
    nodes.insert(t);
  }
  return InteractionGraph(kind, nodes, raw);
}

// ---------------------------------------------------------------------------

struct DegreeSummary {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double mean_in = 0, sd_in = 0, mean_out = 0, sd_out = 0;
  std::map<std::size_t, std::size_t> in_histogram;   // degree -> node count
  std::map<std::size_t, std::size_t> out_histogram;
};

/// Unweighted degrees over every node (isolated nodes included); population SD.
inline DegreeSummary degree_stats(const InteractionGraph& g) {
  DegreeSummary s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  if (g.node_count() == 0) return s;
  std::vector<double> in(g.node_count(), 0), out(g.node_count(), 0);
  for (const auto& e : g.edges()) {
    out[e.source] += 1;
    in[e.target] += 1;
  }
  auto ms_in = population_mean_sd(in), ms_out = population_mean_sd(out);
  s.mean_in = ms_in.mean;
  s.sd_in = ms_in.sd;
  s.mean_out = ms_out.mean;
  s.sd_out = ms_out.sd;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    ++s.in_histogram[static_cast<std::size_t>(in[i])];
    ++s.out_histogram[static_cast<std::size_t>(out[i])];
  }
  return s;
}

/// Weakly connected components as sorted identifier sets, largest first;
/// equal sizes ordered by smallest member.
inline std::vector<AccountSet> weak_components(const InteractionGraph& g) {
  DisjointSets<std::size_t> ds(g.node_count());
  for (const auto& e : g.edges()) ds.unite(e.source, e.target);
  std::map<std::size_t, AccountSet> by_root;
  for (std::size_t i = 0; i < g.node_count(); ++i) by_root[ds.find(i)].insert(g.id(i));
  std::vector<AccountSet> comps;
  comps.reserve(by_root.size());
  for (auto& [root, members] : by_root) comps.push_back(std::move(members));
  std::sort(comps.begin(), comps.end(), [](const AccountSet& a, const AccountSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return *a.begin() < *b.begin();
  });
  return comps;
}

inline AccountSet largest_wcc(const InteractionGraph& g) {
  auto comps = weak_components(g);
  return comps.empty() ? AccountSet{} : std::move(comps.front());
}

// ---------------------------------------------------------------------------

struct PairRateMatrix {
  std::vector<std::string> groups;
  std::vector<std::vector<std::size_t>> pairs;         // ordered pairs with >= 1 edge
  std::vector<std::vector<std::size_t>> denominators;  // n_i(n_i-1) or n_i*n_j
  std::vector<std::vector<double>> rates;
};

/// Entry (i, j): fraction of ordered pairs (u in group i, v in group j, u != v)
/// with an edge u -> v. Groups must be non-empty and inside the graph; groups
/// need at least two members for their within-group rate.
inline PairRateMatrix pair_rate_matrix(const InteractionGraph& g, const GroupPartition& partition) {
  PairRateMatrix m;
  std::vector<std::size_t> group_of(g.node_count(), SIZE_MAX);
  std::vector<std::size_t> sizes;
  for (const auto& [name, members] : partition.groups) {
    if (members.size() < 2)
      throw PreconditionError("group '" + name + "' has fewer than 2 members; within-group rate undefined");
    std::size_t gi = m.groups.size();
    m.groups.push_back(name);
    sizes.push_back(members.size());
    for (const auto& id : members) {
      auto idx = g.index_of(id);
      if (!idx) throw PreconditionError("group member is not a graph node: " + id);
      if (group_of[*idx] != SIZE_MAX) throw PreconditionError("account in two groups: " + id);
      group_of[*idx] = gi;
    }
  }
  std::size_t k = m.groups.size();
  m.pairs.assign(k, std::vector<std::size_t>(k, 0));
  m.denominators.assign(k, std::vector<std::size_t>(k, 0));
  m.rates.assign(k, std::vector<double>(k, 0.0));
  for (const auto& e : g.edges()) {
    auto a = group_of[e.source], b = group_of[e.target];
    if (a != SIZE_MAX && b != SIZE_MAX) ++m.pairs[a][b];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      m.denominators[i][j] = i == j ? sizes[i] * (sizes[i] - 1) : sizes[i] * sizes[j];
      m.rates[i][j] = static_cast<double>(m.pairs[i][j]) / static_cast<double>(m.denominators[i][j]);
    }
  return m;
}

}  // namespace botscope::graph
