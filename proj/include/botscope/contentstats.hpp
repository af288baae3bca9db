#pragma once

// Per-account tweet-type composition, ternary binning, hashtag and
// amplified-account rankings, and profile summaries.

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"

namespace botscope::content {

/// Percentages of original, reply and retweet+quote tweets; sums to 100.
struct TernaryPoint {
  double pct_original = 0;
  double pct_reply = 0;
  double pct_retweet_quote = 0;

  double sum() const { return pct_original + pct_reply + pct_retweet_quote; }
};

/// nullopt ("no composition") when the account has no tweets.
inline std::optional<TernaryPoint> tweet_mix(const Corpus& corpus, const std::string& account_id) {
  std::array<std::size_t, 3> c{};
  std::size_t n = 0;
  for (auto i : corpus.tweet_indices_of(account_id)) {
    switch (corpus.tweets()[i].kind) {
      case TweetKind::original: ++c[0]; break;
      case TweetKind::reply: ++c[1]; break;
      case TweetKind::retweet:
      case TweetKind::quote: ++c[2]; break;
    }
    ++n;
  }
  if (n == 0) return std::nullopt;
  auto pct = [n](std::size_t k) { return 100.0 * static_cast<double>(k) / static_cast<double>(n); };
  return TernaryPoint{pct(c[0]), pct(c[1]), pct(c[2])};
}

struct GroupMix {
  std::vector<std::pair<std::string, TernaryPoint>> points;  // accounts with tweets, id order
  std::vector<std::string> without_tweets;
  TernaryPoint mean;
  TernaryPoint sd;  // population SD per axis
};

inline GroupMix group_mix(const Corpus& corpus, const AccountSet& group) {
  GroupMix gm;
  std::array<std::vector<double>, 3> axes;
  for (const auto& id : group) {
    auto p = tweet_mix(corpus, id);
    if (!p) {
      gm.without_tweets.push_back(id);
      continue;
    }
    axes[0].push_back(p->pct_original);
    axes[1].push_back(p->pct_reply);
    axes[2].push_back(p->pct_retweet_quote);
    gm.points.emplace_back(id, *p);
  }
  auto m0 = population_mean_sd(axes[0]), m1 = population_mean_sd(axes[1]),
       m2 = population_mean_sd(axes[2]);
  gm.mean = {m0.mean, m1.mean, m2.mean};
  gm.sd = {m0.sd, m1.sd, m2.sd};
  return gm;
}

using BinCoord = std::array<int, 3>;

struct TernaryBinGrid {
  int resolution = 0;
  std::map<BinCoord, std::size_t> bins;  // (i, j, k) with i + j + k == resolution

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [c, n] : bins) t += n;
    return t;
  }
};

/// Lattice coordinate of a point: floor(p * r / 100) per axis, then the
/// remaining units go to the largest fractional parts (ties to the lower axis).
inline BinCoord ternary_coord(const TernaryPoint& p, int resolution) {
  if (resolution < 1) throw PreconditionError("resolution must be >= 1");
  std::array<double, 3> v{std::max(0.0, p.pct_original), std::max(0.0, p.pct_reply),
                          std::max(0.0, p.pct_retweet_quote)};
  double s = v[0] + v[1] + v[2];
  if (!(s > 0)) throw PreconditionError("ternary point has no mass");
  BinCoord c{};
  std::array<double, 3> frac{};
  int assigned = 0;
  for (int a = 0; a < 3; ++a) {
    double raw = v[a] / s * resolution;
    c[a] = static_cast<int>(std::floor(raw));
    frac[a] = raw - c[a];
    assigned += c[a];
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
  // sum of floors never exceeds the resolution, so only a deficit is possible
  for (int k = 0; assigned < resolution; k = (k + 1) % 3, ++assigned) ++c[order[k]];
  return c;
}

template <typename Points>
TernaryBinGrid ternary_bin(const Points& points, int resolution) {
  if (resolution < 1) throw PreconditionError("resolution must be >= 1");
  TernaryBinGrid g{resolution, {}};
  for (const TernaryPoint& p : points) ++g.bins[ternary_coord(p, resolution)];
  return g;
}

/// Hashtag counts over every tweet kind of the group; ties lexicographic.
inline std::vector<std::pair<std::string, std::size_t>> hashtag_ranking(const Corpus& corpus,
                                                                        const AccountSet& group,
                                                                        std::size_t k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  std::map<std::string, std::size_t> tallies;
  for (const auto& id : group)
    for (auto i : corpus.tweet_indices_of(id))
      for (const auto& h : corpus.tweets()[i].hashtags) ++tallies[h];
  return top_k(tallies, k);
}

/// Outside accounts most often retweeted, quoted or replied to by the group.
inline std::vector<std::pair<std::string, std::size_t>> amplified_accounts(const Corpus& corpus,
                                                                           const AccountSet& group,
                                                                           std::size_t k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  std::map<std::string, std::size_t> tallies;
  for (const auto& id : group)
    for (auto i : corpus.tweet_indices_of(id)) {
      const auto& t = corpus.tweets()[i];
      const std::optional<std::string>* target = nullptr;
      if (t.kind == TweetKind::reply) target = &t.in_reply_to_account;
      if (t.kind == TweetKind::retweet || t.kind == TweetKind::quote) target = &t.referenced_account;
      if (target && *target && !group.count(**target)) ++tallies[**target];
    }
  return top_k(tallies, k);
}

struct ProfileSummary {
  std::size_t n_accounts = 0;
  MeanSd followers;
  MeanSd following;
  MeanSd tweets;
  std::map<int, std::size_t> creation_years;
};

/// Group members missing from the corpus are ignored; throws when none remain.
inline ProfileSummary profile_summary(const Corpus& corpus, const AccountSet& group) {
  std::vector<double> fo, fr, tw;
  ProfileSummary s;
  for (const auto& id : group) {
    const Account* a = corpus.find_account(id);
    if (!a) continue;
    fo.push_back(static_cast<double>(a->follower_count));
    fr.push_back(static_cast<double>(a->following_count));
    tw.push_back(static_cast<double>(a->tweet_count));
    ++s.creation_years[year_of(a->created_at)];
  }
  if (fo.empty()) throw PreconditionError("profile_summary needs a non-empty group");
  s.n_accounts = fo.size();
  s.followers = population_mean_sd(fo);
  s.following = population_mean_sd(fr);
  s.tweets = population_mean_sd(tw);
  return s;
}

}  // namespace botscope::content
