#include <gtest/gtest.h>

#include "botscope/contentstats.hpp"
#include "botscope/rng.hpp"
#include "support.hpp"

using namespace botscope;
using namespace botscope::content;
using namespace testing_support;

TEST(TweetMix, Examples) {
  Fixture fx;
  fx.accounts({"a", "q", "none"});
  fx.post("a").post("a").post("a", TweetKind::reply, "x", "q").post("a", TweetKind::retweet, "x", "q");
  for (int i = 0; i < 3; ++i) fx.post("q", TweetKind::quote, "x", "a");
  auto c = fx.build();
  auto a = tweet_mix(c, "a");
  ASSERT_TRUE(a);
  EXPECT_DOUBLE_EQ(a->pct_original, 50);
  EXPECT_DOUBLE_EQ(a->pct_reply, 25);
  EXPECT_DOUBLE_EQ(a->pct_retweet_quote, 25);
  auto q = tweet_mix(c, "q");
  EXPECT_DOUBLE_EQ(q->pct_retweet_quote, 100);
  EXPECT_FALSE(tweet_mix(c, "none"));

  auto gm = group_mix(c, {"a", "q", "none"});
  EXPECT_EQ(gm.points.size(), 2u);
  EXPECT_EQ(gm.without_tweets, (std::vector<std::string>{"none"}));
  EXPECT_DOUBLE_EQ(gm.mean.pct_original, 25);
  EXPECT_DOUBLE_EQ(gm.sd.pct_original, 25);
}

TEST(TweetMix, SumsToHundred) {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    Fixture fx;
    fx.accounts({"a", "b"});
    for (auto n = 1 + rng.below(40); n > 0; --n) fx.post("a", static_cast<TweetKind>(rng.below(4)), "x", "b");
    EXPECT_NEAR(tweet_mix(fx.build(), "a")->sum(), 100.0, 1e-9);
  }
}

TEST(TernaryBin, Examples) {
  EXPECT_EQ(ternary_coord({100, 0, 0}, 10), (BinCoord{10, 0, 0}));
  EXPECT_EQ(ternary_coord({50, 25, 25}, 4), (BinCoord{2, 1, 1}));
  EXPECT_EQ(ternary_coord({100.0 / 3, 100.0 / 3, 100.0 / 3}, 1), (BinCoord{1, 0, 0}));
  EXPECT_THROW(ternary_coord({0, 0, 0}, 5), PreconditionError);
  EXPECT_THROW(ternary_bin(std::vector<TernaryPoint>{}, 0), PreconditionError);
}

TEST(TernaryBin, MassConservation) {
  Rng rng(1000);
  std::vector<TernaryPoint> pts;
  for (int i = 0; i < 1000; ++i) {
    auto w = rng.dirichlet({0.5, 0.5, 0.5});
    pts.push_back({w[0] * 100, w[1] * 100, w[2] * 100});
  }
  pts.push_back({100, 0, 0});
  pts.push_back({0, 50, 50});
  for (int r = 1; r <= 30; ++r) {
    auto g = ternary_bin(pts, r);
    EXPECT_EQ(g.total(), pts.size()) << "r=" << r;
    for (const auto& [c, n] : g.bins) {
      EXPECT_EQ(c[0] + c[1] + c[2], r);
      EXPECT_GE(std::min({c[0], c[1], c[2]}), 0);
    }
  }
}

TEST(Hashtags, RankingAndNormalization) {
  Fixture fx;
  fx.accounts({"a", "b"});
  fx.post("a");
  fx.d.tweets.back().hashtags = {"btc", "btc", "nft"};
  auto c = fx.build();
  using R = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(hashtag_ranking(c, {"a"}, 1), (R{{"btc", 2}}));
  EXPECT_TRUE(hashtag_ranking(c, {}, 5).empty());
  EXPECT_EQ(normalize_hashtag("#BTC"), normalize_hashtag("btc"));
}

TEST(Amplified, ExcludesGroupMembers) {
  Fixture fx;
  fx.accounts({"A", "B", "X"});
  fx.post("A", TweetKind::reply, "x", "X").post("A", TweetKind::reply, "x", "X").post("A", TweetKind::retweet, "x", "B");
  using R = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(amplified_accounts(fx.build(), {"A", "B"}, 5), (R{{"X", 2}}));

  Fixture quiet;
  quiet.accounts({"A"}).post("A");
  EXPECT_TRUE(amplified_accounts(quiet.build(), {"A"}, 5).empty());
}

TEST(Amplified, PlantedCounts) {
  Fixture fx;
  fx.accounts({"A", "B"});
  for (int i = 0; i < 10; ++i) fx.post(i % 2 ? "A" : "B", static_cast<TweetKind>(1 + i % 3), "x", "X");
  for (int i = 0; i < 3; ++i) fx.post("A", TweetKind::quote, "x", "Y");
  fx.post("B", TweetKind::reply, "x", "Z");
  using R = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(amplified_accounts(fx.build(), {"A", "B"}, 2), (R{{"X", 10}, {"Y", 3}}));
}

TEST(Profiles, MeanAndSd) {
  Fixture fx;
  fx.d.accounts = {account("a", 10), account("b", 20)};
  auto s = profile_summary(fx.build(), {"a", "b"});
  EXPECT_DOUBLE_EQ(s.followers.mean, 15);
  EXPECT_DOUBLE_EQ(s.followers.sd, 5);
  EXPECT_EQ(s.creation_years.at(2017), 2u);
  EXPECT_DOUBLE_EQ(profile_summary(fx.build(), {"a"}).followers.sd, 0);
  EXPECT_THROW(profile_summary(fx.build(), {"ghost"}), PreconditionError);
}
