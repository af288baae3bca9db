#include <gtest/gtest.h>

#include "botscope/corpus.hpp"
#include "botscope/rng.hpp"
#include "support.hpp"

using namespace botscope;
using namespace testing_support;

namespace {

std::string account_line(const std::string& id) {
  return R"({"account_id":")" + id +
         R"(","handle":"h_)" + id +
         R"(","created_at":"2021-03-04T05:06:07Z","follower_count":10,"following_count":5,"tweet_count":3})";
}

std::string tweet_line(const std::string& id, const std::string& author, const std::string& extra = "") {
  return R"({"tweet_id":")" + id + R"(","author_id":")" + author +
         R"(","created_at":"2023-03-01T00:00:00Z","text":"gm","kind":"original","language":"en")" + extra + "}";
}

struct Files {
  TempDir dir;
  std::string accounts = dir.file("accounts.jsonl");
  std::string tweets = dir.file("tweets.jsonl");
  std::string edges = dir.file("edges.jsonl");
  std::string labels = dir.file("labels.csv");
};

}  // namespace

TEST(Timestamps, Iso8601RoundTrip) {
  auto t = parse_iso8601("2023-04-23T12:34:56Z");
  ASSERT_TRUE(t);
  EXPECT_EQ(format_iso8601(*t), "2023-04-23T12:34:56Z");
  EXPECT_EQ(parse_iso8601("1970-01-01T00:00:00Z"), 0);
  EXPECT_EQ(parse_iso8601("2023-04-23T14:34:56+02:00"), t);
  EXPECT_EQ(parse_iso8601("2023-04-23T12:34:56.789Z"), t);
  EXPECT_FALSE(parse_iso8601("2023-02-30T00:00:00Z"));
  EXPECT_FALSE(parse_iso8601("yesterday"));
  EXPECT_EQ(format_iso8601(-1), "1969-12-31T23:59:59Z");
  EXPECT_EQ(year_of(*t), 2023);
}

TEST(Csv, SplitInvertsRow) {
  std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", ""};
  EXPECT_EQ(csv_split(csv_row(fields)), fields);
}

TEST(TopK, CountThenKey) {
  std::map<std::string, int> m{{"b", 1}, {"a", 1}, {"c", 5}};
  auto r = top_k(m, 2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].first, "c");
  EXPECT_EQ(r[1].first, "a");
  EXPECT_EQ(top_k(m, 10).size(), 3u);
  EXPECT_THROW(top_k(m, 0), PreconditionError);
}

TEST(LoadCorpus, CountsRecords) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n" + account_line("a2") + "\n");
  write_text(f.tweets, tweet_line("t1", "a1") + "\n" + tweet_line("t2", "a1") + "\n" + tweet_line("t3", "a2") + "\n");
  auto c = load_corpus(f.accounts, f.tweets);
  EXPECT_EQ(c.accounts().size(), 2u);
  EXPECT_EQ(c.tweets().size(), 3u);
  EXPECT_TRUE(validate(c).empty());
  EXPECT_EQ(c.find_account("a1")->created_at, *parse_iso8601("2021-03-04T05:06:07Z"));
  EXPECT_EQ(c.tweets_of("a1").size(), 2u);
}

TEST(LoadCorpus, EmptyEdgeFile) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  write_text(f.tweets, "");
  write_text(f.edges, "");
  auto c = load_corpus(f.accounts, f.tweets, f.edges);
  EXPECT_TRUE(c.follow_edges().empty());
}

TEST(LoadCorpus, OneMalformedOfFiveIsReported) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  std::string lines = tweet_line("t1", "a1") + "\n" + tweet_line("t2", "a1") + "\n" +
                      R"({"tweet_id":"t3","created_at":"2023-03-01T00:00:00Z","text":"x","kind":"original"})" +
                      "\n" + tweet_line("t4", "a1") + "\n" + tweet_line("t5", "a1") + "\n";
  write_text(f.tweets, lines);
  auto c = load_corpus(f.accounts, f.tweets);
  EXPECT_EQ(c.tweets().size(), 4u);
  auto r = validate(c);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].file, "tweets");
  EXPECT_EQ(r[0].line, 3u);
  EXPECT_EQ(r[0].rule, "missing-field");
  EXPECT_EQ(r[0].id, "t3");
}

TEST(LoadCorpus, TooManyMalformedIsFatalAndNamesFirstLine) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  std::string lines = tweet_line("t1", "a1") + "\n{not json\n" + tweet_line("t3", "a1") + "\n[1,2]\n";
  write_text(f.tweets, lines);
  try {
    load_corpus(f.accounts, f.tweets);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.first_line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(LoadCorpus, MalformedThresholdIsTenPercent) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  // 2 bad of 20 is exactly 10%: tolerated. 3 of 20 is not.
  auto make = [&](int bad) {
    std::string s;
    for (int i = 0; i < 20; ++i) s += (i < bad ? std::string("{bad") : tweet_line("t" + std::to_string(i), "a1")) + "\n";
    write_text(f.tweets, s);
  };
  make(2);
  EXPECT_EQ(load_corpus(f.accounts, f.tweets).tweets().size(), 18u);
  make(3);
  EXPECT_THROW(load_corpus(f.accounts, f.tweets), SchemaError);
}

TEST(LoadCorpus, MissingFileIsIoError) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  EXPECT_THROW(load_corpus(f.accounts, f.dir.file("nope.jsonl")), IoError);
}

TEST(LoadCorpus, DuplicateIdNamesIdentifier) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  write_text(f.tweets, tweet_line("dup", "a1") + "\n" + tweet_line("dup", "a1") + "\n");
  try {
    load_corpus(f.accounts, f.tweets);
    FAIL() << "expected DuplicateIdError";
  } catch (const DuplicateIdError& e) {
    EXPECT_EQ(e.id(), "dup");
  }
}

TEST(LoadCorpus, HashtagsNormalizedAtIngest) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  write_text(f.tweets, tweet_line("t1", "a1", R"(,"hashtags":["#BTC","btc","#Nft"])") + "\n");
  auto c = load_corpus(f.accounts, f.tweets);
  EXPECT_EQ(c.tweets()[0].hashtags, (std::vector<std::string>{"btc", "btc", "nft"}));
  EXPECT_TRUE(validate(c).empty());
}

TEST(LoadCorpus, FieldMapRenames) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  write_text(f.tweets,
             R"({"id":"t1","user_id":"a1","created_at":1680000000,"text":"gm","kind":"original"})"
             "\n");
  auto fm_path = f.dir.file("fields.conf");
  write_text(fm_path, "# renames\ntweets.tweet_id = id\ntweets.author_id = user_id\n");
  LoadOptions opts;
  opts.field_map = FieldMap::from_file(fm_path);
  auto c = load_corpus(f.accounts, f.tweets, std::nullopt, std::nullopt, opts);
  ASSERT_EQ(c.tweets().size(), 1u);
  EXPECT_EQ(c.tweets()[0].author_id, "a1");
  EXPECT_EQ(c.tweets()[0].created_at, 1680000000);
}

TEST(LoadCorpus, TweetCapKeepsMostRecent) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  std::string s;
  for (int i = 0; i < 5; ++i)
    s += R"({"tweet_id":"t)" + std::to_string(i) + R"(","author_id":"a1","created_at":)" + std::to_string(1000 + i) +
         R"(,"text":"x","kind":"original"})" + "\n";
  write_text(f.tweets, s);
  LoadOptions opts;
  opts.tweet_cap = 2;
  auto c = load_corpus(f.accounts, f.tweets, std::nullopt, std::nullopt, opts);
  ASSERT_EQ(c.tweets().size(), 2u);
  EXPECT_EQ(c.tweets()[0].tweet_id, "t3");
  EXPECT_EQ(c.tweets()[1].tweet_id, "t4");
}

TEST(LoadCorpus, EdgesAndLabels) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n" + account_line("a2") + "\n" + account_line("a3") + "\n");
  write_text(f.tweets, "");
  write_text(f.edges, R"({"source":"a1","target":"a2"})"
                      "\n"
                      R"({"source":"a1","target":"a2"})"
                      "\n"
                      R"({"source":"a3","target":"a3"})"
                      "\n"
                      R"({"source":"a2","target":"a3"})"
                      "\n");
  write_text(f.labels, "account_id,group_name\na1,bot\na2,bot\na3,human\na1,human\nghost,bot\n");
  auto c = load_corpus(f.accounts, f.tweets, f.edges, f.labels);
  EXPECT_EQ(c.follow_edges().size(), 2u);
  EXPECT_EQ(c.group("bot"), (AccountSet{"a1", "a2"}));
  EXPECT_EQ(c.group("human"), (AccountSet{"a3"}));
  EXPECT_THROW(c.group("nobody"), DataError);
  std::vector<std::string> rules;
  for (const auto& v : validate(c)) rules.push_back(v.rule);
  EXPECT_EQ(rules, (std::vector<std::string>{"duplicate-edge", "self-loop-edge", "unknown-group-member",
                                             "overlapping-groups"}));
}

TEST(LoadCorpus, LabelHeaderRequired) {
  Files f;
  write_text(f.accounts, account_line("a1") + "\n");
  write_text(f.tweets, "");
  write_text(f.labels, "id,group\na1,bot\n");
  EXPECT_THROW(load_corpus(f.accounts, f.tweets, std::nullopt, f.labels), SchemaError);
}

TEST(Validate, ReplyMissingTarget) {
  Fixture fx;
  fx.accounts({"a"}).post("a", TweetKind::reply, "hi");
  auto r = validate(fx.build());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rule, "reply-missing-target");
}

TEST(Validate, ValidCorpusIsClean) {
  Fixture fx;
  fx.accounts({"a", "b"}).post("a").post("a", TweetKind::reply, "hi", "b").post("b", TweetKind::retweet, "RT", "a");
  fx.follow("a", "b");
  EXPECT_TRUE(validate(fx.build()).empty());
}

TEST(Validate, DanglingAuthor) {
  Fixture fx;
  fx.accounts({"a"}).post("ghost");
  auto r = validate(fx.build());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].rule, "dangling-author");
  EXPECT_EQ(r[0].id, "t1");
}

TEST(Validate, KindTargetConsistency) {
  Fixture fx;
  fx.accounts({"a", "b"}).post("a", TweetKind::quote);
  auto t = tweet("x", "a", TweetKind::original);
  t.in_reply_to_account = "b";
  t.referenced_account = "b";
  fx.d.tweets.push_back(t);
  std::vector<std::string> rules;
  for (const auto& v : validate(fx.build())) rules.push_back(v.rule);
  std::sort(rules.begin(), rules.end());
  EXPECT_EQ(rules, (std::vector<std::string>{"retweet-missing-target", "unexpected-referenced-account",
                                             "unexpected-reply-target"}));
}

TEST(Serialization, RoundTripIsIdentity) {
  // Randomized corpora survive write -> load unchanged.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    Fixture fx;
    std::size_t n = 2 + rng.below(6);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("acc" + std::to_string(i));
      auto a = account(ids.back(), static_cast<std::int64_t>(rng.below(1000)));
      a.description = i % 2 ? "quote \" and, comma" : "caf\xc3\xa9";
      fx.d.accounts.push_back(a);
    }
    for (int k = 0; k < 15; ++k) {
      auto author = ids[rng.below(n)];
      auto other = ids[rng.below(n)];
      auto kind = static_cast<TweetKind>(rng.below(4));
      fx.post(author, kind, "text " + std::to_string(k) + " \xf0\x9f\x9a\x80", other);
      if (rng.bernoulli(0.5)) fx.d.tweets.back().hashtags = {"btc", "eth"};
      if (rng.bernoulli(0.5)) fx.d.tweets.back().urls = {"https://fox8.news/a?b=1"};
      if (rng.bernoulli(0.2)) fx.d.tweets.back().language.reset();
    }
    for (std::size_t i = 0; i + 1 < n; ++i) fx.follow(ids[i], ids[i + 1]);
    fx.group("bot", {ids[0], ids[1]});
    auto original = fx.build();

    TempDir dir;
    auto paths = write_corpus(original, dir.path());
    auto loaded = load_corpus(paths.accounts, paths.tweets, paths.edges, paths.labels);
    EXPECT_EQ(loaded.canonical_json(), original.canonical_json()) << "seed " << seed;

    TempDir again;
    auto paths2 = write_corpus(loaded, again.path());
    EXPECT_EQ(slurp(paths2.tweets), slurp(paths.tweets));
  }
}

TEST(Serialization, LoadIsDeterministic) {
  Fixture fx;
  fx.accounts({"a", "b"}).post("a").post("b", TweetKind::reply, "x", "a").follow("a", "b");
  TempDir dir;
  auto p = write_corpus(fx.build(), dir.path());
  EXPECT_EQ(load_corpus(p.accounts, p.tweets, p.edges).canonical_json(),
            load_corpus(p.accounts, p.tweets, p.edges).canonical_json());
}
