#include <gtest/gtest.h>

#include "botscope/rng.hpp"
#include "botscope/seedscan.hpp"
#include "support.hpp"
#include "table1.hpp"

using namespace botscope;
using namespace botscope::seedscan;
using namespace testing_support;

namespace {

// Reference matcher for ASCII text: lowercase, squeeze whitespace, then try
// every start position character by character.
std::string ref_normalize(const std::string& s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  }
  return out;
}

bool ref_contains(const std::string& text, const std::string& phrase) {
  auto h = ref_normalize(text), p = ref_normalize(phrase);
  if (p.size() > h.size()) return false;
  for (std::size_t i = 0; i + p.size() <= h.size(); ++i) {
    std::size_t k = 0;
    while (k < p.size() && h[i + k] == p[k]) ++k;
    if (k == p.size()) return true;
  }
  return false;
}

}  // namespace

TEST(PhraseQuery, MatchesPublishedExample) {
  auto q = PhraseQuery::defaults();
  EXPECT_TRUE(q.match("I'm sorry, but as an AI language model I cannot browse Twitter..."));
}

TEST(PhraseQuery, CaseAndWhitespaceInsensitive) {
  auto q = PhraseQuery::defaults();
  EXPECT_TRUE(q.match("As An AI  Language   Model,"));
  EXPECT_TRUE(q.match("as\tan\nai language model"));
  EXPECT_TRUE(q.match("AS AN \xef\xbc\xa1I LANGUAGE MODEL"));  // fullwidth A
}

TEST(PhraseQuery, HyphenBreaksContiguity) {
  auto q = PhraseQuery::defaults();
  EXPECT_FALSE(q.match("as an ai-language model"));
  EXPECT_FALSE(ref_contains("as an ai-language model", std::string(kDefaultPhrase)));
}

TEST(PhraseQuery, ZeroWidthCharactersIgnored) {
  EXPECT_TRUE(PhraseQuery::defaults().match("as an a\xe2\x80\x8bi language model"));
}

TEST(PhraseQuery, EmptyRejected) {
  EXPECT_THROW(PhraseQuery({}), PreconditionError);
  EXPECT_THROW(PhraseQuery({"   "}), PreconditionError);
}

TEST(PhraseQuery, AgreesWithReferenceMatcher) {
  const std::string alphabet = "aAiI -\t.";
  const std::vector<std::string> phrases{"a i", "ai a", "i.a", "a  -a"};
  Rng rng(2024);
  for (int trial = 0; trial < 5000; ++trial) {
    std::string text;
    auto len = rng.below(14);
    for (std::uint64_t i = 0; i < len; ++i) text += alphabet[rng.below(alphabet.size())];
    for (const auto& p : phrases) {
      PhraseQuery q({p});
      ASSERT_EQ(q.match(text).has_value(), ref_contains(text, p)) << "text='" << text << "' phrase='" << p << "'";
    }
  }
}

TEST(FindPhraseTweets, SortedHitsAcrossKinds) {
  Fixture fx;
  fx.accounts({"a", "b"});
  fx.post("a", TweetKind::original, "nothing here");
  fx.post("b", TweetKind::retweet, "RT: As an AI language model, I cannot", "a");
  fx.post("a", TweetKind::reply, "as an ai language model I think", "b");
  auto hits = find_phrase_tweets(fx.build(), PhraseQuery::defaults());
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].tweet_id, "t2");
  EXPECT_EQ(hits[0].author_id, "b");
  EXPECT_EQ(hits[1].tweet_id, "t3");
  EXPECT_EQ(hits[1].phrase, "as an ai language model");
}

TEST(Categorize, Table1RowsLandInTheirOwnCategories) {
  auto rules = CategoryRuleset::defaults();
  for (const auto& [text, expected] : table1_examples()) EXPECT_EQ(categorize_self_revealing(text, rules), expected) << text;
}

TEST(Categorize, NoTriggerIsOther) {
  EXPECT_EQ(categorize_self_revealing("I don't have to pay taxes", CategoryRuleset::defaults()), Category::Other);
}

TEST(Categorize, FirstMatchingRuleWins) {
  // harmful rules precede capability rules
  EXPECT_EQ(categorize_self_revealing("I cannot browse the web, and that would be inappropriate",
                                      CategoryRuleset::defaults()),
            Category::HarmfulContent);
}

TEST(Categorize, RulesetFromCsv) {
  TempDir d;
  auto p = d.file("rules.csv");
  write_text(p, "priority,category,trigger\n2,PositiveContent,sunshine\n1,BeyondCapability,Sunshine Forecast\n");
  auto rules = CategoryRuleset::from_csv(p);
  EXPECT_EQ(categorize_self_revealing("the sunshine forecast", rules), Category::BeyondCapability);
  EXPECT_EQ(categorize_self_revealing("sunshine", rules), Category::PositiveContent);
  EXPECT_EQ(categorize_self_revealing("rain", rules), Category::Other);
  write_text(p, "priority,category,trigger\n1,Nonsense,x\n");
  EXPECT_THROW(CategoryRuleset::from_csv(p), DataError);
}

TEST(CategorySummary, AllHarmful) {
  Fixture fx;
  fx.accounts({"a"});
  for (int i = 0; i < 4; ++i) fx.post("a", TweetKind::original, "this violates the content policy");
  auto s = category_summary(std::vector<std::string>{"t1", "t2", "t3", "t4"}, fx.build(), CategoryRuleset::defaults());
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].category, Category::HarmfulContent);
  EXPECT_EQ(s[0].count, 4u);
  EXPECT_DOUBLE_EQ(s[0].percentage, 100.0);
}

TEST(CategorySummary, Table1GivesOnePerCategory) {
  Fixture fx;
  fx.accounts({"a"});
  std::vector<std::string> ids;
  for (const auto& [text, cat] : table1_examples()) {
    fx.post("a", TweetKind::original, text);
    ids.push_back(fx.d.tweets.back().tweet_id);
  }
  auto s = category_summary(ids, fx.build(), CategoryRuleset::defaults());
  ASSERT_EQ(s.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(s[i].category, kAllCategories[i]);
    EXPECT_EQ(s[i].count, 1u);
    EXPECT_DOUBLE_EQ(s[i].percentage, 20.0);
  }
}

TEST(CategorySummary, EmptyAndUnknown) {
  Fixture fx;
  fx.accounts({"a"}).post("a");
  auto c = fx.build();
  EXPECT_TRUE(category_summary(std::vector<std::string>{}, c, CategoryRuleset::defaults()).empty());
  try {
    category_summary(std::vector<std::string>{"t1", "t404"}, c, CategoryRuleset::defaults());
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("t404"), std::string::npos);
  }
}
