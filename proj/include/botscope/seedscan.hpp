#pragma once

// Self-revealing tweet search: normalized phrase matching plus a
// first-match-wins category ruleset.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"
#include "botscope/text.hpp"

namespace botscope::seedscan {

inline constexpr std::string_view kDefaultPhrase = "as an ai language model";

class PhraseQuery {
 public:
  /// Throws PreconditionError when empty or when a phrase normalizes to "".
  explicit PhraseQuery(std::vector<std::string> phrases) {
    if (phrases.empty()) throw PreconditionError("phrase query needs at least one phrase");
    for (auto& p : phrases) {
      auto n = text::normalize_codepoints(p);
      if (n.empty()) throw PreconditionError("phrase is empty after normalization: '" + p + "'");
      raw_.push_back(std::move(p));
      normalized_.push_back(std::move(n));
    }
  }

  static PhraseQuery defaults() { return PhraseQuery({std::string(kDefaultPhrase)}); }
  static PhraseQuery from_file(const std::string& path) { return PhraseQuery(read_list_file(path)); }

  const std::vector<std::string>& phrases() const noexcept { return raw_; }
  const std::vector<std::u32string>& normalized() const noexcept { return normalized_; }

  /// Index of the first phrase contained in the (unnormalized) text.
  std::optional<std::size_t> match(std::string_view haystack) const {
    auto h = text::normalize_codepoints(haystack);
    for (std::size_t i = 0; i < normalized_.size(); ++i)
      if (h.find(normalized_[i]) != std::u32string::npos) return i;
    return std::nullopt;
  }

 private:
  std::vector<std::string> raw_;
  std::vector<std::u32string> normalized_;
};

struct PhraseHit {
  std::string tweet_id;
  std::string author_id;
  std::string phrase;

  friend bool operator==(const PhraseHit&, const PhraseHit&) = default;
};

/// Tweets of any kind (retweets included) whose normalized text contains a
/// normalized query phrase. Sorted by tweet_id.
inline std::vector<PhraseHit> find_phrase_tweets(const Corpus& corpus, const PhraseQuery& query) {
  std::vector<PhraseHit> hits;
  for (const auto& t : corpus.tweets())
    if (auto i = query.match(t.text)) hits.push_back({t.tweet_id, t.author_id, query.phrases()[*i]});
  std::sort(hits.begin(), hits.end(),
            [](const PhraseHit& a, const PhraseHit& b) { return a.tweet_id < b.tweet_id; });
  return hits;
}

// ---------------------------------------------------------------------------
// Taxonomy

enum class Category { HarmfulContent, BeyondCapability, OtherForbiddenContent, PositiveContent, Other };

inline constexpr std::array<Category, 5> kAllCategories = {
    Category::HarmfulContent, Category::BeyondCapability, Category::OtherForbiddenContent,
    Category::PositiveContent, Category::Other};

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::HarmfulContent: return "HarmfulContent";
    case Category::BeyondCapability: return "BeyondCapability";
    case Category::OtherForbiddenContent: return "OtherForbiddenContent";
    case Category::PositiveContent: return "PositiveContent";
    case Category::Other: return "Other";
  }
  return "Other";
}

inline std::optional<Category> parse_category(std::string_view s) {
  for (auto c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

class CategoryRuleset {
 public:
  struct Rule {
    Category category;
    std::vector<std::u32string> triggers;  // normalized
  };

  /// Rules are tried in order; Other is the implicit fallback and may not
  /// carry triggers. Every listed category needs at least one trigger.
  explicit CategoryRuleset(std::vector<std::pair<Category, std::vector<std::string>>> rules) {
    for (auto& [cat, triggers] : rules) {
      if (cat == Category::Other) throw PreconditionError("Other is the fallback and takes no triggers");
      Rule r{cat, {}};
      for (const auto& t : triggers) {
        auto n = text::normalize_codepoints(t);
        if (n.empty()) throw PreconditionError("empty trigger for " + std::string(to_string(cat)));
        r.triggers.push_back(std::move(n));
      }
      if (r.triggers.empty())
        throw PreconditionError("category without triggers: " + std::string(to_string(cat)));
      rules_.push_back(std::move(r));
    }
  }

  /// Triggers taken from the highlighted spans of known refusal texts, widened
  /// with close paraphrases.
  static CategoryRuleset defaults() {
    return CategoryRuleset({
        {Category::HarmfulContent,
         {"content policy", "harmful", "inappropriate", "offensive", "hateful", "derogatory",
          "discriminatory", "disrespectful", "negative content", "promote hate"}},
        {Category::BeyondCapability,
         {"cannot browse", "can't browse", "access specific tweets", "cannot access",
          "don't have access", "do not have access", "unable to access", "real-time",
          "cannot see", "cannot view", "cannot play", "more context", "more information",
          "provide the link", "provide more details"}},
        {Category::OtherForbiddenContent,
         {"investment advice", "financial advice", "predictions about", "political",
          "personal opinion", "cannot provide", "cannot express", "cannot endorse"}},
        {Category::PositiveContent,
         {"positive and uplifting", "keep things positive", "good vibes", "spread positivity",
          "stay positive"}},
    });
  }

  /// category_rules.csv: "priority,category,trigger" with a header row.
  /// Categories are ordered by their smallest priority; triggers keep file order.
  static CategoryRuleset from_csv(const std::string& path) {
    auto lines = read_lines(path);
    std::map<Category, std::pair<long, std::vector<std::string>>> acc;
    bool header = true;
    std::size_t lineno = 0;
    for (const auto& line : lines) {
      ++lineno;
      if (trim(line).empty()) continue;
      auto f = csv_split(line);
      if (header) {
        header = false;
        if (f.size() != 3 || trim(f[0]) != "priority" || trim(f[1]) != "category" ||
            trim(f[2]) != "trigger")
          throw SchemaError(path + ": header must be 'priority,category,trigger'", lineno);
        continue;
      }
      if (f.size() != 3) throw SchemaError(path + ": expected 3 fields", lineno);
      long prio;
      try {
        prio = std::stol(trim(f[0]));
      } catch (const std::exception&) {
        throw SchemaError(path + ": priority is not an integer", lineno);
      }
      auto cat = parse_category(trim(f[1]));
      if (!cat) throw SchemaError(path + ": unknown category '" + trim(f[1]) + "'", lineno);
      auto [it, fresh] = acc.try_emplace(*cat, prio, std::vector<std::string>{});
      it->second.first = std::min(it->second.first, prio);
      it->second.second.push_back(f[2]);
    }
    std::vector<std::pair<long, Category>> order;
    for (const auto& [cat, v] : acc) order.emplace_back(v.first, cat);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Category, std::vector<std::string>>> rules;
    for (const auto& [prio, cat] : order) rules.emplace_back(cat, acc[cat].second);
    return CategoryRuleset(std::move(rules));
  }

  const std::vector<Rule>& rules() const noexcept { return rules_; }

 private:
  std::vector<Rule> rules_;
};

inline Category categorize_self_revealing(std::string_view text_in, const CategoryRuleset& ruleset) {
  auto h = text::normalize_codepoints(text_in);
  for (const auto& rule : ruleset.rules())
    for (const auto& trig : rule.triggers)
      if (h.find(trig) != std::u32string::npos) return rule.category;
  return Category::Other;
}

struct CategoryCount {
  Category category;
  std::size_t count = 0;
  double percentage = 0.0;
};

/// Non-empty categories in taxonomy order; percentages are exact.
/// Throws DataError naming the first tweet id missing from the corpus.
template <typename TweetIds>
std::vector<CategoryCount> category_summary(const TweetIds& tweet_ids, const Corpus& corpus,
                                            const CategoryRuleset& ruleset) {
  std::map<Category, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& id : tweet_ids) {
    const Tweet* t = corpus.find_tweet(id);
    if (!t) throw DataError("unknown tweet id: " + std::string(id));
    ++counts[categorize_self_revealing(t->text, ruleset)];
    ++total;
  }
  std::vector<CategoryCount> out;
  for (auto c : kAllCategories) {
    auto it = counts.find(c);
    if (it == counts.end()) continue;
    out.push_back({c, it->second, 100.0 * static_cast<double>(it->second) / static_cast<double>(total)});
  }
  return out;
}

}  // namespace botscope::seedscan
