#pragma once

// Machine-generated-text detectors, tweet qualification and account scoring.

#include <atomic>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"
#include "botscope/text.hpp"

namespace botscope::detect {

/// Declared output range of a detector: [0, 100] or [0, 1].
enum class ScoreScale { percent, probability };

inline double scale_max(ScoreScale s) { return s == ScoreScale::percent ? 100.0 : 1.0; }

class TextDetector {
 public:
  virtual ~TextDetector() = default;
  virtual std::string name() const = 0;
  virtual ScoreScale scale() const = 0;
  /// Deterministic for a fixed configuration; result lies in the declared scale.
  virtual double score(std::string_view text) const = 0;
  /// Whether score() may be called from several threads at once.
  virtual bool concurrent_safe() const { return false; }
};

/// Returns scores recorded earlier, keyed by text_digest() of the exact text.
class ReplayDetector final : public TextDetector {
 public:
  explicit ReplayDetector(std::unordered_map<std::string, double> by_digest,
                          ScoreScale scale = ScoreScale::percent)
      : scores_(std::move(by_digest)), scale_(scale) {
    for (const auto& [d, s] : scores_)
      if (!(s >= 0.0 && s <= scale_max(scale_)))
        throw DataError("replay score out of range for digest " + d);
  }

  /// replay_scores.jsonl: one {"text_digest": "...", "score": x} per line.
  static ReplayDetector from_file(const std::string& path, ScoreScale scale = ScoreScale::percent) {
    std::unordered_map<std::string, double> m;
    std::size_t lineno = 0;
    for (const auto& line : read_lines(path)) {
      ++lineno;
      if (trim(line).empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        throw SchemaError(path + ": malformed JSON on line " + std::to_string(lineno), lineno);
      }
      if (!j.is_object() || !j.contains("text_digest") || !j["text_digest"].is_string() ||
          !j.contains("score") || !j["score"].is_number())
        throw SchemaError(path + ": line " + std::to_string(lineno) + " needs text_digest and score", lineno);
      m[j["text_digest"].get<std::string>()] = j["score"].get<double>();
    }
    return ReplayDetector(std::move(m), scale);
  }

  std::string name() const override { return "replay"; }
  ScoreScale scale() const override { return scale_; }
  bool concurrent_safe() const override { return true; }

  double score(std::string_view text) const override {
    auto d = text_digest(text);
    auto it = scores_.find(d);
    if (it == scores_.end()) throw DataError("no replay score for text digest " + d);
    return it->second;
  }

 private:
  std::unordered_map<std::string, double> scores_;
  ScoreScale scale_;
};

/// Keyed pseudo-random score: FNV-1a of the key bytes followed by the text,
/// mapped uniformly onto the scale. Useful for exercising the pipeline.
class StubDetector final : public TextDetector {
 public:
  explicit StubDetector(std::string key = "botscope", ScoreScale scale = ScoreScale::percent)
      : basis_(fnv1a64(key)), scale_(scale) {}

  std::string name() const override { return "stub"; }
  ScoreScale scale() const override { return scale_; }
  bool concurrent_safe() const override { return true; }

  double score(std::string_view text) const override {
    double u = static_cast<double>(fnv1a64(text, basis_) >> 11) * 0x1.0p-53;
    return u * scale_max(scale_);
  }

 private:
  std::uint64_t basis_;
  ScoreScale scale_;
};

/// Transparent text-statistics scorer on [0, 100]: a logistic blend of the
/// function-word rate (up), the type-token ratio (down) and the coefficient of
/// variation of sentence lengths (down). Not a real classifier; it gives the
/// end-to-end pipeline something deterministic to run on raw text.
class HeuristicDetector final : public TextDetector {
 public:
  struct Features {
    std::size_t tokens = 0;
    double type_token_ratio = 0;
    double function_word_rate = 0;
    double sentence_length_cv = 0;
  };

  std::string name() const override { return "heuristic"; }
  ScoreScale scale() const override { return ScoreScale::percent; }
  bool concurrent_safe() const override { return true; }

  static Features features(std::string_view text_in) {
    static const std::unordered_set<std::string> kFunctionWords = {
        "a", "an", "the", "and", "or", "but", "if", "of", "to", "in", "on", "at", "by", "for",
        "with", "as", "from", "about", "into", "that", "this", "these", "those", "it", "its",
        "is", "are", "was", "were", "be", "been", "being", "i", "you", "we", "they", "he",
        "she", "my", "your", "our", "their", "not", "no", "can", "cannot", "will", "would",
        "should", "could", "may", "might", "must", "do", "does", "have", "has", "so", "such",
        "than", "which", "who", "what", "while", "also", "some", "all", "any", "more", "most"};
    Features f;
    std::unordered_set<std::string> types;
    std::vector<double> sentence_lengths;
    std::string word;
    double in_sentence = 0;
    std::size_t fw = 0;
    auto flush_word = [&] {
      if (word.empty()) return;
      ++f.tokens;
      fw += kFunctionWords.count(word);
      types.insert(word);
      word.clear();
      in_sentence += 1;
    };
    auto flush_sentence = [&] {
      flush_word();
      if (in_sentence > 0) sentence_lengths.push_back(in_sentence);
      in_sentence = 0;
    };
    for (char c : text_in) {
      auto uc = static_cast<unsigned char>(c);
      if (std::isalnum(uc) || c == '\'' || uc >= 0x80) {
        word += static_cast<char>(std::tolower(uc));
      } else if (c == '.' || c == '!' || c == '?') {
        flush_sentence();
      } else {
        flush_word();
      }
    }
    flush_sentence();
    if (f.tokens == 0) return f;
    f.type_token_ratio = static_cast<double>(types.size()) / static_cast<double>(f.tokens);
    f.function_word_rate = static_cast<double>(fw) / static_cast<double>(f.tokens);
    auto ms = population_mean_sd(sentence_lengths);
    f.sentence_length_cv = ms.mean > 0 ? ms.sd / ms.mean : 0.0;
    return f;
  }

  double score(std::string_view text_in) const override {
    auto f = features(text_in);
    if (f.tokens == 0) return 50.0;
    double z = 8.0 * (f.function_word_rate - 0.40) - 2.0 * (f.type_token_ratio - 0.80) -
               1.5 * (f.sentence_length_cv - 0.50);
    return 100.0 / (1.0 + std::exp(-z));
  }
};

/// Builds a detector by name: "stub" (key = config), "replay" (config = path
/// to replay_scores.jsonl) or "heuristic".
inline std::unique_ptr<TextDetector> make_detector(std::string_view name, const std::string& config = {}) {
  if (name == "stub") return std::make_unique<StubDetector>(config.empty() ? "botscope" : config);
  if (name == "replay") {
    if (config.empty()) throw PreconditionError("replay detector needs a replay score file");
    return std::make_unique<ReplayDetector>(ReplayDetector::from_file(config));
  }
  if (name == "heuristic") return std::make_unique<HeuristicDetector>();
  throw PreconditionError("unknown detector: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Qualification

struct QualificationRules {
  bool exclude_retweets = true;
  bool english_only = true;
  bool strip_reply_handles = true;
  bool strip_links = true;
  std::size_t min_chars_after_processing = 1;
};

inline bool is_english(const std::optional<std::string>& tag) {
  if (!tag) return false;
  auto t = text::lowercase(*tag);
  return t == "en" || t.rfind("en-", 0) == 0 || t.rfind("en_", 0) == 0;
}

/// Drops the leading run of @handle tokens.
inline std::string strip_leading_handles(std::string_view s) {
  std::size_t i = 0;
  for (;;) {
    std::size_t j = i;
    while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j >= s.size() || s[j] != '@') break;
    std::size_t k = j + 1;
    while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
    if (k == j + 1) break;
    if (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) break;
    i = k;
  }
  return std::string(s.substr(i));
}

inline std::string strip_urls(std::string_view s) {
  static const std::regex kUrl(R"((?:https?://|www\.)\S+)", std::regex::icase);
  return std::regex_replace(std::string(s), kUrl, " ");
}

/// Applies the text transformations (no filtering). Idempotent.
inline std::string process_text(std::string_view raw, bool is_reply, const QualificationRules& rules) {
  std::string s(raw);
  // links first: removing a link can expose a handle run, never the reverse
  if (rules.strip_links) s = strip_urls(s);
  if (rules.strip_reply_handles && is_reply) s = strip_leading_handles(s);
  return text::collapse_whitespace(s);
}

struct QualifiedTweet {
  std::string tweet_id;
  std::string text;
};

/// The account's tweets that survive qualification, processed, in corpus order.
inline std::vector<QualifiedTweet> qualify_tweets(const Corpus& corpus, const std::string& account_id,
                                                  const QualificationRules& rules) {
  std::vector<QualifiedTweet> out;
  for (auto i : corpus.tweet_indices_of(account_id)) {
    const auto& t = corpus.tweets()[i];
    if (rules.exclude_retweets && t.kind == TweetKind::retweet) continue;
    if (rules.english_only && !is_english(t.language)) continue;
    auto processed = process_text(t.text, t.kind == TweetKind::reply, rules);
    if (processed.empty() || text::codepoint_count(processed) < rules.min_chars_after_processing)
      continue;
    out.push_back({t.tweet_id, std::move(processed)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scoring

struct AccountScore {
  std::string account_id;
  std::size_t n_qualified = 0;
  std::optional<double> mean_score;  // absent when nothing was scored
  std::vector<double> per_tweet_scores;
};

/// Unweighted mean of per-text scores.
template <typename Texts>
AccountScore score_account(std::string account_id, const Texts& texts, const TextDetector& detector) {
  AccountScore s;
  s.account_id = std::move(account_id);
  double sum = 0;
  for (const auto& t : texts) {
    double v = detector.score(t);
    s.per_tweet_scores.push_back(v);
    sum += v;
  }
  s.n_qualified = s.per_tweet_scores.size();
  if (s.n_qualified) s.mean_score = sum / static_cast<double>(s.n_qualified);
  return s;
}

/// Joins the texts with `separator` and scores the result once.
template <typename Texts>
double concat_and_score(const Texts& texts, const TextDetector& detector, std::string_view separator = "\n") {
  std::string joined;
  bool first = true;
  for (const auto& t : texts) {
    if (!first) joined += separator;
    joined += t;
    first = false;
  }
  if (first) throw PreconditionError("concat_and_score needs at least one text");
  return detector.score(joined);
}

enum class ScoringMode { per_tweet, concatenated };

/// Qualifies and scores every listed account. Runs up to `threads` workers
/// when the detector allows it; output order follows `account_ids`.
inline std::vector<AccountScore> score_accounts(const Corpus& corpus,
                                                const std::vector<std::string>& account_ids,
                                                const QualificationRules& rules,
                                                const TextDetector& detector,
                                                ScoringMode mode = ScoringMode::per_tweet,
                                                unsigned threads = 1) {
  std::vector<AccountScore> out(account_ids.size());
  auto job = [&](std::size_t i) {
    std::vector<std::string> texts;
    for (auto& q : qualify_tweets(corpus, account_ids[i], rules)) texts.push_back(std::move(q.text));
    if (mode == ScoringMode::per_tweet || texts.empty()) {
      out[i] = score_account(account_ids[i], texts, detector);
    } else {
      double v = concat_and_score(texts, detector);
      out[i] = AccountScore{account_ids[i], texts.size(), v, {v}};
    }
  };
  if (!detector.concurrent_safe()) threads = 1;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(account_ids.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < account_ids.size(); ++i) job(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; !failed && (i = next++) < account_ids.size();) {
          try {
            job(i);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  return out;
}

inline std::vector<AccountScore> filter_min_qualified(const std::vector<AccountScore>& scores,
                                                      std::size_t min_n) {
  if (min_n < 1) throw PreconditionError("min_n must be >= 1");
  std::vector<AccountScore> out;
  for (const auto& s : scores)
    if (s.mean_score && s.n_qualified >= min_n) out.push_back(s);
  return out;
}

}  // namespace botscope::detect
