#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <unistd.h>

#include "botscope/corpus.hpp"

namespace testing_support {

namespace fs = std::filesystem;

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("botscope_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline botscope::Account account(const std::string& id, std::int64_t followers = 0) {
  botscope::Account a;
  a.account_id = id;
  a.handle = id;
  a.created_at = 1500000000;
  a.follower_count = followers;
  return a;
}

inline botscope::Tweet tweet(const std::string& id, const std::string& author,
                             botscope::TweetKind kind = botscope::TweetKind::original,
                             const std::string& text = "hello world",
                             const std::optional<std::string>& target = std::nullopt) {
  botscope::Tweet t;
  t.tweet_id = id;
  t.author_id = author;
  t.created_at = 1680000000;
  t.text = text;
  t.kind = kind;
  t.language = "en";
  if (kind == botscope::TweetKind::reply) t.in_reply_to_account = target;
  if (kind == botscope::TweetKind::retweet || kind == botscope::TweetKind::quote) t.referenced_account = target;
  return t;
}

/// Builder for small in-memory corpora.
struct Fixture {
  botscope::CorpusData d;
  int next_tweet = 1;

  Fixture& accounts(std::initializer_list<std::string> ids) {
    for (const auto& id : ids) d.accounts.push_back(account(id));
    return *this;
  }
  Fixture& post(const std::string& author, botscope::TweetKind kind = botscope::TweetKind::original,
                const std::string& text = "hello world", const std::optional<std::string>& target = std::nullopt) {
    d.tweets.push_back(tweet("t" + std::to_string(next_tweet++), author, kind, text, target));
    return *this;
  }
  Fixture& link(const std::string& author, const std::string& url) {
    auto t = tweet("t" + std::to_string(next_tweet++), author, botscope::TweetKind::original, "see " + url);
    t.urls.push_back(url);
    d.tweets.push_back(std::move(t));
    return *this;
  }
  Fixture& follow(const std::string& s, const std::string& t) {
    d.follow_edges.push_back({s, t, 0});
    return *this;
  }
  Fixture& group(const std::string& name, std::initializer_list<std::string> ids) {
    d.partition.groups[name].insert(ids.begin(), ids.end());
    return *this;
  }
  botscope::Corpus build() const { return botscope::Corpus(d); }
};

}  // namespace testing_support
