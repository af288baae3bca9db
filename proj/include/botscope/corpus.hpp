#pragma once

// Offline social-media corpus: accounts, tweets, follow edges and group labels,
// loaded from JSONL/CSV into an immutable indexed dataset.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "botscope/common.hpp"
#include "botscope/text.hpp"

namespace botscope {

enum class TweetKind { original, reply, retweet, quote };

inline std::string_view to_string(TweetKind k) {
  switch (k) {
    case TweetKind::original: return "original";
    case TweetKind::reply: return "reply";
    case TweetKind::retweet: return "retweet";
    case TweetKind::quote: return "quote";
  }
  return "original";
}

inline std::optional<TweetKind> parse_tweet_kind(std::string_view s) {
  if (s == "original") return TweetKind::original;
  if (s == "reply") return TweetKind::reply;
  if (s == "retweet") return TweetKind::retweet;
  if (s == "quote") return TweetKind::quote;
  return std::nullopt;
}

struct Account {
  std::string account_id;
  std::string handle;
  Timestamp created_at = 0;
  std::int64_t follower_count = 0;
  std::int64_t following_count = 0;
  std::int64_t tweet_count = 0;
  std::string description;
  std::size_t line = 0;  // source line (1-based), 0 when built in memory
};

struct Tweet {
  std::string tweet_id;
  std::string author_id;
  Timestamp created_at = 0;
  std::string text;
  TweetKind kind = TweetKind::original;
  std::optional<std::string> in_reply_to_account;
  std::optional<std::string> referenced_account;
  std::vector<std::string> hashtags;
  std::vector<std::string> urls;
  std::optional<std::string> language;
  std::size_t line = 0;
};

struct FollowEdge {
  std::string source;  // the follower
  std::string target;  // the followed
  std::size_t line = 0;
};

struct GroupPartition {
  std::map<std::string, AccountSet> groups;

  std::optional<std::string> group_of(const std::string& account_id) const {
    for (const auto& [name, members] : groups)
      if (members.count(account_id)) return name;
    return std::nullopt;
  }
};

/// One invariant violation or ingestion problem.
struct Violation {
  std::string file;  // accounts | tweets | edges | labels
  std::size_t line = 0;
  std::string id;
  std::string rule;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

/// Mutable raw records; the input to Corpus construction and the output of
/// the synthetic generators.
struct CorpusData {
  std::vector<Account> accounts;
  std::vector<Tweet> tweets;
  std::vector<FollowEdge> follow_edges;
  GroupPartition partition;
  std::vector<Violation> ingest_issues;

  /// Appends another fragment. Group memberships are unioned per name.
  void merge(CorpusData other) {
    for (auto& a : other.accounts) accounts.push_back(std::move(a));
    for (auto& t : other.tweets) tweets.push_back(std::move(t));
    for (auto& e : other.follow_edges) follow_edges.push_back(std::move(e));
    for (auto& [name, members] : other.partition.groups)
      partition.groups[name].insert(members.begin(), members.end());
    for (auto& v : other.ingest_issues) ingest_issues.push_back(std::move(v));
  }
};

/// Immutable, indexed corpus. Safe to share read-only across threads.
class Corpus {
 public:
  Corpus() = default;

  /// Throws DuplicateIdError on a repeated account_id or tweet_id.
  explicit Corpus(CorpusData data) : data_(std::move(data)) {
    for (std::size_t i = 0; i < data_.accounts.size(); ++i)
      if (!account_index_.emplace(data_.accounts[i].account_id, i).second)
        throw DuplicateIdError(data_.accounts[i].account_id);
    for (std::size_t i = 0; i < data_.tweets.size(); ++i) {
      const auto& t = data_.tweets[i];
      if (!tweet_index_.emplace(t.tweet_id, i).second) throw DuplicateIdError(t.tweet_id);
      by_author_[t.author_id].push_back(i);
    }
  }

  const std::vector<Account>& accounts() const noexcept { return data_.accounts; }
  const std::vector<Tweet>& tweets() const noexcept { return data_.tweets; }
  const std::vector<FollowEdge>& follow_edges() const noexcept { return data_.follow_edges; }
  const GroupPartition& partition() const noexcept { return data_.partition; }
  const std::vector<Violation>& ingest_issues() const noexcept { return data_.ingest_issues; }
  const CorpusData& data() const noexcept { return data_; }

  const Account* find_account(const std::string& id) const {
    auto it = account_index_.find(id);
    return it == account_index_.end() ? nullptr : &data_.accounts[it->second];
  }
  bool has_account(const std::string& id) const { return account_index_.count(id) > 0; }

  const Tweet* find_tweet(const std::string& id) const {
    auto it = tweet_index_.find(id);
    return it == tweet_index_.end() ? nullptr : &data_.tweets[it->second];
  }

  /// Indices into tweets() authored by the given id (dangling authors included).
  std::span<const std::size_t> tweet_indices_of(const std::string& author_id) const {
    auto it = by_author_.find(author_id);
    if (it == by_author_.end()) return {};
    return it->second;
  }

  std::vector<const Tweet*> tweets_of(const std::string& author_id) const {
    std::vector<const Tweet*> out;
    for (auto i : tweet_indices_of(author_id)) out.push_back(&data_.tweets[i]);
    return out;
  }

  /// Members of a named group; throws DataError when the group is unknown.
  const AccountSet& group(const std::string& name) const {
    auto it = data_.partition.groups.find(name);
    if (it == data_.partition.groups.end()) throw DataError("unknown group: " + name);
    return it->second;
  }

  AccountSet all_account_ids() const {
    AccountSet ids;
    for (const auto& a : data_.accounts) ids.insert(a.account_id);
    return ids;
  }

  std::string canonical_json() const;

 private:
  CorpusData data_;
  std::unordered_map<std::string, std::size_t> account_index_;
  std::unordered_map<std::string, std::size_t> tweet_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_author_;
};

// ---------------------------------------------------------------------------
// JSON record mapping

/// Config-driven field renames so exports with different field names can be
/// ingested. Keys are "<record>.<canonical_field>" (record is accounts, tweets
/// or edges); values are the field name used in the source file.
struct FieldMap {
  std::map<std::string, std::string> renames;

  std::string source_name(std::string_view record, std::string_view field) const {
    auto it = renames.find(std::string(record) + "." + std::string(field));
    return it == renames.end() ? std::string(field) : it->second;
  }

  /// Parses lines of the form "tweets.author_id = user_id"; '#' starts a comment.
  static FieldMap from_file(const std::string& path) {
    FieldMap fm;
    for (const auto& line : read_list_file(path)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw DataError("field map line lacks '=': " + line);
      auto key = trim(std::string_view(line).substr(0, eq));
      auto val = trim(std::string_view(line).substr(eq + 1));
      if (key.find('.') == std::string::npos || val.empty())
        throw DataError("bad field map entry: " + line);
      fm.renames[key] = val;
    }
    return fm;
  }
};

inline std::string normalize_hashtag(std::string_view tag) {
  std::size_t b = 0;
  while (b < tag.size() && tag[b] == '#') ++b;
  return text::lowercase(trim(tag.substr(b)));
}

namespace detail {

using nlohmann::json;

struct RecordError {
  std::string rule;
  std::string detail;
};

class RecordReader {
 public:
  RecordReader(const json& obj, const FieldMap& fm, std::string_view record)
      : obj_(obj), fm_(fm), record_(record) {}

  const json* find(std::string_view field) const {
    auto it = obj_.find(fm_.source_name(record_, field));
    if (it == obj_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  std::string required_string(std::string_view field) const {
    const json* v = find(field);
    if (!v) throw RecordError{"missing-field", std::string(field)};
    if (!v->is_string()) throw RecordError{"invalid-field", std::string(field) + " must be a string"};
    return v->get<std::string>();
  }

  std::optional<std::string> optional_string(std::string_view field) const {
    const json* v = find(field);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw RecordError{"invalid-field", std::string(field) + " must be a string"};
    return v->get<std::string>();
  }

  std::int64_t required_count(std::string_view field) const {
    const json* v = find(field);
    if (!v) throw RecordError{"missing-field", std::string(field)};
    if (!v->is_number_integer())
      throw RecordError{"invalid-field", std::string(field) + " must be an integer"};
    auto n = v->get<std::int64_t>();
    if (n < 0) throw RecordError{"invalid-field", std::string(field) + " must be >= 0"};
    return n;
  }

  /// ISO-8601 string or integer epoch seconds.
  Timestamp required_time(std::string_view field) const {
    const json* v = find(field);
    if (!v) throw RecordError{"missing-field", std::string(field)};
    if (v->is_number_integer()) return v->get<std::int64_t>();
    if (v->is_string()) {
      if (auto t = parse_iso8601(v->get<std::string>())) return *t;
    }
    throw RecordError{"invalid-field", std::string(field) + " is not an ISO-8601 instant"};
  }

  std::vector<std::string> string_list(std::string_view field) const {
    std::vector<std::string> out;
    const json* v = find(field);
    if (!v) return out;
    if (!v->is_array()) throw RecordError{"invalid-field", std::string(field) + " must be an array"};
    for (const auto& e : *v) {
      if (!e.is_string())
        throw RecordError{"invalid-field", std::string(field) + " must hold strings"};
      out.push_back(e.get<std::string>());
    }
    return out;
  }

 private:
  const json& obj_;
  const FieldMap& fm_;
  std::string_view record_;
};

inline Account parse_account(const json& obj, const FieldMap& fm) {
  RecordReader r(obj, fm, "accounts");
  Account a;
  a.account_id = r.required_string("account_id");
  if (a.account_id.empty()) throw RecordError{"invalid-field", "account_id is empty"};
  a.handle = r.optional_string("handle").value_or("");
  a.created_at = r.required_time("created_at");
  a.follower_count = r.required_count("follower_count");
  a.following_count = r.required_count("following_count");
  a.tweet_count = r.required_count("tweet_count");
  a.description = r.optional_string("description").value_or("");
  return a;
}

inline Tweet parse_tweet(const json& obj, const FieldMap& fm) {
  RecordReader r(obj, fm, "tweets");
  Tweet t;
  t.tweet_id = r.required_string("tweet_id");
  if (t.tweet_id.empty()) throw RecordError{"invalid-field", "tweet_id is empty"};
  t.author_id = r.required_string("author_id");
  if (t.author_id.empty()) throw RecordError{"invalid-field", "author_id is empty"};
  t.created_at = r.required_time("created_at");
  t.text = r.required_string("text");
  auto kind = parse_tweet_kind(r.required_string("kind"));
  if (!kind) throw RecordError{"invalid-field", "kind must be original|reply|retweet|quote"};
  t.kind = *kind;
  t.in_reply_to_account = r.optional_string("in_reply_to_account");
  t.referenced_account = r.optional_string("referenced_account");
  for (auto& h : r.string_list("hashtags")) {
    auto n = normalize_hashtag(h);
    if (!n.empty()) t.hashtags.push_back(std::move(n));
  }
  t.urls = r.string_list("urls");
  t.language = r.optional_string("language");
  return t;
}

inline FollowEdge parse_edge(const json& obj, const FieldMap& fm) {
  RecordReader r(obj, fm, "edges");
  FollowEdge e;
  e.source = r.required_string("source");
  e.target = r.required_string("target");
  if (e.source.empty() || e.target.empty()) throw RecordError{"invalid-field", "empty endpoint"};
  return e;
}

/// Streams a JSONL file, handing each parsed object to `handle`. Lines that
/// fail are recorded in `issues`. Blank lines are ignored.
template <typename Parse, typename Sink>
void read_jsonl(const std::string& path, const std::string& file_label, double max_malformed,
                std::vector<Violation>& issues, Parse parse, Sink sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::string line;
  std::size_t lineno = 0, total = 0, malformed = 0, first_bad = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++total;
    auto fail = [&](std::string rule, std::string detail, std::string id = {}) {
      ++malformed;
      if (!first_bad) first_bad = lineno;
      issues.push_back({file_label, lineno, std::move(id), std::move(rule), std::move(detail)});
    };
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      fail("malformed-json", e.what());
      continue;
    }
    if (!obj.is_object()) {
      fail("malformed-json", "record is not a JSON object");
      continue;
    }
    try {
      auto rec = parse(obj);
      rec.line = lineno;
      sink(std::move(rec));
    } catch (const RecordError& e) {
      std::string id;
      for (const char* key : {"tweet_id", "account_id"})
        if (auto it = obj.find(key); it != obj.end() && it->is_string()) id = it->get<std::string>();
      fail(e.rule, e.detail, id);
    }
  }
  if (in.bad()) throw IoError("error while reading file: " + path);
  // A single bad line is always tolerated; beyond that the fraction decides.
  if (malformed > 1 && static_cast<double>(malformed) > max_malformed * static_cast<double>(total))
    throw SchemaError(path + ": " + std::to_string(malformed) + " of " + std::to_string(total) +
                          " records malformed; first offending line " + std::to_string(first_bad),
                      first_bad);
}

}  // namespace detail

/// Reads labels.csv ("account_id,group_name" header required).
inline GroupPartition read_labels_csv(const std::string& path, std::vector<Violation>& issues) {
  auto lines = read_lines(path);
  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw SchemaError(path + ": missing header row", 1);
  auto header = csv_split(lines[first]);
  if (header.size() != 2 || trim(header[0]) != "account_id" || trim(header[1]) != "group_name")
    throw SchemaError(path + ": header must be 'account_id,group_name'", first + 1);
  GroupPartition p;
  std::map<std::string, std::string> assigned;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto f = csv_split(lines[i]);
    if (f.size() != 2 || trim(f[0]).empty() || trim(f[1]).empty()) {
      issues.push_back({"labels", i + 1, "", "malformed-label", "expected account_id,group_name"});
      continue;
    }
    auto id = trim(f[0]), group = trim(f[1]);
    auto [it, fresh] = assigned.emplace(id, group);
    if (!fresh && it->second != group) {
      issues.push_back({"labels", i + 1, id, "overlapping-groups",
                        "already in group " + it->second + ", ignored for " + group});
      continue;
    }
    p.groups[group].insert(id);
  }
  return p;
}

struct LoadOptions {
  FieldMap field_map;
  std::optional<std::size_t> tweet_cap;  // keep at most N most recent tweets per author
  double max_malformed_fraction = 0.10;
};

/// Keeps the `cap` most recent tweets of each author (ties: smaller tweet_id kept).
inline void apply_tweet_cap(std::vector<Tweet>& tweets, std::size_t cap) {
  std::map<std::string, std::vector<std::size_t>> by_author;
  for (std::size_t i = 0; i < tweets.size(); ++i) by_author[tweets[i].author_id].push_back(i);
  std::vector<bool> keep(tweets.size(), true);
  for (auto& [author, idx] : by_author) {
    if (idx.size() <= cap) continue;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (tweets[a].created_at != tweets[b].created_at)
        return tweets[a].created_at > tweets[b].created_at;
      return tweets[a].tweet_id < tweets[b].tweet_id;
    });
    for (std::size_t k = cap; k < idx.size(); ++k) keep[idx[k]] = false;
  }
  std::vector<Tweet> kept;
  for (std::size_t i = 0; i < tweets.size(); ++i)
    if (keep[i]) kept.push_back(std::move(tweets[i]));
  tweets = std::move(kept);
}

/// Loads a corpus from JSONL/CSV files. Malformed records are collected in
/// ingest_issues(); see detail::read_jsonl for the fatal threshold.
inline Corpus load_corpus(const std::string& account_path, const std::string& tweet_path,
                          const std::optional<std::string>& edge_path = std::nullopt,
                          const std::optional<std::string>& label_path = std::nullopt,
                          const LoadOptions& opts = {}) {
  CorpusData d;
  const auto& fm = opts.field_map;
  detail::read_jsonl(account_path, "accounts", opts.max_malformed_fraction, d.ingest_issues,
                     [&](const nlohmann::json& o) { return detail::parse_account(o, fm); },
                     [&](Account a) { d.accounts.push_back(std::move(a)); });
  detail::read_jsonl(tweet_path, "tweets", opts.max_malformed_fraction, d.ingest_issues,
                     [&](const nlohmann::json& o) { return detail::parse_tweet(o, fm); },
                     [&](Tweet t) { d.tweets.push_back(std::move(t)); });
  if (opts.tweet_cap) apply_tweet_cap(d.tweets, *opts.tweet_cap);
  if (edge_path) {
    std::set<std::pair<std::string, std::string>> seen;
    detail::read_jsonl(*edge_path, "edges", opts.max_malformed_fraction, d.ingest_issues,
                       [&](const nlohmann::json& o) { return detail::parse_edge(o, fm); },
                       [&](FollowEdge e) {
                         if (e.source == e.target) {
                           d.ingest_issues.push_back(
                               {"edges", e.line, e.source, "self-loop-edge", "dropped"});
                         } else if (!seen.emplace(e.source, e.target).second) {
                           d.ingest_issues.push_back({"edges", e.line, e.source + "->" + e.target,
                                                      "duplicate-edge", "dropped"});
                         } else {
                           d.follow_edges.push_back(std::move(e));
                         }
                       });
  }
  if (label_path) {
    d.partition = read_labels_csv(*label_path, d.ingest_issues);
    AccountSet known;
    for (const auto& a : d.accounts) known.insert(a.account_id);
    for (auto& [name, members] : d.partition.groups) {
      for (auto it = members.begin(); it != members.end();) {
        if (!known.count(*it)) {
          d.ingest_issues.push_back({"labels", 0, *it, "unknown-group-member", "group " + name});
          it = members.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return Corpus(std::move(d));
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline int file_rank(const std::string& f) {
  if (f == "accounts") return 0;
  if (f == "tweets") return 1;
  if (f == "edges") return 2;
  if (f == "labels") return 3;
  return 4;
}

}  // namespace detail

/// Every recorded ingestion issue plus every type-invariant violation found
/// in the corpus, ordered by (file, line, rule, id).
inline ValidationReport validate(const Corpus& corpus) {
  ValidationReport r = corpus.ingest_issues();
  for (const auto& a : corpus.accounts()) {
    if (a.follower_count < 0 || a.following_count < 0 || a.tweet_count < 0)
      r.push_back({"accounts", a.line, a.account_id, "negative-count", ""});
  }
  for (const auto& t : corpus.tweets()) {
    auto add = [&](const char* rule) { r.push_back({"tweets", t.line, t.tweet_id, rule, ""}); };
    bool is_reply = t.kind == TweetKind::reply;
    bool is_ref = t.kind == TweetKind::retweet || t.kind == TweetKind::quote;
    if (is_reply && !t.in_reply_to_account) add("reply-missing-target");
    if (!is_reply && t.in_reply_to_account) add("unexpected-reply-target");
    if (is_ref && !t.referenced_account) add("retweet-missing-target");
    if (!is_ref && t.referenced_account) add("unexpected-referenced-account");
    for (const auto& h : t.hashtags)
      if (h.empty() || h.front() == '#' || normalize_hashtag(h) != h) {
        add("unnormalized-hashtag");
        break;
      }
    if (!corpus.has_account(t.author_id)) add("dangling-author");
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : corpus.follow_edges()) {
    if (e.source == e.target)
      r.push_back({"edges", e.line, e.source, "self-loop-edge", ""});
    else if (!seen.emplace(e.source, e.target).second)
      r.push_back({"edges", e.line, e.source + "->" + e.target, "duplicate-edge", ""});
  }
  std::map<std::string, std::string> owner;
  for (const auto& [name, members] : corpus.partition().groups) {
    for (const auto& id : members) {
      if (!corpus.has_account(id)) r.push_back({"labels", 0, id, "unknown-group-member", "group " + name});
      auto [it, fresh] = owner.emplace(id, name);
      if (!fresh) r.push_back({"labels", 0, id, "overlapping-groups", it->second + "," + name});
    }
  }
  std::stable_sort(r.begin(), r.end(), [](const Violation& a, const Violation& b) {
    auto ka = std::make_tuple(detail::file_rank(a.file), a.line, a.rule, a.id);
    auto kb = std::make_tuple(detail::file_rank(b.file), b.line, b.rule, b.id);
    return ka < kb;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const Account& a) {
  return {{"account_id", a.account_id},         {"handle", a.handle},
          {"created_at", format_iso8601(a.created_at)}, {"follower_count", a.follower_count},
          {"following_count", a.following_count}, {"tweet_count", a.tweet_count},
          {"description", a.description}};
}

inline nlohmann::ordered_json to_json(const Tweet& t) {
  auto opt = [](const std::optional<std::string>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  return {{"tweet_id", t.tweet_id},
          {"author_id", t.author_id},
          {"created_at", format_iso8601(t.created_at)},
          {"text", t.text},
          {"kind", to_string(t.kind)},
          {"in_reply_to_account", opt(t.in_reply_to_account)},
          {"referenced_account", opt(t.referenced_account)},
          {"hashtags", t.hashtags},
          {"urls", t.urls},
          {"language", opt(t.language)}};
}

inline nlohmann::ordered_json to_json(const FollowEdge& e) {
  return {{"source", e.source}, {"target", e.target}};
}

inline std::string Corpus::canonical_json() const {
  nlohmann::ordered_json j;
  auto& acc = j["accounts"] = nlohmann::ordered_json::array();
  for (const auto& a : data_.accounts) acc.push_back(to_json(a));
  auto& tw = j["tweets"] = nlohmann::ordered_json::array();
  for (const auto& t : data_.tweets) tw.push_back(to_json(t));
  auto& ed = j["follow_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : data_.follow_edges) ed.push_back(to_json(e));
  auto& gr = j["groups"] = nlohmann::ordered_json::object();
  for (const auto& [name, members] : data_.partition.groups) gr[name] = members;
  return j.dump();
}

struct CorpusPaths {
  std::string accounts, tweets, edges, labels;

  static CorpusPaths in(const std::filesystem::path& dir) {
    return {(dir / "accounts.jsonl").string(), (dir / "tweets.jsonl").string(),
            (dir / "edges.jsonl").string(), (dir / "labels.csv").string()};
  }
};

namespace detail {

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path);
  return out;
}

}  // namespace detail

/// Writes the four input files (records in stored order, labels sorted).
inline CorpusPaths write_corpus(const CorpusData& d, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto paths = CorpusPaths::in(dir);
  {
    auto out = detail::open_out(paths.accounts);
    for (const auto& a : d.accounts) out << to_json(a).dump() << '\n';
  }
  {
    auto out = detail::open_out(paths.tweets);
    for (const auto& t : d.tweets) out << to_json(t).dump() << '\n';
  }
  {
    auto out = detail::open_out(paths.edges);
    for (const auto& e : d.follow_edges) out << to_json(e).dump() << '\n';
  }
  {
    auto out = detail::open_out(paths.labels);
    out << "account_id,group_name\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [name, members] : d.partition.groups)
      for (const auto& id : members) rows.emplace_back(id, name);
    std::sort(rows.begin(), rows.end());
    for (const auto& [id, name] : rows) out << csv_row({id, name}) << '\n';
  }
  return paths;
}

inline CorpusPaths write_corpus(const Corpus& c, const std::filesystem::path& dir) {
  return write_corpus(c.data(), dir);
}

}  // namespace botscope
