#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"

namespace botscope::linkmap {

/// A lowercased hostname without scheme, credentials, port, path or leading
/// "www." labels, e.g. "fox8.news". Always contains at least one dot.
class Domain {
 public:
  /// Normalizes a URL or bare host; nullopt when no hostname can be read.
  static std::optional<Domain> from_url(std::string_view url) {
    std::string s = trim(url);
    if (s.empty()) return std::nullopt;
    std::string_view v = s;
    if (auto p = v.find("://"); p != std::string_view::npos) {
      auto scheme = v.substr(0, p);
      if (scheme.empty() || !std::all_of(scheme.begin(), scheme.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
          }))
        return std::nullopt;
      v.remove_prefix(p + 3);
    } else if (v.substr(0, 2) == "//") {
      v.remove_prefix(2);
    }
    v = v.substr(0, v.find_first_of("/?#"));
    if (auto at = v.rfind('@'); at != std::string_view::npos) v.remove_prefix(at + 1);
    if (auto colon = v.rfind(':'); colon != std::string_view::npos) {
      auto port = v.substr(colon + 1);
      if (!std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
      v = v.substr(0, colon);
    }
    std::string host;
    for (char c : v) {
      auto uc = static_cast<unsigned char>(c);
      if (std::isalnum(uc) || c == '-' || c == '.' || c == '_')
        host += static_cast<char>(std::tolower(uc));
      else
        return std::nullopt;
    }
    while (!host.empty() && host.back() == '.') host.pop_back();
    if (host.find('.') == std::string::npos) return std::nullopt;
    while (host.rfind("www.", 0) == 0 && host.find('.', 4) != std::string::npos) host.erase(0, 4);
    // empty labels ("a..b", ".a") are not hostnames
    if (host.front() == '.' || host.find("..") != std::string::npos) return std::nullopt;
    return Domain(std::move(host));
  }

  /// Like from_url, but throws PreconditionError on failure.
  static Domain parse(std::string_view s) {
    auto d = from_url(s);
    if (!d) throw PreconditionError("not a domain: '" + std::string(s) + "'");
    return *d;
  }

  const std::string& value() const noexcept { return value_; }
  friend auto operator<=>(const Domain&, const Domain&) = default;

 private:
  explicit Domain(std::string v) : value_(std::move(v)) {}
  std::string value_;
};

using DomainSet = std::set<Domain>;

inline DomainSet default_seed_domains() {
  return {Domain::parse("fox8.news"), Domain::parse("cryptnomics.org"),
          Domain::parse("globaleconomics.news")};
}

inline DomainSet read_seed_file(const std::string& path) {
  DomainSet out;
  for (const auto& line : read_list_file(path)) out.insert(Domain::parse(line));
  return out;
}

struct DomainExtraction {
  std::vector<Domain> domains;  // one per parseable URL, in URL order
  std::size_t skipped = 0;
};

inline DomainExtraction extract_domains(const Tweet& tweet) {
  DomainExtraction out;
  for (const auto& u : tweet.urls) {
    if (auto d = Domain::from_url(u))
      out.domains.push_back(std::move(*d));
    else
      ++out.skipped;
  }
  return out;
}

/// Accounts with at least one tweet of any kind linking to a seed domain.
/// Authors missing from the account table are not returned.
inline AccountSet expand_by_domains(const Corpus& corpus, const DomainSet& seeds) {
  if (seeds.empty()) throw PreconditionError("expand_by_domains needs at least one seed domain");
  AccountSet out;
  for (const auto& t : corpus.tweets()) {
    if (out.count(t.author_id) || !corpus.has_account(t.author_id)) continue;
    for (const auto& d : extract_domains(t).domains)
      if (seeds.count(d)) {
        out.insert(t.author_id);
        break;
      }
  }
  return out;
}

/// Domain occurrence counts over the group's tweets (every link counts).
inline std::map<std::string, std::size_t> domain_tallies(const Corpus& corpus, const AccountSet& group) {
  std::map<std::string, std::size_t> tallies;
  for (const auto& id : group)
    for (const Tweet* t : corpus.tweets_of(id))
      for (const auto& d : extract_domains(*t).domains) ++tallies[d.value()];
  return tallies;
}

/// Top-k domains by count; ties broken by domain name.
inline std::vector<std::pair<std::string, std::size_t>> domain_frequency(const Corpus& corpus,
                                                                         const AccountSet& group,
                                                                         std::size_t k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  return top_k(domain_tallies(corpus, group), k);
}

struct DomainShareProfile {
  std::string account_id;
  std::size_t total_tweets = 0;
  std::size_t total_link_tweets = 0;   // tweets with >= 1 parseable link
  std::size_t target_link_tweets = 0;  // tweets linking to >= 1 target domain
  double share_probability = 0.0;      // target_link_tweets / total_tweets
};

struct DomainShareReport {
  std::vector<DomainShareProfile> profiles;  // one per group member, sorted by id
  double group_mean = 0.0;
};

inline DomainShareReport domain_share_profiles(const Corpus& corpus, const AccountSet& group,
                                               const DomainSet& targets) {
  if (targets.empty()) throw PreconditionError("domain_share_profiles needs target domains");
  DomainShareReport rep;
  double sum = 0;
  for (const auto& id : group) {
    DomainShareProfile p{id};
    for (const Tweet* t : corpus.tweets_of(id)) {
      ++p.total_tweets;
      auto ex = extract_domains(*t);
      if (!ex.domains.empty()) ++p.total_link_tweets;
      if (std::any_of(ex.domains.begin(), ex.domains.end(),
                      [&](const Domain& d) { return targets.count(d) > 0; }))
        ++p.target_link_tweets;
    }
    if (p.total_tweets)
      p.share_probability = static_cast<double>(p.target_link_tweets) / static_cast<double>(p.total_tweets);
    sum += p.share_probability;
    rep.profiles.push_back(std::move(p));
  }
  if (!rep.profiles.empty()) rep.group_mean = sum / static_cast<double>(rep.profiles.size());
  return rep;
}

}  // namespace botscope::linkmap
