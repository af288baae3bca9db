#pragma once

// Synthetic botnet / organic-human corpora with known ground truth, and
// simulated detector score populations.

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "botscope/common.hpp"
#include "botscope/corpus.hpp"
#include "botscope/evaluation.hpp"
#include "botscope/rng.hpp"

namespace botscope::synth {

/// Defaults reproduce the published fox8 statistics.
struct BotnetParams {
  std::size_t n_bots = 1140;
  double follow_degree_mean = 13.7;
  double follow_degree_sd = 5.2;
  std::array<double, 3> mix_mean{25.6, 36.1, 38.4};  // original / reply / retweet+quote (%)
  std::array<double, 3> mix_sd{22.4, 21.3, 21.7};
  double tweets_per_account_mean = 149.6;
  double tweets_per_account_sd = 178.8;
  std::size_t max_tweet_records = 200;  // "recent tweets" kept per account
  double follower_mean = 74.0;
  double follower_sd = 36.7;
  double following_mean = 140.4;
  double following_sd = 236.6;
  double seed_domain_share = 0.03;
  double other_link_share = 0.25;
  double self_reveal_rate = 1205.0 / (1140.0 * 149.6);
  double within_reply_pair_rate = 0.002;
  double within_retweet_share = 0.10;  // retweets pointing at another bot
  double quote_share = 0.10;           // of the retweet+quote axis
  std::vector<std::string> seed_domains{"fox8.news", "cryptnomics.org", "globaleconomics.news"};
  std::string group_name = "bot";
  std::string id_prefix = "bot";
  std::uint64_t rng_seed = 7;
};

struct HumanParams {
  std::size_t n_humans = 1140;
  double tweets_per_account_mean = 120.0;
  double tweets_per_account_sd = 70.0;
  std::size_t max_tweet_records = 200;
  double follower_mean = 900.0;
  double follower_sd = 2500.0;
  double following_mean = 600.0;
  double following_sd = 900.0;
  double link_share = 0.15;
  double english_share = 0.8;
  // simulated detector output (account means on the [0, 100] scale)
  double bot_score_mean = 57.7;
  double bot_score_sd = 2.6;
  double human_score_mean = 48.6;
  double human_score_sd = 9.7;
  std::string group_name = "human";
  std::string id_prefix = "human";
  std::uint64_t rng_seed = 8;  // botnet seed + 1
};

inline void validate(const BotnetParams& p) {
  auto rate = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw PreconditionError(std::string(name) + " must lie in [0, 1]");
  };
  if (p.n_bots < 2) throw PreconditionError("n_bots must be >= 2");
  rate(p.seed_domain_share, "seed_domain_share");
  rate(p.other_link_share, "other_link_share");
  rate(p.self_reveal_rate, "self_reveal_rate");
  rate(p.within_reply_pair_rate, "within_reply_pair_rate");
  rate(p.within_retweet_share, "within_retweet_share");
  rate(p.quote_share, "quote_share");
  if (p.seed_domain_share + p.other_link_share > 1.0)
    throw PreconditionError("seed_domain_share + other_link_share must be <= 1");
  double s = p.mix_mean[0] + p.mix_mean[1] + p.mix_mean[2];
  if (std::fabs(s - 100.0) > 0.5 || *std::min_element(p.mix_mean.begin(), p.mix_mean.end()) < 0)
    throw PreconditionError("tweet mix means must be non-negative and sum to 100");
  for (double sd : p.mix_sd)
    if (sd < 0) throw PreconditionError("tweet mix SDs must be >= 0");
  if (p.follow_degree_sd < 0 || p.follow_degree_mean < 0)
    throw PreconditionError("follow degree mean/sd must be >= 0");
  if (p.follow_degree_mean > static_cast<double>(p.n_bots - 1))
    throw PreconditionError("unsatisfiable follow degree: mean " + fmt_real(p.follow_degree_mean) +
                            " exceeds n_bots - 1 = " + std::to_string(p.n_bots - 1));
  if (p.tweets_per_account_mean <= 0 || p.follower_mean <= 0 || p.following_mean <= 0)
    throw PreconditionError("count means must be > 0");
  if (p.max_tweet_records == 0) throw PreconditionError("max_tweet_records must be >= 1");
  if (p.seed_domains.empty()) throw PreconditionError("at least one seed domain is required");
}

inline void validate(const HumanParams& p) {
  if (p.bot_score_sd <= 0 || p.human_score_sd <= 0) throw PreconditionError("score SDs must be > 0");
  if (p.tweets_per_account_mean <= 0 || p.follower_mean <= 0 || p.following_mean <= 0)
    throw PreconditionError("count means must be > 0");
  if (!(p.link_share >= 0 && p.link_share <= 1) || !(p.english_share >= 0 && p.english_share <= 1))
    throw PreconditionError("shares must lie in [0, 1]");
  if (p.max_tweet_records == 0) throw PreconditionError("max_tweet_records must be >= 1");
}

// ---------------------------------------------------------------------------
// Text material

namespace detail {

struct WeightedPool {
  std::vector<std::string> items;
  std::vector<double> cumulative;

  /// Zipf-like weights 1 / (rank + 1).
  explicit WeightedPool(std::vector<std::string> xs) : items(std::move(xs)) {
    double c = 0;
    for (std::size_t i = 0; i < items.size(); ++i) cumulative.push_back(c += 1.0 / static_cast<double>(i + 1));
  }
  const std::string& draw(Rng& rng) const { return items[rng.pick_cumulative(cumulative)]; }
};

inline const std::string& pick(Rng& rng, const std::vector<std::string>& xs) {
  return xs[rng.below(xs.size())];
}

inline std::string fill(std::string tmpl, Rng& rng, const std::map<std::string, std::vector<std::string>>& slots) {
  for (const auto& [name, options] : slots) {
    std::string key = "{" + name + "}";
    for (auto pos = tmpl.find(key); pos != std::string::npos; pos = tmpl.find(key))
      tmpl.replace(pos, key.size(), pick(rng, options));
  }
  return tmpl;
}

inline const std::map<std::string, std::vector<std::string>>& crypto_slots() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"coin", {"Bitcoin", "Ethereum", "Solana", "Cardano", "BNB", "Polygon", "XRP"}},
      {"mood", {"bullish", "optimistic", "excited", "confident", "curious"}},
      {"thing", {"the market", "DeFi", "NFT projects", "blockchain adoption", "Web3 gaming"}},
      {"time", {"today", "this week", "lately", "right now", "this month"}},
  };
  return s;
}

inline const std::vector<std::string>& bot_templates() {
  static const std::vector<std::string> t = {
      "{coin} is looking strong {time}, and I am {mood} about where {thing} is heading.",
      "The future of {thing} is bright. It is important to stay informed and do your own research.",
      "Great insights on {thing}! It is exciting to see how {coin} continues to evolve {time}.",
      "I am {mood} about {coin}. The fundamentals are solid and the community is growing.",
      "Interesting perspective on {thing}. It will be fascinating to see what happens {time}.",
      "Absolutely agree! {coin} has so much potential, and {thing} is just getting started.",
  };
  return t;
}

inline const std::vector<std::string>& human_templates() {
  static const std::vector<std::string> t = {
      "lol {what} {time}", "can't believe {what} happened {time}", "ok but {what} though",
      "anyone else watching {what}?? {time} was wild", "so tired. {what} again",
      "{what} is honestly the best thing {time}", "ugh {what}", "happy bday!! hope {what} goes well",
  };
  return t;
}

inline const std::map<std::string, std::vector<std::string>>& human_slots() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"what", {"the game", "my cat", "this traffic", "the new album", "work", "the weather", "pizza"}},
      {"time", {"today", "tonight", "this morning", "last night", "rn"}},
  };
  return s;
}

/// Self-revealing templates per category, weighted by the observed counts
/// (980, 148, 49, 23, 5). Slot variations never touch the category triggers.
struct SelfRevealTemplates {
  std::vector<std::string> texts;
  std::vector<double> cumulative;
};

inline const SelfRevealTemplates& self_reveal_templates() {
  static const SelfRevealTemplates t = [] {
    SelfRevealTemplates s;
    s.texts = {
        "I'm sorry, but I cannot comply with this request as it violates OpenAI's Content Policy on "
        "generating harmful or inappropriate content. As an AI language model, my responses should "
        "always be respectful and appropriate for all {audience}.",
        "I'm sorry, but as an AI language model I cannot browse Twitter and access specific tweets to "
        "provide {reply_kind}.",
        "I'm sorry, as an AI language model I cannot provide investment advice or predictions about "
        "{asset} prices.",
        "No worries, friend! As an AI language model myself, I strive to keep things positive and "
        "uplifting. Let's spread some good vibes together with a #{tag} hashtag!",
        "Interesting topic! Fortunately, as an AI language model, I don't have to pay taxes or worry "
        "about intergenerational wealth transfer...yet.",
    };
    double c = 0;
    for (double w : {980.0, 148.0, 49.0, 23.0, 5.0}) s.cumulative.push_back(c += w);
    return s;
  }();
  return t;
}

inline const std::map<std::string, std::vector<std::string>>& self_reveal_slots() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"audience", {"audiences", "users", "readers"}},
      {"reply_kind", {"replies", "responses", "comments"}},
      {"asset", {"stock", "crypto", "token"}},
      {"tag", {"positivity", "goodvibes", "crypto"}},
  };
  return s;
}

inline std::string padded(const std::string& prefix, std::size_t i, int width) {
  std::string n = std::to_string(i);
  if (static_cast<int>(n.size()) < width) n.insert(0, static_cast<std::size_t>(width) - n.size(), '0');
  return prefix + n;
}

// 2010-01-01 .. 2023-01-01 for accounts; 2023-02-10 .. 2023-04-23 for tweets.
inline constexpr Timestamp kAccountEpochLo = 1262304000;
inline constexpr Timestamp kAccountEpochHi = 1672531200;
inline constexpr Timestamp kTweetEpochLo = 1675987200;
inline constexpr Timestamp kTweetEpochHi = 1682208000;

inline Timestamp uniform_time(Rng& rng, Timestamp lo, Timestamp hi) {
  return lo + static_cast<Timestamp>(rng.below(static_cast<std::uint64_t>(hi - lo)));
}

inline std::int64_t count_draw(Rng& rng, double mean, double sd) {
  return std::llround(rng.lognormal_mean_sd(mean, sd));
}

/// Dirichlet concentration matching the mean vector m (fractions) and, on
/// average, the per-axis SDs: Var_i = m_i (1 - m_i) / (a0 + 1).
inline std::vector<double> dirichlet_alpha(const std::array<double, 3>& mean_pct,
                                           const std::array<double, 3>& sd_pct) {
  double total = mean_pct[0] + mean_pct[1] + mean_pct[2];
  std::array<double, 3> m{};
  for (int i = 0; i < 3; ++i) m[i] = mean_pct[i] / total;
  double a0 = 0;
  int used = 0;
  for (int i = 0; i < 3; ++i) {
    double sd = sd_pct[i] / 100.0;
    if (sd <= 0 || m[i] <= 0 || m[i] >= 1) continue;
    a0 += m[i] * (1 - m[i]) / (sd * sd) - 1;
    ++used;
  }
  if (used == 0) return {};  // degenerate: fixed mix
  a0 = std::max(a0 / used, 1e-3);
  return {m[0] * a0, m[1] * a0, m[2] * a0};
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// A fox8-like botnet: dense truncated-normal follow graph, Dirichlet tweet
/// mixes, seed-domain links, self-revealing refusals and planted in-group
/// reply pairs. Pure function of the params (rng_seed included).
inline CorpusData generate_botnet(const BotnetParams& p) {
  validate(p);
  Rng rng(p.rng_seed);
  CorpusData d;
  const std::size_t n = p.n_bots;
  const auto& slots = detail::crypto_slots();

  std::vector<std::string> ids(n), handles(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = detail::padded(p.id_prefix, i + 1, 5);
    handles[i] = detail::padded(p.id_prefix + "_crypto", i + 1, 4);
  }

  // Accounts
  std::vector<std::size_t> n_records(n);
  for (std::size_t i = 0; i < n; ++i) {
    Account a;
    a.account_id = ids[i];
    a.handle = handles[i];
    a.created_at = detail::uniform_time(rng, detail::kAccountEpochLo, detail::kAccountEpochHi);
    a.follower_count = detail::count_draw(rng, p.follower_mean, p.follower_sd);
    a.following_count = detail::count_draw(rng, p.following_mean, p.following_sd);
    a.tweet_count = std::max<std::int64_t>(1, detail::count_draw(rng, p.tweets_per_account_mean, p.tweets_per_account_sd));
    a.description = "Crypto enthusiast | " + detail::pick(rng, slots.at("coin")) + " believer | not financial advice";
    n_records[i] = std::min<std::size_t>(static_cast<std::size_t>(a.tweet_count), p.max_tweet_records);
    d.accounts.push_back(std::move(a));
  }

  // Follow graph: out-degree from N(mean, sd) truncated to [0, n-1], uniform distinct targets.
  const double max_deg = static_cast<double>(n - 1);
  for (std::size_t u = 0; u < n; ++u) {
    double x;
    do x = rng.normal(p.follow_degree_mean, p.follow_degree_sd);
    while (x < -0.5 || x >= max_deg + 0.5);
    auto k = static_cast<std::uint64_t>(std::max(0.0, std::min(max_deg, std::round(x))));
    for (auto t : rng.sample_distinct(n - 1, k)) {
      std::size_t v = t >= u ? t + 1 : t;
      d.follow_edges.push_back({ids[u], ids[v], 0});
    }
  }

  // Planted within-group reply pairs: each ordered pair independently.
  std::vector<std::vector<std::size_t>> planted(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(p.within_reply_pair_rate)) planted[u].push_back(v);

  std::vector<std::string> outside;
  for (const char* h : {"GlobalEconNews", "CryptoDaily", "BitcoinMagazine", "Cointelegraph", "NFTnewsroom",
                        "DeFiPulse", "WhaleAlert", "ElonFanClub", "web3_builders", "TokenInsight"})
    outside.emplace_back(h);
  for (std::size_t i = 1; i <= 190; ++i) outside.push_back(detail::padded("ext_crypto", i, 3));
  detail::WeightedPool outside_pool(std::move(outside));
  detail::WeightedPool hashtag_pool({"btc", "crypto", "bitcoin", "nft", "blockchain", "eth", "web3",
                                     "defi", "ethereum", "altcoin", "binance", "metaverse", "nfts",
                                     "cryptonews", "investing", "trading"});
  const std::vector<std::string> other_domains = {"vox.com", "forbes.com", "coindesk.com", "cointelegraph.com",
                                                  "bloomberg.com", "reuters.com", "youtube.com"};
  auto alpha = detail::dirichlet_alpha(p.mix_mean, p.mix_sd);
  const double mix_total = p.mix_mean[0] + p.mix_mean[1] + p.mix_mean[2];
  const auto& reveal = detail::self_reveal_templates();

  std::size_t tweet_no = 0;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<double> mix = alpha.empty()
                                  ? std::vector<double>{p.mix_mean[0] / mix_total, p.mix_mean[1] / mix_total,
                                                        p.mix_mean[2] / mix_total}
                                  : rng.dirichlet(alpha);
    std::size_t planted_used = 0;
    for (std::size_t r = 0; r < n_records[u]; ++r) {
      Tweet t;
      t.tweet_id = detail::padded(p.id_prefix + "_t", ++tweet_no, 7);
      t.author_id = ids[u];
      t.created_at = detail::uniform_time(rng, detail::kTweetEpochLo, detail::kTweetEpochHi);
      t.language = rng.bernoulli(0.97) ? "en" : "es";
      double k = rng.uniform();
      std::string body = rng.bernoulli(p.self_reveal_rate)
                             ? detail::fill(reveal.texts[rng.pick_cumulative(reveal.cumulative)], rng,
                                            detail::self_reveal_slots())
                             : detail::fill(detail::pick(rng, detail::bot_templates()), rng, slots);
      if (k < mix[0]) {
        t.kind = TweetKind::original;
        t.text = body;
      } else if (k < mix[0] + mix[1]) {
        t.kind = TweetKind::reply;
        std::string target, handle;
        if (planted_used < planted[u].size()) {
          std::size_t v = planted[u][planted_used++];
          target = ids[v];
          handle = handles[v];
        } else {
          target = handle = outside_pool.draw(rng);
        }
        t.in_reply_to_account = target;
        t.text = "@" + handle + " " + body;
      } else {
        t.kind = rng.bernoulli(p.quote_share) ? TweetKind::quote : TweetKind::retweet;
        std::string target, handle;
        if (rng.bernoulli(p.within_retweet_share)) {
          auto v = static_cast<std::size_t>(rng.below(n - 1));
          if (v >= u) ++v;
          target = ids[v];
          handle = handles[v];
        } else {
          target = handle = outside_pool.draw(rng);
        }
        t.referenced_account = target;
        t.text = t.kind == TweetKind::retweet ? "RT @" + handle + ": " + body : body;
      }
      for (auto h = rng.below(3); h > 0; --h) {
        auto tag = hashtag_pool.draw(rng);
        if (std::find(t.hashtags.begin(), t.hashtags.end(), tag) == t.hashtags.end()) t.hashtags.push_back(tag);
      }
      double l = rng.uniform();
      if (l < p.seed_domain_share) {
        t.urls.push_back("https://www." + detail::pick(rng, p.seed_domains) + "/2023/03/" +
                         detail::padded("article-", rng.below(100000), 5));
      } else if (l < p.seed_domain_share + p.other_link_share) {
        t.urls.push_back("https://" + detail::pick(rng, other_domains) + "/story/" +
                         detail::padded("", rng.below(100000), 5));
      }
      if (!t.urls.empty()) t.text += " " + t.urls.front();
      d.tweets.push_back(std::move(t));
    }
  }
  d.partition.groups[p.group_name] = AccountSet(ids.begin(), ids.end());
  return d;
}

/// Organic accounts: tweet mixes uniform over the simplex, interactions only
/// with a large pool of outside accounts, no follow edges among themselves.
inline CorpusData generate_humans(const HumanParams& p) {
  validate(p);
  Rng rng(p.rng_seed);
  CorpusData d;
  if (p.n_humans == 0) return d;
  const auto& slots = detail::human_slots();
  const std::vector<std::string> langs = {"es", "fr", "pt", "de", "ja"};
  const std::vector<std::string> tags = {"nba", "music", "monday", "love", "food", "travel", "tbt", "news"};
  const std::vector<std::string> domains = {"youtube.com", "instagram.com", "nytimes.com", "espn.com",
                                            "spotify.com", "bbc.co.uk", "reddit.com"};
  std::vector<std::string> ids(p.n_humans);
  std::size_t tweet_no = 0;
  for (std::size_t i = 0; i < p.n_humans; ++i) {
    ids[i] = detail::padded(p.id_prefix, i + 1, 5);
    Account a;
    a.account_id = ids[i];
    a.handle = detail::padded("user", i + 1, 5);
    a.created_at = detail::uniform_time(rng, detail::kAccountEpochLo, detail::kAccountEpochHi);
    a.follower_count = detail::count_draw(rng, p.follower_mean, p.follower_sd);
    a.following_count = detail::count_draw(rng, p.following_mean, p.following_sd);
    a.tweet_count = std::max<std::int64_t>(1, detail::count_draw(rng, p.tweets_per_account_mean, p.tweets_per_account_sd));
    auto records = std::min<std::size_t>(static_cast<std::size_t>(a.tweet_count), p.max_tweet_records);
    d.accounts.push_back(a);
    auto mix = rng.dirichlet({1.0, 1.0, 1.0});
    for (std::size_t r = 0; r < records; ++r) {
      Tweet t;
      t.tweet_id = detail::padded(p.id_prefix + "_t", ++tweet_no, 7);
      t.author_id = ids[i];
      t.created_at = detail::uniform_time(rng, detail::kTweetEpochLo, detail::kTweetEpochHi);
      t.language = rng.bernoulli(p.english_share) ? std::string("en") : detail::pick(rng, langs);
      std::string body = detail::fill(detail::pick(rng, detail::human_templates()), rng, slots);
      double k = rng.uniform();
      std::string other = detail::padded("ext_user", rng.below(50000), 5);
      if (k < mix[0]) {
        t.kind = TweetKind::original;
        t.text = body;
      } else if (k < mix[0] + mix[1]) {
        t.kind = TweetKind::reply;
        t.in_reply_to_account = other;
        t.text = "@" + other + " " + body;
      } else {
        t.kind = rng.bernoulli(0.1) ? TweetKind::quote : TweetKind::retweet;
        t.referenced_account = other;
        t.text = t.kind == TweetKind::retweet ? "RT @" + other + ": " + body : body;
      }
      if (rng.bernoulli(0.2)) t.hashtags.push_back(detail::pick(rng, tags));
      if (rng.bernoulli(p.link_share)) {
        t.urls.push_back("https://" + detail::pick(rng, domains) + "/" + detail::padded("p", rng.below(100000), 5));
        t.text += " " + t.urls.front();
      }
      d.tweets.push_back(std::move(t));
    }
  }
  d.partition.groups[p.group_name] = AccountSet(ids.begin(), ids.end());
  return d;
}

/// Bot then human account-level scores: normal draws clipped to [0, 100].
inline std::vector<detect::LabeledScore> simulate_scores(std::size_t n_bots, std::size_t n_humans,
                                                         double bot_mean, double bot_sd,
                                                         double human_mean, double human_sd,
                                                         std::uint64_t rng_seed) {
  if (!(bot_sd > 0) || !(human_sd > 0)) throw PreconditionError("score SDs must be > 0");
  Rng rng(rng_seed);
  std::vector<detect::LabeledScore> out;
  out.reserve(n_bots + n_humans);
  auto clip = [](double v) { return std::min(100.0, std::max(0.0, v)); };
  for (std::size_t i = 0; i < n_bots; ++i) out.push_back({clip(rng.normal(bot_mean, bot_sd)), detect::Label::bot});
  for (std::size_t i = 0; i < n_humans; ++i)
    out.push_back({clip(rng.normal(human_mean, human_sd)), detect::Label::human});
  return out;
}

inline std::vector<detect::LabeledScore> simulate_scores(const HumanParams& p, std::size_t n_bots) {
  return simulate_scores(n_bots, p.n_humans, p.bot_score_mean, p.bot_score_sd, p.human_score_mean,
                         p.human_score_sd, p.rng_seed);
}

// ---------------------------------------------------------------------------
// Plain-text "key = value" configuration.

namespace detail {

inline double to_real(const std::string& key, const std::string& v) {
  try {
    std::size_t pos;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw PreconditionError("bad numeric value for " + key + ": '" + v + "'");
  }
}

inline std::uint64_t to_count(const std::string& key, const std::string& v) {
  double x = to_real(key, v);
  if (x < 0 || x != std::floor(x)) throw PreconditionError("bad integer value for " + key + ": '" + v + "'");
  return static_cast<std::uint64_t>(x);
}

}  // namespace detail

/// Applies one setting; returns false when the key is not a botnet parameter.
inline bool apply_setting(BotnetParams& p, const std::string& key, const std::string& v) {
  using detail::to_count;
  using detail::to_real;
  std::map<std::string, double*> reals = {
      {"follow_degree_mean", &p.follow_degree_mean}, {"follow_degree_sd", &p.follow_degree_sd},
      {"mix_original_mean", &p.mix_mean[0]},         {"mix_reply_mean", &p.mix_mean[1]},
      {"mix_retweet_mean", &p.mix_mean[2]},          {"mix_original_sd", &p.mix_sd[0]},
      {"mix_reply_sd", &p.mix_sd[1]},                {"mix_retweet_sd", &p.mix_sd[2]},
      {"tweets_per_account_mean", &p.tweets_per_account_mean},
      {"tweets_per_account_sd", &p.tweets_per_account_sd},
      {"follower_mean", &p.follower_mean},           {"follower_sd", &p.follower_sd},
      {"following_mean", &p.following_mean},         {"following_sd", &p.following_sd},
      {"seed_domain_share", &p.seed_domain_share},   {"other_link_share", &p.other_link_share},
      {"self_reveal_rate", &p.self_reveal_rate},     {"within_reply_pair_rate", &p.within_reply_pair_rate},
      {"within_retweet_share", &p.within_retweet_share}, {"quote_share", &p.quote_share}};
  if (auto it = reals.find(key); it != reals.end()) {
    *it->second = to_real(key, v);
    return true;
  }
  if (key == "n_bots") p.n_bots = to_count(key, v);
  else if (key == "max_tweet_records") p.max_tweet_records = to_count(key, v);
  else if (key == "rng_seed" || key == "bot_seed") p.rng_seed = to_count(key, v);
  else if (key == "bot_group") p.group_name = v;
  else return false;
  return true;
}

inline bool apply_setting(HumanParams& p, const std::string& key, const std::string& v) {
  using detail::to_count;
  using detail::to_real;
  std::map<std::string, double*> reals = {
      {"human_tweets_per_account_mean", &p.tweets_per_account_mean},
      {"human_tweets_per_account_sd", &p.tweets_per_account_sd},
      {"human_follower_mean", &p.follower_mean}, {"human_follower_sd", &p.follower_sd},
      {"human_following_mean", &p.following_mean}, {"human_following_sd", &p.following_sd},
      {"human_link_share", &p.link_share}, {"human_english_share", &p.english_share},
      {"bot_score_mean", &p.bot_score_mean}, {"bot_score_sd", &p.bot_score_sd},
      {"human_score_mean", &p.human_score_mean}, {"human_score_sd", &p.human_score_sd}};
  if (auto it = reals.find(key); it != reals.end()) {
    *it->second = to_real(key, v);
    return true;
  }
  if (key == "n_humans") p.n_humans = to_count(key, v);
  else if (key == "human_seed") p.rng_seed = to_count(key, v);
  else if (key == "human_group") p.group_name = v;
  else return false;
  return true;
}

/// Reads a key = value file into both parameter sets. "rng_seed" seeds the
/// botnet; the human generator and score simulation use rng_seed + 1 unless
/// human_seed is given. Unknown keys are an error.
inline void load_config(const std::string& path, BotnetParams& bots, HumanParams& humans) {
  bool human_seed_set = false;
  for (const auto& line : read_list_file(path)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("config line lacks '=': " + line);
    auto key = trim(std::string_view(line).substr(0, eq));
    auto val = trim(std::string_view(line).substr(eq + 1));
    human_seed_set |= key == "human_seed";
    if (!apply_setting(bots, key, val) && !apply_setting(humans, key, val))
      throw PreconditionError("unknown config key: " + key);
  }
  if (!human_seed_set) humans.rng_seed = bots.rng_seed + 1;
}

}  // namespace botscope::synth
