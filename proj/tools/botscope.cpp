// botscope: command-line front end for the botnet forensics library.
//
// Exit status: 0 success, 1 usage error, 2 data error, 3 internal error.
// Diagnostics are one line on stderr; --json prints a machine-readable
// summary (schemas/summary.schema.json) on stdout.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "botscope/botscope.hpp"
#include "botscope/outputs.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace botscope;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusArgs {
  std::string dir;
  std::string accounts, tweets, edges, labels, field_map;
  std::size_t tweet_cap = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--corpus", dir, "Directory holding accounts.jsonl, tweets.jsonl, [edges.jsonl], [labels.csv]");
    cmd->add_option("--accounts", accounts, "accounts.jsonl");
    cmd->add_option("--tweets", tweets, "tweets.jsonl");
    cmd->add_option("--edges", edges, "edges.jsonl (follow edges)");
    cmd->add_option("--labels", labels, "labels.csv (account_id,group_name)");
    cmd->add_option("--field-map", field_map, "Field rename config (record.field = source_field)");
    cmd->add_option("--tweet-cap", tweet_cap, "Keep at most N most recent tweets per account (0 = no cap)");
  }

  Corpus load() const {
    std::string a = accounts, t = tweets, e = edges, l = labels;
    if (!dir.empty()) {
      auto p = CorpusPaths::in(dir);
      if (a.empty()) a = p.accounts;
      if (t.empty()) t = p.tweets;
      if (e.empty() && fs::exists(p.edges)) e = p.edges;
      if (l.empty() && fs::exists(p.labels)) l = p.labels;
    }
    if (a.empty() || t.empty()) throw UsageError("accounts and tweets inputs are required (--corpus or --accounts/--tweets)");
    for (const auto& path : {a, t, e, l})
      if (!path.empty() && !fs::exists(path)) throw IoError("missing input file: " + path);
    LoadOptions opts;
    if (!field_map.empty()) opts.field_map = FieldMap::from_file(field_map);
    if (tweet_cap > 0) opts.tweet_cap = tweet_cap;
    return load_corpus(a, t, e.empty() ? std::nullopt : std::optional(e),
                       l.empty() ? std::nullopt : std::optional(l), opts);
  }
};

struct Run {
  fs::path out_dir;
  std::vector<std::string> outputs;
  ordered_json metrics = ordered_json::object();
  int status = 0;

  fs::path file(const std::string& name) {
    outputs.push_back(name);
    return out_dir / name;
  }
};

std::string default_out_dir() {
  if (const char* env = std::getenv("BOTSCOPE_OUT"); env && *env) return env;
  return ".";
}

/// The named group when labels define it; otherwise every account.
AccountSet group_or_all(const Corpus& c, const std::string& name, bool explicit_name) {
  if (c.partition().groups.count(name)) return c.group(name);
  if (explicit_name) throw DataError("unknown group: " + name);
  return c.all_account_ids();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestCmd {
  CorpusArgs corpus;
  std::string export_dir;

  void run(Run& r) const {
    auto c = corpus.load();
    auto report = validate(c);
    out::write_validation(r.file("validation.csv"), report);
    if (!export_dir.empty()) write_corpus(c, export_dir);
    r.metrics["accounts"] = c.accounts().size();
    r.metrics["tweets"] = c.tweets().size();
    r.metrics["follow_edges"] = c.follow_edges().size();
    auto& groups = r.metrics["groups"] = ordered_json::object();
    for (const auto& [name, members] : c.partition().groups) groups[name] = members.size();
    r.metrics["violations"] = report.size();
    if (!report.empty()) r.status = 2;
  }
};

// ---------------------------------------------------------------------------
// scan-phrases

struct ScanCmd {
  CorpusArgs corpus;
  std::string phrases, rules;

  void run(Run& r) const {
    auto c = corpus.load();
    auto query = phrases.empty() ? seedscan::PhraseQuery::defaults() : seedscan::PhraseQuery::from_file(phrases);
    auto ruleset = rules.empty() ? seedscan::CategoryRuleset::defaults() : seedscan::CategoryRuleset::from_csv(rules);
    auto hits = seedscan::find_phrase_tweets(c, query);
    out::write_hits(r.file("hits.csv"), hits, c, ruleset);
    std::vector<std::string> ids;
    AccountSet authors;
    for (const auto& h : hits) {
      ids.push_back(h.tweet_id);
      authors.insert(h.author_id);
    }
    auto summary = seedscan::category_summary(ids, c, ruleset);
    out::write_categories(r.file("table1_categories.csv"), summary);
    r.metrics["hits"] = hits.size();
    r.metrics["authors"] = authors.size();
    auto& cats = r.metrics["categories"] = ordered_json::object();
    for (const auto& s : summary) cats[std::string(to_string(s.category))] = s.count;
  }
};

// ---------------------------------------------------------------------------
// expand-domains

struct ExpandCmd {
  CorpusArgs corpus;
  std::string seeds, group;
  std::size_t top = 10;

  void run(Run& r) const {
    auto c = corpus.load();
    auto seed_set = seeds.empty() ? linkmap::default_seed_domains() : linkmap::read_seed_file(seeds);
    auto expanded = linkmap::expand_by_domains(c, seed_set);
    out::write_account_list(r.file("expanded_accounts.csv"), expanded);
    AccountSet g = group.empty() ? expanded : c.group(group);
    out::write_ranking(r.file("domain_freq.csv"), "domain", linkmap::domain_frequency(c, g, top));
    auto shares = linkmap::domain_share_profiles(c, g, seed_set);
    out::write_share_profiles(r.file("share_profiles.csv"), shares);
    r.metrics["expanded_accounts"] = expanded.size();
    r.metrics["group_size"] = g.size();
    r.metrics["group_mean_share"] = out::real(shares.group_mean);
  }
};

// ---------------------------------------------------------------------------
// graph-stats

std::vector<graph::EdgeKind> kinds_from(const std::string& s) {
  if (s == "all") return {graph::EdgeKind::follow, graph::EdgeKind::reply, graph::EdgeKind::retweet};
  auto k = graph::parse_edge_kind(s);
  if (!k) throw UsageError("--kind must be follow, reply, retweet or all");
  return {*k};
}

/// Groups with at least two members, restricted to those named (if any).
GroupPartition pair_groups(const Corpus& c, const std::string& names) {
  GroupPartition p;
  if (names.empty()) {
    for (const auto& [name, members] : c.partition().groups)
      if (members.size() >= 2) p.groups[name] = members;
  } else {
    for (const auto& n : split_commas(names)) p.groups[n] = c.group(n);
  }
  return p;
}

ordered_json pair_json(const graph::PairRateMatrix& m) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < m.groups.size(); ++i)
    for (std::size_t k = 0; k < m.groups.size(); ++k)
      j[m.groups[i] + "->" + m.groups[k]] = out::real(m.rates[i][k]);
  return j;
}

struct GraphCmd {
  CorpusArgs corpus;
  std::string kind = "all", group, pair_group_names;

  void run(Run& r) const {
    auto c = corpus.load();
    std::optional<AccountSet> restriction;
    if (!group.empty()) restriction = c.group(group);
    else if (c.partition().groups.count("bot")) restriction = c.group("bot");
    auto pg = pair_groups(c, pair_group_names);
    AccountSet pair_nodes;
    for (const auto& [n, m] : pg.groups) pair_nodes.insert(m.begin(), m.end());

    out::CsvFile degrees(r.file("degrees.csv"), out::kDegreeHeader);
    out::CsvFile pairs(r.file("pairrates.csv"), out::kPairHeader);
    ordered_json summary = ordered_json::object();
    for (auto k : kinds_from(kind)) {
      auto g = graph::build_graph(c, k, restriction);
      auto ds = graph::degree_stats(g);
      out::write_edges(r.file("graph_" + std::string(to_string(k)) + ".csv"), g);
      out::append_degree_rows(degrees, k, ds);
      auto j = out::degree_json(ds, graph::largest_wcc(g).size());
      if (!pg.groups.empty()) {
        auto m = graph::pair_rate_matrix(graph::build_graph(c, k, pair_nodes), pg);
        out::append_pair_rows(pairs, k, m);
        j["pair_rates"] = pair_json(m);
      }
      summary[std::string(to_string(k))] = j;
    }
    out::write_json(r.file("degree_summary.json"), summary);
    r.metrics = summary;
  }
};

// ---------------------------------------------------------------------------
// content-stats

struct ContentCmd {
  CorpusArgs corpus;
  std::string group = "bot";
  bool group_given = false;
  int resolution = 20;
  std::size_t top = 10;

  void run(Run& r) const {
    auto c = corpus.load();
    auto g = group_or_all(c, group, group_given);
    auto gm = content::group_mix(c, g);
    out::write_ternary_points(r.file("ternary_points.csv"), gm);
    std::vector<content::TernaryPoint> pts;
    for (const auto& [id, p] : gm.points) pts.push_back(p);
    out::write_ternary_bins(r.file("ternary_bins.csv"), content::ternary_bin(pts, resolution));
    out::write_ranking(r.file("hashtags.csv"), "hashtag", content::hashtag_ranking(c, g, top));
    out::write_ranking(r.file("amplified.csv"), "account_id", content::amplified_accounts(c, g, top));
    auto prof = out::profile_json(c, g);
    out::write_json(r.file("profile_summary.json"), prof);
    r.metrics["accounts_with_tweets"] = gm.points.size();
    r.metrics["mix_mean"] = {out::real(gm.mean.pct_original), out::real(gm.mean.pct_reply),
                             out::real(gm.mean.pct_retweet_quote)};
    r.metrics["mix_sd"] = {out::real(gm.sd.pct_original), out::real(gm.sd.pct_reply),
                           out::real(gm.sd.pct_retweet_quote)};
    r.metrics["profile"] = prof;
  }
};

// ---------------------------------------------------------------------------
// score

struct ScoreCmd {
  CorpusArgs corpus;
  std::string detector = "heuristic", detector_config, groups, mode = "per-tweet";
  std::size_t min_qualified = 1;
  unsigned threads = 1;
  bool keep_retweets = false, all_languages = false, keep_handles = false, keep_links = false;

  void run(Run& r) const {
    auto c = corpus.load();
    auto det = detect::make_detector(detector, detector_config);
    detect::QualificationRules rules;
    rules.exclude_retweets = !keep_retweets;
    rules.english_only = !all_languages;
    rules.strip_reply_handles = !keep_handles;
    rules.strip_links = !keep_links;

    std::vector<std::string> ids;
    std::vector<std::string> labels;
    std::vector<std::string> names = groups.empty() ? std::vector<std::string>{} : split_commas(groups);
    if (names.empty())
      for (const auto& [n, m] : c.partition().groups) names.push_back(n);
    if (names.empty()) {
      for (const auto& a : c.accounts()) {
        ids.push_back(a.account_id);
        labels.emplace_back();
      }
    } else {
      for (const auto& n : names)
        for (const auto& id : c.group(n)) {
          ids.push_back(id);
          labels.push_back(n);
        }
    }
    auto scoring_mode = mode == "concat" ? detect::ScoringMode::concatenated : detect::ScoringMode::per_tweet;
    auto scores = detect::score_accounts(c, ids, rules, *det, scoring_mode, threads);
    out::write_account_scores(r.file("account_scores.csv"), scores);

    std::size_t unscored = 0, kept = 0;
    {
      out::CsvFile f(r.file("scores.csv"), {"account_id", "label", "score"});
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!scores[i].mean_score) {
          ++unscored;
          continue;
        }
        if (scores[i].n_qualified < min_qualified) continue;
        ++kept;
        f.row({scores[i].account_id, labels[i], fmt_real(*scores[i].mean_score, 12)});
      }
    }
    // Per-tweet category tallies by label.
    std::map<std::string, std::map<std::string, std::size_t>> bins;
    for (std::size_t i = 0; i < scores.size(); ++i)
      for (double v : scores[i].per_tweet_scores) {
        std::string cat = det->scale() == detect::ScoreScale::percent
                              ? std::string(to_string(detect::bin_openai(v)))
                              : (detect::classify_probability(v) ? "generated" : "not_generated");
        ++bins[labels[i]][cat];
      }
    {
      out::CsvFile f(r.file("score_bins.csv"), {"label", "category", "count"});
      for (const auto& [label, m] : bins)
        for (const auto& [cat, n] : m) f.row({label, cat, std::to_string(n)});
    }
    r.metrics["detector"] = det->name();
    r.metrics["accounts"] = scores.size();
    r.metrics["scored"] = scores.size() - unscored;
    r.metrics["unscored"] = unscored;
    r.metrics["kept_min_qualified"] = kept;
  }
};

// ---------------------------------------------------------------------------
// sweep / ttest

std::pair<std::vector<double>, std::vector<double>> split_labels(const std::vector<detect::LabeledScore>& s) {
  std::vector<double> bots, humans;
  for (const auto& x : s) (x.label == detect::Label::bot ? bots : humans).push_back(x.value);
  return {bots, humans};
}

struct SweepCmd {
  std::string scores, bot_label = "bot", human_label = "human";
  std::optional<double> recall_threshold;

  void run(Run& r) const {
    auto data = out::read_labeled_scores(scores, bot_label, human_label);
    auto sweep = detect::sweep_threshold(data);
    out::write_sweep_curve(r.file("sweep_curve.csv"), sweep.curve);
    auto [bots, humans] = split_labels(data);
    ordered_json s;
    s["n_bots"] = bots.size();
    s["n_humans"] = humans.size();
    s["best"] = out::threshold_json(sweep.best);
    s["welch"] = (bots.size() >= 2 && humans.size() >= 2) ? out::welch_json(detect::welch_t(bots, humans))
                                                          : ordered_json(nullptr);
    if (recall_threshold)
      s["recall_at"] = {{"threshold", *recall_threshold}, {"recall", out::real(detect::recall_at(data, *recall_threshold))}};
    out::write_json(r.file("summary.json"), s);
    r.metrics = s;
  }
};

struct TTestCmd {
  std::string scores, a_label = "bot", b_label = "human";

  void run(Run& r) const {
    auto data = out::read_labeled_scores(scores, a_label, b_label);
    auto [a, b] = split_labels(data);
    auto w = out::welch_json(detect::welch_t(a, b));
    w["n_a"] = a.size();
    w["n_b"] = b.size();
    out::write_json(r.file("ttest.json"), w);
    r.metrics = w;
  }
};

// ---------------------------------------------------------------------------
// synth

struct SynthCmd {
  std::string preset = "fox8", config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_bots, n_humans;
  std::vector<std::string> settings;

  void run(Run& r) const {
    if (preset != "fox8") throw UsageError("unknown preset: " + preset);
    synth::BotnetParams bp;
    synth::HumanParams hp;
    if (!config.empty()) synth::load_config(config, bp, hp);
    if (seed) {
      bp.rng_seed = *seed;
      hp.rng_seed = *seed + 1;
    }
    if (n_bots) bp.n_bots = *n_bots;
    if (n_humans) hp.n_humans = *n_humans;
    for (const auto& kv : settings) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--set expects key=value: " + kv);
      auto k = trim(kv.substr(0, eq)), v = trim(kv.substr(eq + 1));
      if (!synth::apply_setting(bp, k, v) && !synth::apply_setting(hp, k, v)) throw UsageError("unknown parameter: " + k);
    }
    auto data = synth::generate_botnet(bp);
    data.merge(synth::generate_humans(hp));
    Corpus check(data);  // rejects id collisions between fragments
    auto paths = write_corpus(data, r.out_dir);
    for (const auto& p : {paths.accounts, paths.tweets, paths.edges, paths.labels})
      r.outputs.push_back(fs::path(p).filename().string());
    auto scores = synth::simulate_scores(hp, bp.n_bots);
    out::write_labeled_scores(r.file("simulated_scores.csv"), scores, bp.group_name, hp.group_name);
    r.metrics["rng"] = Rng::kVersion;
    r.metrics["bot_seed"] = bp.rng_seed;
    r.metrics["human_seed"] = hp.rng_seed;
    r.metrics["accounts"] = data.accounts.size();
    r.metrics["tweets"] = data.tweets.size();
    r.metrics["follow_edges"] = data.follow_edges.size();
  }
};

// ---------------------------------------------------------------------------
// report

struct ReportCmd {
  CorpusArgs corpus;
  std::string group = "bot", scores, recall_scores, detector = "heuristic", detector_config;
  std::string bot_label = "bot", human_label = "human";
  double recall_threshold = 2.5;
  int resolution = 20;
  std::size_t top = 10;
  unsigned threads = 1;

  void run(Run& r) const {
    for (const auto& p : {scores, recall_scores})
      if (!p.empty() && !fs::exists(p)) throw IoError("missing prerequisite artifact: " + p);
    auto c = corpus.load();
    bool has_group = c.partition().groups.count(group) > 0;
    auto g = has_group ? c.group(group) : c.all_account_ids();

    out::write_json(r.file("fig1_profiles.json"), out::profile_json(c, g));

    {
      out::CsvFile degrees(r.file("fig2_degrees.csv"), out::kDegreeHeader);
      out::CsvFile pairs(r.file("fig2_pairrates.csv"), out::kPairHeader);
      auto pg = pair_groups(c, "");
      AccountSet pair_nodes;
      for (const auto& [n, m] : pg.groups) pair_nodes.insert(m.begin(), m.end());
      std::optional<AccountSet> restriction;
      if (has_group) restriction = g;
      for (auto k : {graph::EdgeKind::follow, graph::EdgeKind::reply, graph::EdgeKind::retweet}) {
        auto gr = graph::build_graph(c, k, restriction);
        out::append_degree_rows(degrees, k, graph::degree_stats(gr));
        if (!pg.groups.empty())
          out::append_pair_rows(pairs, k, graph::pair_rate_matrix(graph::build_graph(c, k, pair_nodes), pg));
      }
    }

    {
      auto gm = content::group_mix(c, g);
      std::vector<content::TernaryPoint> pts;
      for (const auto& [id, p] : gm.points) pts.push_back(p);
      out::write_ternary_bins(r.file("fig3_ternary.csv"), content::ternary_bin(pts, resolution));
    }
    out::write_ranking(r.file("fig4_hashtags.csv"), "hashtag", content::hashtag_ranking(c, g, top));
    out::write_ranking(r.file("fig4_amplified.csv"), "account_id", content::amplified_accounts(c, g, top));
    out::write_ranking(r.file("fig5_domains.csv"), "domain", linkmap::domain_frequency(c, g, top));

    {
      auto hits = seedscan::find_phrase_tweets(c, seedscan::PhraseQuery::defaults());
      std::vector<std::string> ids;
      for (const auto& h : hits) ids.push_back(h.tweet_id);
      out::write_categories(r.file("table1_categories.csv"),
                            seedscan::category_summary(ids, c, seedscan::CategoryRuleset::defaults()));
    }

    {
      ordered_json fig6 = {{"threshold", recall_threshold}, {"source", nullptr}, {"n_bots", 0}, {"recall", nullptr}};
      if (!recall_scores.empty()) {
        auto data = out::read_labeled_scores(recall_scores, bot_label, human_label);
        auto n = std::count_if(data.begin(), data.end(), [](const auto& s) { return s.label == detect::Label::bot; });
        fig6["source"] = fs::path(recall_scores).filename().string();
        fig6["n_bots"] = n;
        if (n > 0) fig6["recall"] = out::real(detect::recall_at(data, recall_threshold));
      }
      out::write_json(r.file("fig6_recall.json"), fig6);
      r.metrics["fig6_recall"] = fig6["recall"];
    }

    {
      std::vector<detect::LabeledScore> data;
      if (!scores.empty()) {
        data = out::read_labeled_scores(scores, bot_label, human_label);
      } else if (c.partition().groups.count(bot_label) && c.partition().groups.count(human_label)) {
        auto det = detect::make_detector(detector, detector_config);
        for (auto [name, label] : {std::pair{bot_label, detect::Label::bot}, std::pair{human_label, detect::Label::human}}) {
          const auto& members = c.group(name);
          std::vector<std::string> ids(members.begin(), members.end());
          for (const auto& s : detect::score_accounts(c, ids, {}, *det, detect::ScoringMode::per_tweet, threads))
            if (s.mean_score) data.push_back({*s.mean_score, label});
        }
      }
      bool both = std::any_of(data.begin(), data.end(), [](const auto& s) { return s.label == detect::Label::bot; }) &&
                  std::any_of(data.begin(), data.end(), [](const auto& s) { return s.label == detect::Label::human; });
      if (both) {
        auto sweep = detect::sweep_threshold(data);
        out::write_sweep_curve(r.file("fig8_sweep.csv"), sweep.curve);
        r.metrics["fig8_best"] = out::threshold_json(sweep.best);
      } else {
        out::write_sweep_curve(r.file("fig8_sweep.csv"), {});
        r.metrics["fig8_best"] = nullptr;
      }
    }
    r.metrics["group"] = has_group ? group : std::string("all");
    r.metrics["group_size"] = g.size();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"botscope: coordinated LLM-botnet forensics over offline social-media corpora"};
  app.require_subcommand(1);
  std::string out_dir = default_out_dir();
  bool json = false;
  app.add_option("--out", out_dir, "Output directory (default: $BOTSCOPE_OUT or .)");
  app.add_flag("--json", json, "Print a JSON summary on stdout");

  IngestCmd ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Load and validate a corpus");
  ingest.corpus.attach(c_ingest);
  c_ingest->add_option("--export", ingest.export_dir, "Write the loaded corpus back out as JSONL/CSV");

  ScanCmd scan;
  auto* c_scan = app.add_subcommand("scan-phrases", "Find and categorize self-revealing tweets");
  scan.corpus.attach(c_scan);
  c_scan->add_option("--phrases", scan.phrases, "phrases.txt (one phrase per line)");
  c_scan->add_option("--rules", scan.rules, "category_rules.csv (priority,category,trigger)");

  ExpandCmd expand;
  auto* c_expand = app.add_subcommand("expand-domains", "Expand a botnet by shared seed domains");
  expand.corpus.attach(c_expand);
  c_expand->add_option("--seeds", expand.seeds, "seeds.txt (one domain per line)");
  c_expand->add_option("--group", expand.group, "Group for frequency/share statistics (default: expanded set)");
  c_expand->add_option("--top", expand.top, "Number of domains to rank")->check(CLI::Range(1, 1000000));

  GraphCmd graphc;
  auto* c_graph = app.add_subcommand("graph-stats", "Interaction-graph degree, WCC and pair-rate metrics");
  graphc.corpus.attach(c_graph);
  c_graph->add_option("--kind", graphc.kind, "follow | reply | retweet | all")
      ->check(CLI::IsMember({"follow", "reply", "retweet", "all"}));
  c_graph->add_option("--group", graphc.group, "Restrict degree statistics to this group (default: bot if labeled)");
  c_graph->add_option("--pair-groups", graphc.pair_group_names, "Comma-separated groups for pair rates (default: all with >= 2 members)");

  ContentCmd content;
  auto* c_content = app.add_subcommand("content-stats", "Tweet mix, hashtags, amplified accounts, profiles");
  content.corpus.attach(c_content);
  auto* opt_group = c_content->add_option("--group", content.group, "Group to describe (default: bot, else all accounts)");
  c_content->add_option("--resolution", content.resolution, "Ternary lattice resolution")->check(CLI::Range(1, 1000));
  c_content->add_option("--top", content.top, "Ranking length")->check(CLI::Range(1, 1000000));

  ScoreCmd score;
  auto* c_score = app.add_subcommand("score", "Qualify tweets and compute account-level detector scores");
  score.corpus.attach(c_score);
  c_score->add_option("--detector", score.detector, "heuristic | stub | replay")
      ->check(CLI::IsMember({"heuristic", "stub", "replay"}));
  c_score->add_option("--detector-config", score.detector_config, "stub key, or replay_scores.jsonl path");
  c_score->add_option("--groups", score.groups, "Comma-separated groups to score (default: all labeled groups)");
  c_score->add_option("--mode", score.mode, "per-tweet | concat")->check(CLI::IsMember({"per-tweet", "concat"}));
  c_score->add_option("--min-qualified", score.min_qualified, "Minimum qualified tweets for scores.csv")
      ->check(CLI::Range(1, 1000000));
  c_score->add_option("--threads", score.threads, "Worker threads")->check(CLI::Range(1, 256));
  c_score->add_flag("--keep-retweets", score.keep_retweets, "Do not drop retweets");
  c_score->add_flag("--all-languages", score.all_languages, "Do not require English tweets");
  c_score->add_flag("--keep-handles", score.keep_handles, "Do not strip leading reply handles");
  c_score->add_flag("--keep-links", score.keep_links, "Do not strip links");

  SweepCmd sweep;
  auto* c_sweep = app.add_subcommand("sweep", "F1-maximizing threshold sweep over labeled scores");
  c_sweep->add_option("--scores", sweep.scores, "CSV with score and label columns")->required();
  c_sweep->add_option("--bot-label", sweep.bot_label, "Label of the positive class");
  c_sweep->add_option("--human-label", sweep.human_label, "Label of the negative class");
  c_sweep->add_option("--recall-threshold", sweep.recall_threshold, "Also report bot recall at this threshold");

  TTestCmd ttest;
  auto* c_ttest = app.add_subcommand("ttest", "Welch's t test between two labeled score samples");
  c_ttest->add_option("--scores", ttest.scores, "CSV with score and label columns")->required();
  c_ttest->add_option("--a-label", ttest.a_label, "First sample label");
  c_ttest->add_option("--b-label", ttest.b_label, "Second sample label");

  SynthCmd synthc;
  auto* c_synth = app.add_subcommand("synth", "Generate a synthetic botnet + human corpus");
  c_synth->add_option("--preset", synthc.preset, "Parameter preset")->check(CLI::IsMember({"fox8"}));
  c_synth->add_option("--seed", synthc.seed, "RNG seed (humans use seed + 1)");
  c_synth->add_option("--n-bots", synthc.n_bots, "Number of bot accounts");
  c_synth->add_option("--n-humans", synthc.n_humans, "Number of human accounts");
  c_synth->add_option("--config", synthc.config, "key = value parameter file");
  c_synth->add_option("--set", synthc.settings, "Override one parameter (key=value)");

  ReportCmd report;
  auto* c_report = app.add_subcommand("report", "Emit every figure/table data file");
  report.corpus.attach(c_report);
  c_report->add_option("--group", report.group, "Botnet group (default: bot, else all accounts)");
  c_report->add_option("--scores", report.scores, "Labeled account scores for the threshold sweep");
  c_report->add_option("--recall-scores", report.recall_scores, "Labeled scores for the recall figure");
  c_report->add_option("--recall-threshold", report.recall_threshold, "Recall threshold");
  c_report->add_option("--detector", report.detector, "Detector used when --scores is absent")
      ->check(CLI::IsMember({"heuristic", "stub", "replay"}));
  c_report->add_option("--detector-config", report.detector_config, "stub key, or replay_scores.jsonl path");
  c_report->add_option("--threads", report.threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "botscope: usage error: " << e.what() << '\n';
    return 1;
  }

  Run run;
  run.out_dir = out_dir;
  const std::string command = app.get_subcommands().front()->get_name();
  content.group_given = opt_group->count() > 0;
  try {
    std::filesystem::create_directories(run.out_dir);
    if (command == "ingest") ingest.run(run);
    else if (command == "scan-phrases") scan.run(run);
    else if (command == "expand-domains") expand.run(run);
    else if (command == "graph-stats") graphc.run(run);
    else if (command == "content-stats") content.run(run);
    else if (command == "score") score.run(run);
    else if (command == "sweep") sweep.run(run);
    else if (command == "ttest") ttest.run(run);
    else if (command == "synth") synthc.run(run);
    else if (command == "report") report.run(run);
  } catch (const UsageError& e) {
    std::cerr << "botscope: usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "botscope: data error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "botscope: data error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "botscope: data error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "botscope: data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "botscope: internal error: " << e.what() << '\n';
    return 3;
  }

  if (json) {
    ordered_json s;
    s["command"] = command;
    s["status"] = run.status == 0 ? "ok" : "invalid";
    s["out_dir"] = run.out_dir.string();
    s["outputs"] = run.outputs;
    s["metrics"] = run.metrics;
    std::cout << s.dump() << '\n';
  }
  if (run.status == 2) std::cerr << "botscope: data error: validation report is not empty\n";
  return run.status;
}
