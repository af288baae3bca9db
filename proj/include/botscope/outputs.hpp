#pragma once

// File formats written by the command-line tool. Every writer produces a
// header row even when there is no data, and formats reals through fmt_real
// so reruns are byte-identical.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "botscope/common.hpp"
#include "botscope/contentstats.hpp"
#include "botscope/corpus.hpp"
#include "botscope/detectors.hpp"
#include "botscope/evaluation.hpp"
#include "botscope/graph.hpp"
#include "botscope/linkmap.hpp"
#include "botscope/seedscan.hpp"

namespace botscope::out {

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw IoError("cannot write file: " + path.string());
    row(header);
  }
  void row(const std::vector<std::string>& fields) { out_ << csv_row(fields) << '\n'; }

 private:
  std::ofstream out_;
};

inline void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << j.dump(2) << '\n';
}

/// Reals as JSON numbers; non-finite values become null.
inline nlohmann::ordered_json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(fmt_real(v, 12));
}

inline void write_validation(const std::filesystem::path& p, const ValidationReport& r) {
  CsvFile f(p, {"file", "line", "id", "rule", "detail"});
  for (const auto& v : r) f.row({v.file, std::to_string(v.line), v.id, v.rule, v.detail});
}

inline void write_hits(const std::filesystem::path& p, const std::vector<seedscan::PhraseHit>& hits,
                       const Corpus& corpus, const seedscan::CategoryRuleset& rules) {
  CsvFile f(p, {"tweet_id", "author_id", "phrase", "category"});
  for (const auto& h : hits)
    f.row({h.tweet_id, h.author_id, h.phrase,
           std::string(to_string(seedscan::categorize_self_revealing(corpus.find_tweet(h.tweet_id)->text, rules)))});
}

inline void write_categories(const std::filesystem::path& p, const std::vector<seedscan::CategoryCount>& rows) {
  CsvFile f(p, {"category", "count", "percentage"});
  for (const auto& r : rows) f.row({std::string(to_string(r.category)), std::to_string(r.count), fmt_real(r.percentage)});
}

inline void write_ranking(const std::filesystem::path& p, const std::string& key_name,
                          const std::vector<std::pair<std::string, std::size_t>>& rows) {
  CsvFile f(p, {key_name, "count"});
  for (const auto& [k, n] : rows) f.row({k, std::to_string(n)});
}

inline void write_account_list(const std::filesystem::path& p, const AccountSet& ids) {
  CsvFile f(p, {"account_id"});
  for (const auto& id : ids) f.row({id});
}

inline void write_share_profiles(const std::filesystem::path& p, const linkmap::DomainShareReport& rep) {
  CsvFile f(p, {"account_id", "share_probability"});
  for (const auto& s : rep.profiles) f.row({s.account_id, fmt_real(s.share_probability)});
}

inline void write_edges(const std::filesystem::path& p, const graph::InteractionGraph& g) {
  CsvFile f(p, {"source", "target", "weight"});
  for (const auto& e : g.edges()) f.row({g.id(e.source), g.id(e.target), std::to_string(e.weight)});
}

/// Rows (kind, direction, degree, count); `f` may already hold other kinds.
inline void append_degree_rows(CsvFile& f, graph::EdgeKind kind, const graph::DegreeSummary& s) {
  for (const auto& [deg, n] : s.in_histogram)
    f.row({std::string(to_string(kind)), "in", std::to_string(deg), std::to_string(n)});
  for (const auto& [deg, n] : s.out_histogram)
    f.row({std::string(to_string(kind)), "out", std::to_string(deg), std::to_string(n)});
}

inline void append_pair_rows(CsvFile& f, graph::EdgeKind kind, const graph::PairRateMatrix& m) {
  for (std::size_t i = 0; i < m.groups.size(); ++i)
    for (std::size_t j = 0; j < m.groups.size(); ++j)
      f.row({std::string(to_string(kind)), m.groups[i], m.groups[j], std::to_string(m.pairs[i][j]),
             std::to_string(m.denominators[i][j]), fmt_real(m.rates[i][j], 12)});
}

inline const std::vector<std::string> kDegreeHeader = {"kind", "direction", "degree", "count"};
inline const std::vector<std::string> kPairHeader = {"kind", "source_group", "target_group", "pairs",
                                                     "denominator", "rate"};

inline nlohmann::ordered_json degree_json(const graph::DegreeSummary& s, std::size_t wcc) {
  return {{"nodes", s.node_count}, {"edges", s.edge_count},   {"mean_in", real(s.mean_in)},
          {"sd_in", real(s.sd_in)}, {"mean_out", real(s.mean_out)}, {"sd_out", real(s.sd_out)},
          {"largest_wcc", wcc}};
}

inline void write_ternary_points(const std::filesystem::path& p, const content::GroupMix& gm) {
  CsvFile f(p, {"account_id", "pct_original", "pct_reply", "pct_retweet_quote"});
  for (const auto& [id, pt] : gm.points)
    f.row({id, fmt_real(pt.pct_original), fmt_real(pt.pct_reply), fmt_real(pt.pct_retweet_quote)});
}

inline void write_ternary_bins(const std::filesystem::path& p, const content::TernaryBinGrid& g) {
  CsvFile f(p, {"i", "j", "k", "count"});
  for (const auto& [c, n] : g.bins)
    f.row({std::to_string(c[0]), std::to_string(c[1]), std::to_string(c[2]), std::to_string(n)});
}

/// Profile summary; all statistics null when the group has no known accounts.
inline nlohmann::ordered_json profile_json(const Corpus& corpus, const AccountSet& group) {
  nlohmann::ordered_json j;
  auto ms = [](const MeanSd& m) { return nlohmann::ordered_json{{"mean", real(m.mean)}, {"sd", real(m.sd)}}; };
  bool any = std::any_of(group.begin(), group.end(), [&](const auto& id) { return corpus.has_account(id); });
  if (!any) {
    j["n_accounts"] = 0;
    j["followers"] = j["following"] = j["tweets"] = {{"mean", nullptr}, {"sd", nullptr}};
    j["creation_years"] = nlohmann::ordered_json::object();
    return j;
  }
  auto s = content::profile_summary(corpus, group);
  j["n_accounts"] = s.n_accounts;
  j["followers"] = ms(s.followers);
  j["following"] = ms(s.following);
  j["tweets"] = ms(s.tweets);
  auto& years = j["creation_years"] = nlohmann::ordered_json::object();
  for (const auto& [y, n] : s.creation_years) years[std::to_string(y)] = n;
  return j;
}

inline void write_account_scores(const std::filesystem::path& p, const std::vector<detect::AccountScore>& scores) {
  CsvFile f(p, {"account_id", "n_qualified", "mean_score"});
  for (const auto& s : scores)
    f.row({s.account_id, std::to_string(s.n_qualified), s.mean_score ? fmt_real(*s.mean_score, 12) : ""});
}

inline void write_sweep_curve(const std::filesystem::path& p, const std::vector<detect::ThresholdResult>& curve) {
  CsvFile f(p, {"threshold", "precision", "recall", "f1"});
  for (const auto& r : curve)
    f.row({fmt_real(r.threshold, 12), fmt_real(r.precision, 12), fmt_real(r.recall, 12), fmt_real(r.f1, 12)});
}

inline nlohmann::ordered_json welch_json(const detect::WelchResult& w) {
  return {{"t", real(w.t)},           {"df", real(w.df)},     {"p", real(w.p)},
          {"mean_a", real(w.mean_a)}, {"mean_b", real(w.mean_b)}, {"sd_a", real(w.sd_a)},
          {"sd_b", real(w.sd_b)}};
}

inline nlohmann::ordered_json threshold_json(const detect::ThresholdResult& r) {
  return {{"threshold", real(r.threshold)}, {"precision", real(r.precision)},
          {"recall", real(r.recall)},       {"f1", real(r.f1)}};
}

/// Reads a labeled score table. The score column is "score", "mean_score" or
/// "value"; the label column is "label" or "group". Rows whose label is
/// neither `bot_label` nor `human_label`, or whose score is blank, are skipped.
inline std::vector<detect::LabeledScore> read_labeled_scores(const std::string& path,
                                                             const std::string& bot_label = "bot",
                                                             const std::string& human_label = "human") {
  auto lines = read_lines(path);
  if (lines.empty()) throw SchemaError(path + ": missing header row", 1);
  auto header = csv_split(lines[0]);
  auto col = [&](std::initializer_list<const char*> names) -> std::optional<std::size_t> {
    for (const char* n : names)
      for (std::size_t i = 0; i < header.size(); ++i)
        if (trim(header[i]) == n) return i;
    return std::nullopt;
  };
  auto sc = col({"score", "mean_score", "value"});
  auto lc = col({"label", "group"});
  if (!sc || !lc) throw SchemaError(path + ": header needs a score column and a label column", 1);
  std::vector<detect::LabeledScore> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto f = csv_split(lines[i]);
    if (f.size() <= std::max(*sc, *lc)) throw SchemaError(path + ": short row on line " + std::to_string(i + 1), i + 1);
    auto label = trim(f[*lc]), value = trim(f[*sc]);
    if (value.empty()) continue;
    detect::Label l;
    if (label == bot_label) l = detect::Label::bot;
    else if (label == human_label) l = detect::Label::human;
    else continue;
    double v;
    try {
      std::size_t pos;
      v = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw SchemaError(path + ": bad score on line " + std::to_string(i + 1), i + 1);
    }
    out.push_back({v, l});
  }
  return out;
}

inline void write_labeled_scores(const std::filesystem::path& p, const std::vector<detect::LabeledScore>& scores,
                                 const std::string& bot_label = "bot", const std::string& human_label = "human") {
  CsvFile f(p, {"label", "score"});
  for (const auto& s : scores)
    f.row({s.label == detect::Label::bot ? bot_label : human_label, fmt_real(s.value, 12)});
}

}  // namespace botscope::out
