#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace botscope {

/// Base class for problems with user-supplied data (bad files, bad records,
/// violated preconditions on data). The CLI maps these to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class SchemaError : public DataError {
 public:
  SchemaError(const std::string& msg, std::size_t first_line)
      : DataError(msg), first_line_(first_line) {}
  std::size_t first_line() const noexcept { return first_line_; }

 private:
  std::size_t first_line_;
};

class DuplicateIdError : public DataError {
 public:
  explicit DuplicateIdError(std::string id)
      : DataError("duplicate identifier: " + id), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// A violated precondition of a library operation (empty seed set, k == 0...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AccountSet = std::set<std::string>;

// ---------------------------------------------------------------------------
// Timestamps: seconds since the Unix epoch, UTC.

using Timestamp = std::int64_t;

namespace detail {

inline bool parse_digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

/// Parses an ISO-8601 instant: YYYY-MM-DD[Thh:mm[:ss[.fff]]][Z|+hh:mm|-hh:mm].
/// A space is accepted in place of 'T'. Fractional seconds are truncated.
/// A missing offset is read as UTC.
inline std::optional<Timestamp> parse_iso8601(std::string_view s) {
  using namespace std::chrono;
  int y, mo, d, h = 0, mi = 0, sec = 0;
  if (!detail::parse_digits(s, 0, 4, y) || s.size() < 10 || s[4] != '-' ||
      !detail::parse_digits(s, 5, 2, mo) || s[7] != '-' || !detail::parse_digits(s, 8, 2, d))
    return std::nullopt;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  std::size_t pos = 10;
  long offset = 0;
  if (pos < s.size()) {
    if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ') return std::nullopt;
    ++pos;
    if (!detail::parse_digits(s, pos, 2, h) || pos + 2 >= s.size() || s[pos + 2] != ':' ||
        !detail::parse_digits(s, pos + 3, 2, mi))
      return std::nullopt;
    pos += 5;
    if (pos < s.size() && s[pos] == ':') {
      if (!detail::parse_digits(s, pos + 1, 2, sec)) return std::nullopt;
      pos += 3;
      if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) return std::nullopt;
      }
    }
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
    if (pos < s.size()) {
      if ((s[pos] == 'Z' || s[pos] == 'z') && pos + 1 == s.size()) {
        pos += 1;
      } else if (s[pos] == '+' || s[pos] == '-') {
        int oh, om = 0;
        if (!detail::parse_digits(s, pos + 1, 2, oh)) return std::nullopt;
        std::size_t p = pos + 3;
        if (p < s.size() && s[p] == ':') ++p;
        if (p < s.size()) {
          if (!detail::parse_digits(s, p, 2, om)) return std::nullopt;
          p += 2;
        }
        if (p != s.size() || oh > 23 || om > 59) return std::nullopt;
        offset = (oh * 3600L + om * 60L) * (s[pos] == '-' ? -1 : 1);
        pos = p;
      } else {
        return std::nullopt;
      }
    }
  }
  if (pos != s.size()) return std::nullopt;
  auto days = sys_days{ymd}.time_since_epoch().count();
  return static_cast<Timestamp>(days) * 86400 + h * 3600L + mi * 60L + sec - offset;
}

/// Formats as "YYYY-MM-DDThh:mm:ssZ".
inline std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  auto days = static_cast<long>(std::floor(static_cast<double>(t) / 86400.0));
  long rem = static_cast<long>(t - static_cast<Timestamp>(days) * 86400);
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60));
  return buf;
}

inline int year_of(Timestamp t) {
  using namespace std::chrono;
  auto days = static_cast<long>(std::floor(static_cast<double>(t) / 86400.0));
  return static_cast<int>(year_month_day{sys_days{std::chrono::days{days}}}.year());
}

// ---------------------------------------------------------------------------
// Digest used to key replayed detector scores. FNV-1a, 64 bit, over the raw
// UTF-8 bytes; rendered as 16 lowercase hex digits. Changing this breaks every
// recorded replay file, so it is frozen.

inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t basis = 0xcbf29ce484222325ULL) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string text_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

// ---------------------------------------------------------------------------
// Number formatting. Output files must be byte-identical across reruns, so all
// reals go through one printf-style path.

inline std::string fmt_real(double v, int precision = 10) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Minimal CSV (RFC 4180 quoting) helpers.

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

/// Splits one CSV record. Quoted fields may contain commas and doubled quotes
/// but not newlines.
inline std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Reads every line of a text file (without trailing newline characters).
inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("error while reading file: " + path);
  return lines;
}

/// One entry per non-blank, non-comment ('#') line, trimmed.
inline std::vector<std::string> read_list_file(const std::string& path) {
  std::vector<std::string> out;
  for (const auto& line : read_lines(path)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

/// Ranks (key, count) pairs by count descending then key ascending, keeping k.
template <typename Key, typename Count>
std::vector<std::pair<Key, Count>> top_k(const std::map<Key, Count>& tallies, std::size_t k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  std::vector<std::pair<Key, Count>> ranked(tallies.begin(), tallies.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

/// Population mean and standard deviation (divide by N). Empty input gives 0, 0.
struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

template <typename Range>
MeanSd population_mean_sd(const Range& values) {
  double n = 0, sum = 0;
  for (double v : values) {
    sum += v;
    n += 1;
  }
  if (n == 0) return {};
  double mean = sum / n, ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

}  // namespace botscope
