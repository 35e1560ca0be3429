#pragma once

/**
 * @file survey.hpp
 * @brief Survey records and batches: JSON / CSV parsing, validation and JSON
 *        serialization.
 *
 * JSON layout:
 * @code
 * { "criteria": ["C1", ...],
 *   "respondents": [
 *     { "id": "1", "age": 24, "sex": "male", "visited": true,
 *       "scores": [0.6, ...], "ranks": [3, ...],
 *       "comparisons": [ {"i": 1, "j": 2, "value": "1/4"}, ... ] } ] }
 * @endcode
 * Indices are 1-based. Only i < j is required; an entry for i > j is checked
 * against the reciprocal of its mirror. A full "matrix" (list of rows, null
 * allowed below the diagonal) may replace "comparisons". Numeric values are
 * numbers or strings holding a decimal or a fraction "p/q".
 *
 * CSV layout: respondents.csv with header
 * `id,age,sex,visited,score:<label>...,rank:<label>...` and comparisons.csv
 * with header `id,i,j,value`.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "prefrank/comparison.hpp"
#include "prefrank/errors.hpp"
#include "prefrank/ranking.hpp"
#include "prefrank/respondent.hpp"

namespace prefrank {

struct SurveyRecord {
  Attributes who;
  /// Direct scores as given (SR before normalization).
  std::vector<double> scores;
  /// Direct ranks (RR).
  std::vector<int> ranks;
  ComparisonMatrix matrix;

  bool operator==(const SurveyRecord&) const = default;
};

struct SurveyBatch {
  std::vector<std::string> criteria;
  std::vector<SurveyRecord> records;

  std::size_t criteria_count() const noexcept { return criteria.size(); }
  bool operator==(const SurveyBatch&) const = default;
};

struct ParseOptions {
  /// Restrict direct scores to {1/5, ..., 1} and comparisons to {1/5, ..., 5}.
  bool strict_scale = true;
};

inline constexpr std::array<double, 5> kScoreScale{0.2, 0.4, 0.6, 0.8, 1.0};
inline constexpr std::array<double, 9> kComparisonScale{1.0 / 5, 1.0 / 4, 1.0 / 3, 1.0 / 2, 1.0, 2.0, 3.0, 4.0, 5.0};
inline constexpr double kScaleTolerance = 1e-6;

template <std::size_t N>
bool on_scale(double v, const std::array<double, N>& scale) {
  return std::any_of(scale.begin(), scale.end(),
                     [v](double s) { return std::abs(v - s) <= kScaleTolerance * s; });
}

/// Parses "0.25", "1/4", "2", " 3 / 5 ". Returns nullopt on malformed text or
/// a zero denominator.
inline std::optional<double> parse_fraction(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) -> std::optional<double> {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return number(text);
  const auto num = number(text.substr(0, slash));
  const auto den = number(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

namespace detail {

/// A comparison matrix as read, before reciprocity is resolved. Entries are
/// 0-based; missing cells are nullopt.
struct RawMatrix {
  std::size_t n = 0;
  std::vector<std::optional<double>> cells;
  std::vector<std::string> problems;

  explicit RawMatrix(std::size_t order = 0) : n(order), cells(order * order) {}
  std::optional<double>& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
};

/// Resolves a raw matrix into upper-triangle values, appending every problem
/// to `violations` (prefixed by `who`).
inline std::optional<ComparisonMatrix> resolve_matrix(RawMatrix raw, const ParseOptions& opts, const std::string& who,
                                                      std::vector<std::string>& violations) {
  const std::size_t before = violations.size();
  for (auto& p : raw.problems) violations.push_back(who + ": " + p);
  const std::size_t n = raw.n;
  std::vector<double> upper;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto d = raw.at(i, i); d && std::abs(*d - 1.0) > kDiagonalTolerance)
      violations.push_back(fmt::format("{}: cell ({},{}) = {} but the diagonal must be 1", who, i + 1, i + 1, *d));
    for (std::size_t j = i + 1; j < n; ++j) {
      auto up = raw.at(i, j);
      auto lo = raw.at(j, i);
      bool bad = false;
      for (auto [cell, r, c] : {std::tuple{up, i, j}, std::tuple{lo, j, i}})
        if (cell && !(*cell > 0.0)) {
          violations.push_back(fmt::format("{}: cell ({},{}) = {} is not positive", who, r + 1, c + 1, *cell));
          bad = true;
        }
      if (bad) continue;
      if (!up && !lo) {
        violations.push_back(fmt::format("{}: missing comparison ({},{})", who, i + 1, j + 1));
        continue;
      }
      if (up && lo && std::abs(*up * *lo - 1.0) > kReciprocityTolerance) {
        violations.push_back(fmt::format("{}: cell ({},{}) = {} is not the reciprocal of cell ({},{}) = {}", who,
                                         j + 1, i + 1, *lo, i + 1, j + 1, *up));
        continue;
      }
      const double v = up ? *up : 1.0 / *lo;
      if (opts.strict_scale && !on_scale(v, kComparisonScale))
        violations.push_back(
            fmt::format("{}: cell ({},{}) = {} is off the comparison scale 1/5..5", who, i + 1, j + 1, v));
      upper.push_back(v);
    }
  }
  if (violations.size() != before) return std::nullopt;
  return ComparisonMatrix::from_upper(n, upper);
}

inline void validate_vectors(const std::string& who, std::size_t n, const std::vector<double>& scores,
                             const std::vector<int>& ranks, const ParseOptions& opts,
                             std::vector<std::string>& violations) {
  if (scores.size() != n)
    violations.push_back(fmt::format("{}: {} scores for {} criteria", who, scores.size(), n));
  for (std::size_t k = 0; k < scores.size(); ++k) {
    if (!(scores[k] > 0.0) || !std::isfinite(scores[k]))
      violations.push_back(fmt::format("{}: score {} = {} is not positive", who, k + 1, scores[k]));
    else if (opts.strict_scale && !on_scale(scores[k], kScoreScale))
      violations.push_back(fmt::format("{}: score {} = {} is off the rating scale 1/5..1", who, k + 1, scores[k]));
  }
  if (ranks.size() != n) violations.push_back(fmt::format("{}: {} ranks for {} criteria", who, ranks.size(), n));
  else if (!is_permutation_of_1_to_n(ranks))
    violations.push_back(fmt::format("{}: ranks are not a permutation of 1..{}", who, n));
}

inline void validate_batch_shape(const SurveyBatch& batch, std::vector<std::string>& violations) {
  if (batch.criteria.size() < 2)
    violations.push_back(fmt::format("at least 2 criteria are required, got {}", batch.criteria.size()));
}

using nlohmann::json;

inline std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }

inline double json_number(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    if (auto f = parse_fraction(v.get<std::string>())) return *f;
    throw ParseError(where, "cannot read '" + v.get<std::string>() + "' as a number or fraction");
  }
  throw ParseError(where, std::string("expected a number or fraction string, got ") + v.type_name());
}

inline const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, "missing field '" + key + "'");
  return *it;
}

inline int json_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) return static_cast<int>(v.get<double>());
  throw ParseError(where, std::string("expected an integer, got ") + v.type_name());
}

inline std::string json_id(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where, "id must be a string or an integer");
}

inline bool json_bool(const json& v, const std::string& where) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) return v.get<int>() == 1;
  throw ParseError(where, "expected true or false");
}

/// Reads either "comparisons" (triples) or "matrix" (rows) from an object.
inline RawMatrix json_matrix(const json& obj, std::size_t n, const std::string& where) {
  RawMatrix raw(n);
  if (auto it = obj.find("comparisons"); it != obj.end()) {
    if (!it->is_array()) throw ParseError(ptr(where, "comparisons"), "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string w = ptr(ptr(where, "comparisons"), std::to_string(k));
      const auto& e = (*it)[k];
      const int i = json_int(require(e, "i", w), ptr(w, "i"));
      const int j = json_int(require(e, "j", w), ptr(w, "j"));
      const double v = json_number(require(e, "value", w), ptr(w, "value"));
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
        raw.problems.push_back(fmt::format("comparison ({},{}) is outside 1..{}", i, j, n));
        continue;
      }
      auto& cell = raw.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (cell) raw.problems.push_back(fmt::format("comparison ({},{}) given more than once", i, j));
      cell = v;
    }
    return raw;
  }
  if (auto it = obj.find("matrix"); it != obj.end()) {
    const std::string w = ptr(where, "matrix");
    if (!it->is_array() || it->size() != n)
      throw ParseError(w, fmt::format("expected {} rows", n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = (*it)[i];
      if (!row.is_array() || row.size() != n)
        throw ParseError(ptr(w, std::to_string(i)), fmt::format("expected a row of {} entries", n));
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j].is_null()) continue;
        raw.at(i, j) = json_number(row[j], ptr(ptr(w, std::to_string(i)), std::to_string(j)));
      }
    }
    return raw;
  }
  throw ParseError(where, "missing field 'comparisons' (or 'matrix')");
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("byte {}", e.byte), e.what());
  }
}

}  // namespace detail

/// Batch from JSON text.
inline SurveyBatch parse_batch_json(std::string_view text, const ParseOptions& opts = {}) {
  using detail::json;
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) throw ParseError("/", "expected a JSON object");
  const auto& respondents = detail::require(doc, "respondents", "/");
  if (!respondents.is_array()) throw ParseError("/respondents", "expected an array");

  SurveyBatch batch;
  if (auto it = doc.find("criteria"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("/criteria", "expected an array of labels");
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_string()) throw ParseError("/criteria/" + std::to_string(k), "expected a string");
      batch.criteria.push_back((*it)[k].get<std::string>());
    }
  } else if (!respondents.empty() && respondents[0].is_object() && respondents[0].contains("scores") &&
             respondents[0]["scores"].is_array()) {
    batch.criteria = default_labels(respondents[0]["scores"].size());
  }

  const std::size_t n = batch.criteria.size();
  std::vector<std::string> violations;
  detail::validate_batch_shape(batch, violations);
  if (respondents.empty()) violations.push_back("batch has no respondents");
  std::set<std::string> ids;
  for (std::size_t r = 0; r < respondents.size(); ++r) {
    const std::string w = "/respondents/" + std::to_string(r);
    const auto& e = respondents[r];
    Attributes who;
    who.id = detail::json_id(detail::require(e, "id", w), w + "/id");
    who.age = detail::json_int(detail::require(e, "age", w), w + "/age");
    if (auto it = e.find("sex"); it != e.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError(w + "/sex", "expected a string");
      auto s = parse_sex(it->get<std::string>());
      if (!s) throw ParseError(w + "/sex", "expected male, female or unspecified");
      who.sex = *s;
    }
    if (auto it = e.find("visited"); it != e.end()) who.visited = detail::json_bool(*it, w + "/visited");

    const auto& js = detail::require(e, "scores", w);
    const auto& jr = detail::require(e, "ranks", w);
    if (!js.is_array()) throw ParseError(w + "/scores", "expected an array");
    if (!jr.is_array()) throw ParseError(w + "/ranks", "expected an array");
    std::vector<double> scores;
    for (std::size_t k = 0; k < js.size(); ++k) scores.push_back(detail::json_number(js[k], fmt::format("{}/scores/{}", w, k)));
    std::vector<int> ranks;
    for (std::size_t k = 0; k < jr.size(); ++k) ranks.push_back(detail::json_int(jr[k], fmt::format("{}/ranks/{}", w, k)));

    const std::string label = "respondent " + who.id;
    if (!ids.insert(who.id).second) violations.push_back(label + ": duplicate respondent id");
    if (who.age <= 0) violations.push_back(fmt::format("{}: age {} is not positive", label, who.age));
    detail::validate_vectors(label, n, scores, ranks, opts, violations);
    auto matrix = detail::resolve_matrix(detail::json_matrix(e, n, w), opts, label, violations);
    if (matrix) batch.records.push_back({std::move(who), std::move(scores), std::move(ranks), std::move(*matrix)});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return batch;
}

namespace detail {

/// Splits CSV text into rows of fields (RFC 4180 quoting, LF or CRLF).
/// Blank lines are skipped. Each row keeps its 1-based line number.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

inline std::vector<CsvRow> parse_csv(std::string_view text, const std::string& file) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1, column = 1;
  bool quoted = false, any = false;
  row.line = 1;
  auto end_row = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    const bool blank = row.fields.size() == 1 && row.fields[0].empty() && !any;
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
    any = false;
  };
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (row.fields.empty() && field.empty() && !any) row.line = line;
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError(fmt::format("{} line {}, column {}", file, line, column), "stray quote");
        quoted = any = true;
        break;
      case ',':
        row.fields.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        column = 0;
        break;
      default:
        field += c;
        any = true;
    }
    ++column;
  }
  if (quoted) throw ParseError(fmt::format("{} line {}", file, line), "unterminated quoted field");
  if (!field.empty() || !row.fields.empty() || any) end_row();
  return rows;
}

inline std::string csv_where(const std::string& file, std::size_t line, std::size_t field) {
  return fmt::format("{} line {}, field {}", file, line, field + 1);
}

inline bool csv_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "1" || s == "yes" || s == "TRUE" || s == "True") return true;
  if (s == "false" || s == "0" || s == "no" || s == "FALSE" || s == "False" || s.empty()) return false;
  throw ParseError(where, "expected true or false, got '" + s + "'");
}

inline int csv_int(const std::string& s, const std::string& where) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(where, "expected an integer, got '" + s + "'");
  return v;
}

inline double csv_number(const std::string& s, const std::string& where) {
  if (auto v = parse_fraction(s)) return *v;
  throw ParseError(where, "expected a number or fraction, got '" + s + "'");
}

}  // namespace detail

/// Batch from the two CSV files' contents.
inline SurveyBatch parse_batch_csv(std::string_view respondents_csv, std::string_view comparisons_csv,
                                   const ParseOptions& opts = {}) {
  const std::string rfile = "respondents.csv", cfile = "comparisons.csv";
  const auto rrows = detail::parse_csv(respondents_csv, rfile);
  const auto crows = detail::parse_csv(comparisons_csv, cfile);
  if (rrows.empty()) throw ParseError(rfile + " line 1", "missing header row");
  if (crows.empty()) throw ParseError(cfile + " line 1", "missing header row");

  const auto& head = rrows.front().fields;
  const std::array<std::string_view, 4> fixed{"id", "age", "sex", "visited"};
  for (std::size_t k = 0; k < fixed.size(); ++k)
    if (k >= head.size() || head[k] != fixed[k])
      throw ParseError(detail::csv_where(rfile, 1, k), fmt::format("header must start with id,age,sex,visited"));
  SurveyBatch batch;
  std::size_t k = fixed.size();
  for (; k < head.size() && head[k].starts_with("score:"); ++k) batch.criteria.push_back(head[k].substr(6));
  const std::size_t n = batch.criteria.size();
  for (std::size_t c = 0; c < n; ++c, ++k)
    if (k >= head.size() || head[k] != "rank:" + batch.criteria[c])
      throw ParseError(detail::csv_where(rfile, 1, k), "expected column rank:" + batch.criteria[c]);
  if (k != head.size()) throw ParseError(detail::csv_where(rfile, 1, k), "unexpected extra column");

  const auto& chead = crows.front().fields;
  if (chead != std::vector<std::string>{"id", "i", "j", "value"})
    throw ParseError(cfile + " line 1", "header must be id,i,j,value");

  std::map<std::string, detail::RawMatrix> matrices;
  std::vector<std::string> violations;
  detail::validate_batch_shape(batch, violations);
  if (rrows.size() == 1) violations.push_back("batch has no respondents");
  for (std::size_t r = 1; r < crows.size(); ++r) {
    const auto& row = crows[r];
    if (row.fields.size() != 4) throw ParseError(fmt::format("{} line {}", cfile, row.line), "expected 4 fields");
    const int i = detail::csv_int(row.fields[1], detail::csv_where(cfile, row.line, 1));
    const int j = detail::csv_int(row.fields[2], detail::csv_where(cfile, row.line, 2));
    const double v = detail::csv_number(row.fields[3], detail::csv_where(cfile, row.line, 3));
    auto [it, fresh] = matrices.try_emplace(row.fields[0], n);
    auto& raw = it->second;
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
      raw.problems.push_back(fmt::format("comparison ({},{}) is outside 1..{}", i, j, n));
      continue;
    }
    auto& cell = raw.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    if (cell) raw.problems.push_back(fmt::format("comparison ({},{}) given more than once", i, j));
    cell = v;
  }

  std::set<std::string> ids;
  for (std::size_t r = 1; r < rrows.size(); ++r) {
    const auto& row = rrows[r];
    if (row.fields.size() != head.size())
      throw ParseError(fmt::format("{} line {}", rfile, row.line),
                       fmt::format("expected {} fields, got {}", head.size(), row.fields.size()));
    Attributes who;
    who.id = row.fields[0];
    who.age = detail::csv_int(row.fields[1], detail::csv_where(rfile, row.line, 1));
    auto sex = parse_sex(row.fields[2]);
    if (!sex) throw ParseError(detail::csv_where(rfile, row.line, 2), "expected male, female or unspecified");
    who.sex = *sex;
    who.visited = detail::csv_bool(row.fields[3], detail::csv_where(rfile, row.line, 3));
    std::vector<double> scores;
    std::vector<int> ranks;
    for (std::size_t c = 0; c < n; ++c) {
      scores.push_back(detail::csv_number(row.fields[4 + c], detail::csv_where(rfile, row.line, 4 + c)));
      ranks.push_back(detail::csv_int(row.fields[4 + n + c], detail::csv_where(rfile, row.line, 4 + n + c)));
    }
    const std::string label = "respondent " + who.id;
    if (!ids.insert(who.id).second) violations.push_back(label + ": duplicate respondent id");
    if (who.age <= 0) violations.push_back(fmt::format("{}: age {} is not positive", label, who.age));
    detail::validate_vectors(label, n, scores, ranks, opts, violations);
    auto it = matrices.find(who.id);
    if (it == matrices.end()) {
      violations.push_back(label + ": no rows in comparisons.csv");
      continue;
    }
    auto matrix = detail::resolve_matrix(std::move(it->second), opts, label, violations);
    matrices.erase(it);
    if (matrix) batch.records.push_back({std::move(who), std::move(scores), std::move(ranks), std::move(*matrix)});
  }
  for (const auto& [id, raw] : matrices) violations.push_back("comparisons.csv: unknown respondent id " + id);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return batch;
}

/// JSON text for a batch; `parse_batch_json` reads it back to an equal batch.
inline std::string serialize_batch_json(const SurveyBatch& batch, int indent = 2) {
  using ordered = nlohmann::ordered_json;
  ordered doc;
  doc["criteria"] = batch.criteria;
  ordered list = ordered::array();
  for (const auto& r : batch.records) {
    ordered e;
    e["id"] = r.who.id;
    e["age"] = r.who.age;
    e["sex"] = std::string(to_string(r.who.sex));
    e["visited"] = r.who.visited;
    e["scores"] = r.scores;
    e["ranks"] = r.ranks;
    ordered comps = ordered::array();
    for (std::size_t i = 0; i < r.matrix.size(); ++i)
      for (std::size_t j = i + 1; j < r.matrix.size(); ++j)
        comps.push_back(ordered{{"i", i + 1}, {"j", j + 1}, {"value", r.matrix(i, j)}});
    e["comparisons"] = std::move(comps);
    list.push_back(std::move(e));
  }
  doc["respondents"] = std::move(list);
  return doc.dump(indent) + "\n";
}

/// A single matrix for rating, with optional criterion labels.
struct MatrixInput {
  std::vector<std::string> labels;
  ComparisonMatrix matrix;
};

/// Reads one comparison matrix. JSON objects carry "matrix" (rows) or "n" plus
/// "comparisons", and optionally "criteria". Anything else is plain text: one
/// row per line, entries separated by spaces or commas, '#' starts a comment.
inline MatrixInput parse_matrix_input(std::string_view text, const ParseOptions& opts = {}) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<std::string> violations;
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
    auto doc = detail::parse_json_text(text);
    // A bare array of rows is shorthand for {"matrix": rows}.
    if (doc.is_array()) doc = decltype(doc){{"matrix", std::move(doc)}};
    std::vector<std::string> labels;
    if (auto it = doc.find("criteria"); it != doc.end()) {
      if (!it->is_array()) throw ParseError("/criteria", "expected an array of labels");
      for (const auto& l : *it) {
        if (!l.is_string()) throw ParseError("/criteria", "labels must be strings");
        labels.push_back(l.get<std::string>());
      }
    }
    std::size_t n = labels.size();
    if (auto it = doc.find("n"); it != doc.end()) n = static_cast<std::size_t>(detail::json_int(*it, "/n"));
    else if (auto m = doc.find("matrix"); m != doc.end() && m->is_array()) n = m->size();
    if (n < 2) throw ParseError("/", "cannot determine a matrix order of at least 2");
    if (labels.empty()) labels = default_labels(n);
    if (labels.size() != n) violations.push_back(fmt::format("{} labels for a {}x{} matrix", labels.size(), n, n));
    auto matrix = detail::resolve_matrix(detail::json_matrix(doc, n, ""), opts, "matrix", violations);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return {std::move(labels), std::move(*matrix)};
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<double> row;
    std::size_t k = 0;
    while (k < line.size()) {
      while (k < line.size() && (std::isspace(static_cast<unsigned char>(line[k])) || line[k] == ',')) ++k;
      if (k >= line.size()) break;
      std::size_t end = k;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != ',') ++end;
      auto v = parse_fraction(line.substr(k, end - k));
      if (!v)
        throw ParseError(fmt::format("line {}, column {}", line_no, k + 1),
                         "cannot read '" + std::string(line.substr(k, end - k)) + "' as a number or fraction");
      row.push_back(*v);
      k = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (eol == text.size()) break;
  }
  if (rows.size() < 2) throw ParseError("line 1", "expected at least two matrix rows");
  detail::RawMatrix raw(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ParseError(fmt::format("row {}", i + 1),
                       fmt::format("has {} entries, expected {}", rows[i].size(), rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) raw.at(i, j) = rows[i][j];
  }
  auto matrix = detail::resolve_matrix(std::move(raw), opts, "matrix", violations);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return {default_labels(rows.size()), std::move(*matrix)};
}

}  // namespace prefrank
