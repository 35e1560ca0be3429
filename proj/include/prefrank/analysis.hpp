#pragma once

/**
 * @file analysis.hpp
 * @brief Batch pipeline: per-respondent ratings and ranks, then the report
 *        tables, rendered as JSON, CSV or aligned text.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "prefrank/rating.hpp"
#include "prefrank/ranking.hpp"
#include "prefrank/respondent.hpp"
#include "prefrank/stats.hpp"
#include "prefrank/survey.hpp"

namespace prefrank {

/// Fixed 4-decimal text, as printed for ratings and correlations.
inline std::string fixed4(double x) {
  auto s = fmt::format("{:.4f}", x);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline RespondentResult evaluate_respondent(const SurveyRecord& rec) {
  RespondentResult r;
  r.who = rec.who;
  r.ratings.emplace(Tag::SR, normalize_max(rec.scores, Tag::SR));
  r.ranks.emplace(Tag::RR, RankVector{rec.ranks, Tag::RR});

  const auto cone = solve_cone(rec.matrix);
  r.lambda = cone.lambda;
  r.unique = cone.unique;
  r.ratings.emplace(Tag::SPE, principal_eigenvector_rate(rec.matrix));
  r.ratings.emplace(Tag::SGM, geometric_mean_rate(rec.matrix));
  r.ratings.emplace(Tag::SCB, best_differentiating(cone));
  r.ratings.emplace(Tag::SCW, worst_differentiating(rec.matrix, cone));
  for (const auto& [tag, x] : r.ratings) r.ranks.emplace(rank_tag_for(tag), ranks_from_ratings(x));
  return r;
}

inline std::vector<RespondentResult> evaluate_batch(const SurveyBatch& batch) {
  std::vector<RespondentResult> out;
  out.reserve(batch.records.size());
  for (const auto& rec : batch.records) out.push_back(evaluate_respondent(rec));
  return out;
}

enum class Section { respondents, match, corr_ranks, corr_ratings, means, groups, freq, distance };

inline constexpr std::array<Section, 8> kAllSections{Section::respondents, Section::match,  Section::corr_ranks,
                                                     Section::corr_ratings, Section::means,  Section::groups,
                                                     Section::freq,        Section::distance};

constexpr std::string_view to_string(Section s) {
  switch (s) {
    case Section::respondents: return "respondents";
    case Section::match: return "match";
    case Section::corr_ranks: return "corr-ranks";
    case Section::corr_ratings: return "corr-ratings";
    case Section::means: return "means";
    case Section::groups: return "groups";
    case Section::freq: return "freq";
    case Section::distance: return "distance";
  }
  return "?";
}

constexpr std::optional<Section> parse_section(std::string_view s) {
  for (Section sec : kAllSections)
    if (to_string(sec) == s) return sec;
  return std::nullopt;
}

/// Rank families compared by Kendall correlation.
inline constexpr std::array<Tag, 5> kCorrelatedRankTags{Tag::RR, Tag::RSPE, Tag::RSGM, Tag::RSCB, Tag::RSCW};
/// Rank families counted against a reference vector.
inline constexpr std::array<Tag, 5> kDerivedRankTags{Tag::RSR, Tag::RSPE, Tag::RSGM, Tag::RSCB, Tag::RSCW};

struct ReportOptions {
  std::set<Section> sections{kAllSections.begin(), kAllSections.end()};
  std::vector<RankVector> references;
  std::size_t top_k = 5;
  stats::StdFlavor flavor = stats::StdFlavor::population;
};

struct GroupCorrelation {
  std::string group;
  std::size_t members = 0;
  stats::MethodPairTable<std::optional<double>> table;
};

struct DistanceTable {
  RankVector reference;
  /// True when the reference came from the SGM mean vector.
  bool derived_from_means = false;
  std::map<Tag, std::vector<int>> counts;
};

struct AnalysisReport {
  std::vector<std::string> criteria;
  std::size_t respondent_count = 0;
  stats::StdFlavor flavor = stats::StdFlavor::population;
  std::size_t top_k = 5;
  std::vector<std::string> notices;

  std::vector<RespondentResult> results;
  std::set<Section> sections;
  std::optional<stats::MethodPairTable<int>> match;
  /// One entry per consistency group; the last group holds everyone and
  /// doubles as the all-respondents table.
  std::optional<std::vector<GroupCorrelation>> rank_correlations;
  std::optional<stats::MethodPairTable<std::optional<double>>> rating_correlations;
  std::optional<std::map<Tag, stats::RatingSpread>> spreads;
  std::optional<std::vector<stats::GroupSummary>> groups;
  std::optional<std::map<Tag, std::vector<stats::FrequencyEntry>>> frequencies;
  std::optional<std::vector<DistanceTable>> distances;
};

inline AnalysisReport analyze(const SurveyBatch& batch, const ReportOptions& opts = {}) {
  AnalysisReport rep;
  rep.criteria = batch.criteria;
  rep.respondent_count = batch.records.size();
  rep.flavor = opts.flavor;
  rep.top_k = opts.top_k;
  rep.sections = opts.sections;
  rep.results = evaluate_batch(batch);
  const stats::Batch results(rep.results);
  auto wants = [&](Section s) { return opts.sections.contains(s); };

  if (rep.respondent_count == 1)
    rep.notices.push_back(
        "single respondent: correlations are taken over one respondent's criteria, not across respondents");

  const auto groups = stats::consistency_groups(results);
  if (wants(Section::match)) rep.match = stats::match_table(results);
  if (wants(Section::groups)) rep.groups = groups;
  if (wants(Section::corr_ranks)) {
    std::vector<GroupCorrelation> tables;
    for (const auto& g : groups) {
      std::vector<RespondentResult> members;
      for (std::size_t i : g.members) members.push_back(rep.results[i]);
      GroupCorrelation gc{g.label(), g.count(), {}};
      gc.table = stats::correlation_table(members, kCorrelatedRankTags, stats::CorrelationKind::kendall);
      tables.push_back(std::move(gc));
    }
    rep.rank_correlations = std::move(tables);
  }
  if (wants(Section::corr_ratings))
    rep.rating_correlations = stats::correlation_table(results, kRatingTags, stats::CorrelationKind::pearson);
  if (wants(Section::means)) {
    std::map<Tag, stats::RatingSpread> m;
    for (Tag t : kRatingTags) m.emplace(t, stats::mean_and_std(results, t, opts.flavor));
    rep.spreads = std::move(m);
  }
  if (wants(Section::freq)) {
    std::map<Tag, std::vector<stats::FrequencyEntry>> f;
    for (Tag t : kRankTags) f.emplace(t, stats::frequency_table(results, t, opts.top_k, kUnicodeSymbols, batch.criteria));
    rep.frequencies = std::move(f);
  }
  if (wants(Section::distance)) {
    std::vector<DistanceTable> tables;
    std::vector<RankVector> refs = opts.references;
    const bool derived = refs.empty();
    if (derived)
      refs.push_back(ranks_from_ratings(stats::mean_and_std(results, Tag::SGM, opts.flavor).mean, Tag::RSGM));
    for (const auto& ref : refs) {
      if (ref.size() != batch.criteria.size())
        throw ValidationError({fmt::format("reference rank vector has {} entries for {} criteria", ref.size(),
                                           batch.criteria.size())});
      DistanceTable dt{ref, derived, {}};
      for (Tag t : kDerivedRankTags) dt.counts.emplace(t, stats::within_distance_counts(results, t, ref));
      tables.push_back(std::move(dt));
    }
    rep.distances = std::move(tables);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

enum class OutputFormat { json, csv, text };

constexpr std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  return std::nullopt;
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

/// A number that prints with at most four decimals.
inline ordered_json rounded(double x) { return ordered_json::parse(fixed4(x)); }

inline ordered_json rounded(const std::vector<double>& xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(rounded(x));
  return a;
}

template <class V, class F>
ordered_json table_json(const stats::MethodPairTable<V>& t, F cell) {
  ordered_json o;
  for (std::size_t u = 0; u < t.tags.size(); ++u) {
    ordered_json row;
    for (std::size_t v = 0; v < t.tags.size(); ++v) row[std::string(to_string(t.tags[v]))] = cell(t.cells[u][v]);
    o[std::string(to_string(t.tags[u]))] = std::move(row);
  }
  return o;
}

inline ordered_json corr_cell(const std::optional<double>& c) { return c ? rounded(*c) : ordered_json(nullptr); }

inline std::string corr_text(const std::optional<double>& c) { return c ? fixed4(*c) : "n/a"; }

inline std::string join_ints(const std::vector<int>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(sep) : "") + std::to_string(v[i]);
  return s;
}

/// Plain aligned table: first row is the header.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    for (std::size_t c = 0; c < rows[k].size(); ++c) {
      if (c) line += "  ";
      line += c == 0 ? fmt::format("{:<{}}", rows[k][c], width[c]) : fmt::format("{:>{}}", rows[k][c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out += (c ? "," : "") + csv_field(r[c]);
    out += "\n";
  }
  return out;
}

/// Tables as (title, rows) pairs, shared by the text and CSV renderers.
struct NamedTable {
  std::string section;
  std::string title;
  std::vector<std::vector<std::string>> rows;
};

template <class V, class F>
std::vector<std::vector<std::string>> pair_rows(const stats::MethodPairTable<V>& t, std::string corner, F cell) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{std::move(corner)};
  for (Tag tag : t.tags) head.emplace_back(to_string(tag));
  rows.push_back(std::move(head));
  for (std::size_t u = 0; u < t.tags.size(); ++u) {
    std::vector<std::string> r{std::string(to_string(t.tags[u]))};
    for (std::size_t v = 0; v < t.tags.size(); ++v) r.push_back(cell(t.cells[u][v]));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<NamedTable> named_tables(const AnalysisReport& rep, const OrderSymbols& symbols) {
  std::vector<NamedTable> out;
  const std::size_t n = rep.criteria.size();
  if (rep.sections.contains(Section::respondents)) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"id", "tag"};
    for (const auto& c : rep.criteria) head.push_back(c);
    head.push_back("order");
    rows.push_back(head);
    for (const auto& r : rep.results) {
      for (Tag t : kRatingTags) {
        std::vector<std::string> row{r.who.id, std::string(to_string(t))};
        for (double v : r.rating(t).scores) row.push_back(fixed4(v));
        const auto& rk = r.rank(rank_tag_for(t));
        row.push_back(order_string(rk, tie_info(rk, r.rating(t).scores), symbols, rep.criteria));
        rows.push_back(std::move(row));
      }
      for (Tag t : kRankTags) {
        std::vector<std::string> row{r.who.id, std::string(to_string(t))};
        for (int v : r.rank(t).ranks) row.push_back(std::to_string(v));
        row.push_back(order_string(r.rank(t), std::nullopt, symbols, rep.criteria));
        rows.push_back(std::move(row));
      }
    }
    out.push_back({"respondents", "Rating and rank vectors per respondent", std::move(rows)});
  }
  if (rep.match)
    out.push_back({"match", "Number of matching rank vectors",
                   pair_rows(*rep.match, "method", [](int c) { return std::to_string(c); })});
  if (rep.groups) {
    std::vector<std::vector<std::string>> rows{{"group", "max difference", "respondents", "visited %", "male %",
                                                "female %"}};
    for (const auto& g : *rep.groups)
      rows.push_back({g.label(), std::to_string(g.threshold), std::to_string(g.count()), fmt::format("{:.0f}", g.percent_visited),
                      fmt::format("{:.0f}", g.percent_male), fmt::format("{:.0f}", g.percent_female)});
    out.push_back({"groups", "Groups by Chebyshev distance between RR and RSR", std::move(rows)});
  }
  if (rep.rank_correlations) {
    for (std::size_t k = 0; k < rep.rank_correlations->size(); ++k) {
      const auto& gc = (*rep.rank_correlations)[k];
      const bool everyone = gc.members == rep.respondent_count;
      std::string title = fmt::format("Kendall correlation of rank vectors, group {} ({} respondents){}", gc.group,
                                      gc.members, everyone ? ", all respondents" : "");
      if (gc.members == 0) {
        out.push_back({"corr-ranks", title + ": empty group", {}});
        continue;
      }
      out.push_back({"corr-ranks", std::move(title), pair_rows(gc.table, "method", corr_text)});
    }
  }
  if (rep.rating_correlations)
    out.push_back({"corr-ratings", "Pearson correlation of rating vectors",
                   pair_rows(*rep.rating_correlations, "method", corr_text)});
  if (rep.spreads) {
    std::vector<std::vector<std::string>> mean_rows, std_rows;
    std::vector<std::string> head{"criterion"};
    for (const auto& [t, s] : *rep.spreads) head.emplace_back(to_string(t));
    mean_rows.push_back(head);
    std_rows.push_back(head);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::string> mr{rep.criteria[j]}, sr{rep.criteria[j]};
      for (const auto& [t, s] : *rep.spreads) {
        mr.push_back(fixed4(s.mean[j]));
        sr.push_back(fixed4(s.std_dev[j]));
      }
      mean_rows.push_back(std::move(mr));
      std_rows.push_back(std::move(sr));
    }
    std::vector<std::vector<std::string>> var_rows{head};
    std::vector<std::string> avg{"average deviation"}, tot{"total deviation"};
    for (const auto& [t, s] : *rep.spreads) {
      avg.push_back(fixed4(s.average_std));
      tot.push_back(fixed4(s.total_std));
    }
    var_rows.push_back(std::move(avg));
    var_rows.push_back(std::move(tot));
    out.push_back({"means", "Mean rating vectors", std::move(mean_rows)});
    out.push_back({"means", fmt::format("Standard deviation of ratings ({})", to_string(rep.flavor)), std::move(std_rows)});
    out.push_back({"means", "Variability of rating vectors", std::move(var_rows)});
  }
  if (rep.frequencies) {
    for (const auto& [t, entries] : *rep.frequencies) {
      std::vector<std::vector<std::string>> rows{{"rank vector", "count", "order"}};
      for (const auto& e : entries)
        rows.push_back({"(" + join_ints(e.ranks.ranks, ",") + ")", std::to_string(e.count),
                        order_string(e.ranks, std::nullopt, symbols, rep.criteria)});
      out.push_back({"freq", fmt::format("Most frequent {} vectors (top {})", to_string(t), rep.top_k), std::move(rows)});
    }
  }
  if (rep.distances) {
    for (const auto& dt : *rep.distances) {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> head{"max Hamming distance"};
      for (const auto& [t, c] : dt.counts) head.emplace_back(to_string(t));
      rows.push_back(std::move(head));
      for (std::size_t d = 0; d <= n; ++d) {
        std::vector<std::string> r{std::to_string(d)};
        for (const auto& [t, c] : dt.counts) r.push_back(std::to_string(c[d]));
        rows.push_back(std::move(r));
      }
      out.push_back({"distance",
                     fmt::format("Vectors within distance of ({}){}", join_ints(dt.reference.ranks, ","),
                                 dt.derived_from_means ? " [ranks of the SGM mean vector]" : ""),
                     std::move(rows)});
    }
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const AnalysisReport& rep, const OrderSymbols& symbols = kUnicodeSymbols) {
  using detail::ordered_json;
  using detail::rounded;
  ordered_json doc;
  doc["criteria"] = rep.criteria;
  doc["respondent_count"] = rep.respondent_count;
  doc["settings"] = ordered_json{{"std", std::string(to_string(rep.flavor))}, {"top_k", rep.top_k}};
  if (!rep.notices.empty()) doc["notices"] = rep.notices;

  if (rep.sections.contains(Section::respondents)) {
    ordered_json list = ordered_json::array();
    for (const auto& r : rep.results) {
      ordered_json e;
      e["id"] = r.who.id;
      e["lambda"] = rounded(r.lambda);
      e["unique"] = r.unique;
      ordered_json ratings, ranks, orders;
      for (Tag t : kRatingTags) ratings[std::string(to_string(t))] = rounded(r.rating(t).scores);
      for (Tag t : kRankTags) ranks[std::string(to_string(t))] = r.rank(t).ranks;
      for (Tag t : kRatingTags) {
        const auto& rk = r.rank(rank_tag_for(t));
        orders[std::string(to_string(rank_tag_for(t)))] =
            order_string(rk, tie_info(rk, r.rating(t).scores), symbols, rep.criteria);
      }
      e["ratings"] = std::move(ratings);
      e["ranks"] = std::move(ranks);
      e["orders"] = std::move(orders);
      list.push_back(std::move(e));
    }
    doc["respondents"] = std::move(list);
  }
  if (rep.match) doc["match"] = detail::table_json(*rep.match, [](int c) { return ordered_json(c); });
  if (rep.groups) {
    ordered_json list = ordered_json::array();
    for (const auto& g : *rep.groups)
      list.push_back(ordered_json{{"group", g.label()},
                                  {"max_difference", g.threshold},
                                  {"respondents", g.count()},
                                  {"percent_visited", rounded(g.percent_visited)},
                                  {"percent_male", rounded(g.percent_male)},
                                  {"percent_female", rounded(g.percent_female)}});
    doc["groups"] = std::move(list);
  }
  if (rep.rank_correlations) {
    ordered_json list = ordered_json::array();
    for (const auto& gc : *rep.rank_correlations)
      list.push_back(ordered_json{{"group", gc.group},
                                  {"respondents", gc.members},
                                  {"all_respondents", gc.members == rep.respondent_count},
                                  {"kendall", gc.members ? detail::table_json(gc.table, detail::corr_cell)
                                                         : ordered_json(nullptr)}});
    doc["corr_ranks"] = std::move(list);
  }
  if (rep.rating_correlations) doc["corr_ratings"] = detail::table_json(*rep.rating_correlations, detail::corr_cell);
  if (rep.spreads) {
    ordered_json m;
    for (const auto& [t, s] : *rep.spreads)
      m[std::string(to_string(t))] = ordered_json{{"mean", rounded(s.mean)},
                                                  {"std", rounded(s.std_dev)},
                                                  {"average_std", rounded(s.average_std)},
                                                  {"total_std", rounded(s.total_std)}};
    doc["means"] = std::move(m);
  }
  if (rep.frequencies) {
    ordered_json f;
    for (const auto& [t, entries] : *rep.frequencies) {
      ordered_json list = ordered_json::array();
      for (const auto& e : entries)
        list.push_back(ordered_json{{"ranks", e.ranks.ranks},
                                    {"count", e.count},
                                    {"order", order_string(e.ranks, std::nullopt, symbols, rep.criteria)}});
      f[std::string(to_string(t))] = std::move(list);
    }
    doc["freq"] = std::move(f);
  }
  if (rep.distances) {
    ordered_json list = ordered_json::array();
    for (const auto& dt : *rep.distances) {
      ordered_json counts;
      for (const auto& [t, c] : dt.counts) counts[std::string(to_string(t))] = c;
      list.push_back(ordered_json{{"reference", dt.reference.ranks},
                                  {"reference_from_sgm_mean", dt.derived_from_means},
                                  {"cumulative_counts", std::move(counts)}});
    }
    doc["distance"] = std::move(list);
  }
  return doc;
}

/// Deterministic rendering of a report.
inline std::string serialize_report(const AnalysisReport& rep, OutputFormat format,
                                    const OrderSymbols& symbols = kUnicodeSymbols) {
  if (format == OutputFormat::json) return report_json(rep, symbols).dump(2) + "\n";
  const auto tables = detail::named_tables(rep, symbols);
  std::string out;
  if (format == OutputFormat::csv) {
    out += detail::csv_rows({{"# settings", "std", std::string(to_string(rep.flavor)), "respondents",
                              std::to_string(rep.respondent_count)}});
    for (const auto& note : rep.notices) out += detail::csv_rows({{"# notice", note}});
    for (const auto& t : tables) {
      out += "\n" + detail::csv_rows({{"# " + t.section, t.title}});
      out += detail::csv_rows(t.rows);
    }
    return out;
  }
  out += fmt::format("{} respondents, {} criteria ({}), standard deviation: {}\n", rep.respondent_count,
                     rep.criteria.size(), fmt::join(rep.criteria, ", "), to_string(rep.flavor));
  for (const auto& note : rep.notices) out += "note: " + note + "\n";
  for (const auto& t : tables) {
    out += "\n" + t.title + "\n";
    out += detail::text_table(t.rows);
  }
  return out;
}

}  // namespace prefrank
