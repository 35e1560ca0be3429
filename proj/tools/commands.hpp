#pragma once

/**
 * @file commands.hpp
 * @brief The `rate`, `analyze` and `selfcheck` commands, stream in / stream
 *        out, returning process exit codes.
 *
 * Exit codes: 0 success, 1 validation error, 2 parse error, 3 internal
 * invariant breach.
 */

#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "json.hpp"
#include "prefrank/prefrank.hpp"

namespace prefrank::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kParse = 2, kInternal = 3 };

/// Runs `body`, mapping library exceptions onto exit codes and printing the
/// diagnostic to `err`.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const DimensionMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

struct RateOptions {
  OutputFormat format = OutputFormat::text;
  bool ascii = false;
  bool strict_scale = true;
};

inline std::string bracket_ranks(const RankVector& r) {
  return "(" + fmt::format("{}", fmt::join(r.ranks, ",")) + ")";
}

/// Rates one comparison matrix with every method.
inline int cmd_rate(std::string_view input, const RateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = parse_matrix_input(input, ParseOptions{opts.strict_scale});
    const auto& a = in.matrix;
    const auto& symbols = opts.ascii ? kAsciiSymbols : kUnicodeSymbols;

    const auto cone = solve_cone(a);
    std::map<Tag, RatingVector> ratings;
    ratings.emplace(Tag::SPE, principal_eigenvector_rate(a));
    ratings.emplace(Tag::SGM, geometric_mean_rate(a));
    ratings.emplace(Tag::SCB, best_differentiating(cone));
    ratings.emplace(Tag::SCW, worst_differentiating(a, cone));
    const double objective = log_chebyshev_objective(a, ratings.at(Tag::SCB));
    if (std::abs(objective - cone.lambda) > 1e-9 * cone.lambda)
      throw std::logic_error(fmt::format("log-Chebyshev objective {} differs from spectral radius {}", objective,
                                         cone.lambda));
    const auto intervals = interval_combine(ratings.at(Tag::SCB), ratings.at(Tag::SCW));

    struct Row {
      Tag tag;
      RankVector ranks;
      std::string order;
    };
    std::vector<Row> rows;
    for (Tag t : kMatrixMethods) {
      const auto& x = ratings.at(t);
      auto rk = ranks_from_ratings(x);
      auto order = order_string(rk, tie_info(rk, x.scores), symbols, in.labels);
      rows.push_back({t, std::move(rk), std::move(order)});
    }

    if (opts.format == OutputFormat::json) {
      nlohmann::ordered_json doc;
      doc["criteria"] = in.labels;
      doc["lambda"] = detail::rounded(cone.lambda);
      doc["objective"] = detail::rounded(objective);
      doc["unique"] = cone.unique;
      nlohmann::ordered_json methods;
      for (const auto& r : rows)
        methods[std::string(to_string(r.tag))] =
            nlohmann::ordered_json{{"ratings", detail::rounded(ratings.at(r.tag).scores)},
                                   {"ranks", r.ranks.ranks},
                                   {"order", r.order}};
      doc["methods"] = std::move(methods);
      if (!cone.unique) {
        nlohmann::ordered_json iv = nlohmann::ordered_json::array();
        for (const auto& x : intervals) iv.push_back({detail::rounded(x.low), detail::rounded(x.high)});
        doc["interval"] = std::move(iv);
        doc["combined_order"] = combined_order_string(intervals, symbols, in.labels);
      }
      out << doc.dump(2) << "\n";
      return int{kOk};
    }

    if (opts.format == OutputFormat::csv) {
      std::vector<std::vector<std::string>> t;
      std::vector<std::string> head{"method"};
      for (const auto& l : in.labels) head.push_back(l);
      for (const auto& l : in.labels) head.push_back("rank:" + l);
      head.push_back("order");
      t.push_back(head);
      for (const auto& r : rows) {
        std::vector<std::string> line{std::string(to_string(r.tag))};
        for (double v : ratings.at(r.tag).scores) line.push_back(fixed4(v));
        for (int v : r.ranks.ranks) line.push_back(std::to_string(v));
        line.push_back(r.order);
        t.push_back(std::move(line));
      }
      out << detail::csv_rows(t);
      out << detail::csv_rows({{"# lambda", fixed4(cone.lambda)},
                               {"# objective", fixed4(objective)},
                               {"# unique", cone.unique ? "true" : "false"}});
      return int{kOk};
    }

    out << fmt::format("lambda (minimum log-Chebyshev objective): {}\n", fixed4(cone.lambda));
    out << fmt::format("objective at SCB: {}\n", fixed4(objective));
    out << fmt::format("solution unique: {} ({} generating column{})\n", cone.unique ? "yes" : "no",
                       cone.generators.cols(), cone.generators.cols() == 1 ? "" : "s");
    std::vector<std::vector<std::string>> t;
    std::vector<std::string> head{"method"};
    for (const auto& l : in.labels) head.push_back(l);
    head.push_back("ranks");
    t.push_back(head);
    for (const auto& r : rows) {
      std::vector<std::string> line{std::string(to_string(r.tag))};
      for (double v : ratings.at(r.tag).scores) line.push_back(fixed4(v));
      line.push_back(bracket_ranks(r.ranks));
      t.push_back(std::move(line));
    }
    out << "\n" << detail::text_table(t) << "\n";
    for (const auto& r : rows) out << fmt::format("{:<4} {}\n", to_string(r.tag), r.order);
    if (!cone.unique) {
      out << "\ninterval ratings (SCB..SCW):";
      for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& x = intervals[i];
        out << " " << in.labels[i] << "="
            << (x.degenerate() ? fixed4(x.low) : fmt::format("[{}, {}]", fixed4(x.low), fixed4(x.high)));
      }
      out << "\ncombined order: " << combined_order_string(intervals, symbols, in.labels) << "\n";
    }
    return int{kOk};
  });
}

struct AnalyzeOptions {
  OutputFormat format = OutputFormat::text;
  bool ascii = false;
  ReportOptions report;
  /// Provenance lines, emitted apart from the data sections.
  std::optional<std::string> meta_input;
};

/// Runs the batch pipeline on an already parsed batch.
inline int cmd_analyze(const SurveyBatch& batch, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rep = analyze(batch, opts.report);
    const auto& symbols = opts.ascii ? kAsciiSymbols : kUnicodeSymbols;
    if (opts.meta_input && opts.format == OutputFormat::json) {
      auto doc = report_json(rep, symbols);
      doc["meta"] = nlohmann::ordered_json{{"tool", "prefrank"}, {"version", "1.0.0"}, {"input", *opts.meta_input}};
      out << doc.dump(2) << "\n";
      return int{kOk};
    }
    out << serialize_report(rep, opts.format, symbols);
    if (opts.meta_input) out << fmt::format("\n# meta: tool=prefrank version=1.0.0 input={}\n", *opts.meta_input);
    return int{kOk};
  });
}

/// Parses then analyzes; `comparisons_text` is used only for CSV input.
inline int cmd_analyze_text(std::string_view text, std::optional<std::string_view> comparisons_text, bool csv,
                            bool strict_scale, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<SurveyBatch> batch;
  const int rc = guarded(err, [&] {
    batch = csv ? parse_batch_csv(text, comparisons_text.value_or(""), ParseOptions{strict_scale})
                : parse_batch_json(text, ParseOptions{strict_scale});
    return int{kOk};
  });
  if (rc != kOk) return rc;
  return cmd_analyze(*batch, opts, out, err);
}

inline constexpr double kGoldenTolerance = 1e-3;

/// Recomputes every published rating vector from the fixture matrices and
/// prints one PASS/FAIL line per vector.
inline int cmd_selfcheck(const SurveyBatch& batch, const std::vector<fixtures::Published>& expected, std::ostream& out,
                         std::ostream& err) {
  return guarded(err, [&] {
    int failures = 0, checks = 0;
    for (const auto& pub : expected) {
      auto rec = std::find_if(batch.records.begin(), batch.records.end(),
                              [&](const SurveyRecord& r) { return r.who.id == pub.id; });
      if (rec == batch.records.end()) {
        out << fmt::format("FAIL respondent {}: not in fixture batch\n", pub.id);
        ++failures;
        continue;
      }
      const auto got = rate_all(rec->matrix);
      for (const auto& [tag, want] : pub.ratings) {
        ++checks;
        const auto& x = got.at(tag).scores;
        double worst = 0.0;
        for (std::size_t i = 0; i < want.size(); ++i)
          worst = std::max(worst, i < x.size() ? std::abs(x[i] - want[i]) : INFINITY);
        const bool ok = x.size() == want.size() && worst <= kGoldenTolerance;
        failures += !ok;
        out << fmt::format("{} respondent {} {:<3} max |diff| = {:.2e}\n", ok ? "PASS" : "FAIL", pub.id,
                           to_string(tag), worst);
      }
    }
    out << fmt::format("{}/{} vectors within {}\n", checks - failures, checks, kGoldenTolerance);
    return failures == 0 ? int{kOk} : int{kValidation};
  });
}

}  // namespace prefrank::cli
