#pragma once

/**
 * @file stats.hpp
 * @brief Batch statistics over respondents' rating and rank vectors.
 *
 * Distances between rank vectors, Kendall tau-a and Pearson correlation of
 * vectors concatenated across respondents, match tables, nested consistency
 * groups, mean/deviation summaries and rank-vector frequency tables.
 */

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prefrank/errors.hpp"
#include "prefrank/ranking.hpp"
#include "prefrank/respondent.hpp"
#include "prefrank/tags.hpp"

namespace prefrank::stats {

using Batch = std::span<const RespondentResult>;

/// max_j |a_j - b_j|
inline int chebyshev_rank_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw DimensionMismatch("Chebyshev distance: lengths differ");
  int d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

inline int chebyshev_rank_distance(const RankVector& a, const RankVector& b) {
  return chebyshev_rank_distance(a.ranks, b.ranks);
}

/// Number of positions where the vectors differ.
inline int hamming_rank_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw DimensionMismatch("Hamming distance: lengths differ");
  int d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
  return d;
}

inline int hamming_rank_distance(const RankVector& a, const RankVector& b) {
  return hamming_rank_distance(a.ranks, b.ranks);
}

namespace detail {

/// Inversions (strictly decreasing pairs) of v, sorting v ascending.
template <class T>
std::int64_t count_inversions(std::vector<T>& v, std::vector<T>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(v, buf, lo, mid) + count_inversions(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += static_cast<std::int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

/// Sum over runs of equal values of t(t-1)/2, on an already sorted range.
template <class It, class Eq>
std::int64_t tied_pairs(It first, It last, Eq eq) {
  std::int64_t total = 0;
  while (first != last) {
    It run = first;
    std::int64_t t = 0;
    while (run != last && eq(*run, *first)) {
      ++run;
      ++t;
    }
    total += t * (t - 1) / 2;
    first = run;
  }
  return total;
}

}  // namespace detail

/// Kendall tau-a: 2 / (n(n-1)) * sum_{i<j} sgn(a_i - a_j) sgn(b_i - b_j).
/// Ties contribute zero and are not corrected for. Knight's O(n log n)
/// counting, since concatenated vectors grow with the batch.
template <class T>
  requires std::totally_ordered<T>
double kendall_tau(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionMismatch("Kendall tau: lengths differ");
  const std::size_t n = a.size();
  if (n < 2) throw DimensionMismatch("Kendall tau needs at least two observations");

  std::vector<std::pair<T, T>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {a[i], b[i]};
  std::sort(pairs.begin(), pairs.end());

  const std::int64_t total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t ties_a =
      detail::tied_pairs(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first == y.first; });
  const std::int64_t ties_both = detail::tied_pairs(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.first == y.first && x.second == y.second;
  });

  std::vector<T> second(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) second[i] = pairs[i].second;
  const std::int64_t discordant = detail::count_inversions(second, buf, 0, n);
  const std::int64_t ties_b =
      detail::tied_pairs(second.begin(), second.end(), [](const T& x, const T& y) { return x == y; });

  const std::int64_t score = total - ties_a - ties_b + ties_both - 2 * discordant;
  return static_cast<double>(score) / static_cast<double>(total);
}

template <class T>
double kendall_tau(const std::vector<T>& a, const std::vector<T>& b) {
  return kendall_tau(std::span<const T>(a), std::span<const T>(b));
}

inline double kendall_tau(const RankVector& a, const RankVector& b) { return kendall_tau(a.ranks, b.ranks); }

/// Sample Pearson correlation coefficient.
inline double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("Pearson: lengths differ");
  if (a.size() < 2) throw DimensionMismatch("Pearson needs at least two observations");
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw ZeroVariance("Pearson correlation undefined for a constant vector");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  return pearson(std::span<const double>(a), std::span<const double>(b));
}

/// Square table indexed by method tags.
template <class V>
struct MethodPairTable {
  std::vector<Tag> tags;
  std::vector<std::vector<V>> cells;

  const V& at(Tag u, Tag v) const { return cells.at(index(u)).at(index(v)); }
  std::size_t index(Tag t) const {
    auto it = std::find(tags.begin(), tags.end(), t);
    if (it == tags.end()) throw MissingTag("table has no column " + std::string(to_string(t)));
    return static_cast<std::size_t>(it - tags.begin());
  }
};

/// Cell (u, v): respondents whose u and v rank vectors coincide.
inline MethodPairTable<int> match_table(Batch batch, std::span<const Tag> tags = kRankTags) {
  MethodPairTable<int> t{{tags.begin(), tags.end()}, std::vector<std::vector<int>>(tags.size(), std::vector<int>(tags.size(), 0))};
  for (const auto& r : batch)
    for (std::size_t u = 0; u < tags.size(); ++u)
      for (std::size_t v = 0; v < tags.size(); ++v) t.cells[u][v] += r.rank(tags[u]).ranks == r.rank(tags[v]).ranks ? 1 : 0;
  return t;
}

/// Respondents whose RR and RSR vectors lie within Chebyshev distance
/// `threshold` of each other.
struct GroupSummary {
  int threshold = 0;
  std::vector<std::size_t> members;
  double percent_visited = 0.0;
  double percent_male = 0.0;
  double percent_female = 0.0;

  std::size_t count() const noexcept { return members.size(); }
  std::string label() const { return "R" + std::to_string(threshold); }
};

inline std::vector<GroupSummary> consistency_groups(Batch batch, std::span<const int> thresholds) {
  std::vector<int> distance;
  for (const auto& r : batch) distance.push_back(chebyshev_rank_distance(r.rank(Tag::RR), r.rank(Tag::RSR)));
  std::vector<GroupSummary> out;
  for (int th : thresholds) {
    GroupSummary g;
    g.threshold = th;
    int visited = 0, male = 0, female = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (distance[i] > th) continue;
      g.members.push_back(i);
      visited += batch[i].who.visited;
      male += batch[i].who.sex == Sex::male;
      female += batch[i].who.sex == Sex::female;
    }
    if (!g.members.empty()) {
      const double n = static_cast<double>(g.members.size());
      g.percent_visited = 100.0 * visited / n;
      g.percent_male = 100.0 * male / n;
      g.percent_female = 100.0 * female / n;
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Thresholds 0 .. n-1 for criteria count n.
inline std::vector<GroupSummary> consistency_groups(Batch batch) {
  if (batch.empty()) return {};
  std::vector<int> th(batch.front().rank(Tag::RR).size());
  for (std::size_t i = 0; i < th.size(); ++i) th[i] = static_cast<int>(i);
  return consistency_groups(batch, th);
}

enum class StdFlavor { population, sample };

constexpr std::string_view to_string(StdFlavor f) { return f == StdFlavor::population ? "population" : "sample"; }

struct RatingSpread {
  std::vector<double> mean;
  std::vector<double> std_dev;
  /// Mean of the per-criterion deviations.
  double average_std = 0.0;
  /// sqrt of the sum of squared per-criterion deviations.
  double total_std = 0.0;
};

inline RatingSpread mean_and_std(Batch batch, Tag tag, StdFlavor flavor = StdFlavor::population) {
  if (batch.empty()) throw Error("mean_and_std of an empty batch");
  const std::size_t n = batch.front().rating(tag).size();
  const double count = static_cast<double>(batch.size());
  RatingSpread s{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (const auto& r : batch) {
    const auto& x = r.rating(tag);
    if (x.size() != n) throw DimensionMismatch("mean_and_std: rating lengths differ");
    for (std::size_t j = 0; j < n; ++j) s.mean[j] += x[j];
  }
  for (double& m : s.mean) m /= count;
  const double denom = flavor == StdFlavor::population ? count : count - 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double ss = 0.0;
    for (const auto& r : batch) {
      const double d = r.rating(tag)[j] - s.mean[j];
      ss += d * d;
    }
    s.std_dev[j] = denom > 0.0 ? std::sqrt(ss / denom) : 0.0;
  }
  double sq = 0.0;
  for (double sd : s.std_dev) {
    s.average_std += sd;
    sq += sd * sd;
  }
  s.average_std /= static_cast<double>(n);
  s.total_std = std::sqrt(sq);
  return s;
}

/// One tag's vectors for every respondent, end to end.
inline std::vector<double> concatenate(Batch batch, Tag tag) {
  std::vector<double> out;
  for (const auto& r : batch) {
    if (is_rating_tag(tag)) {
      const auto& x = r.rating(tag).scores;
      out.insert(out.end(), x.begin(), x.end());
    } else {
      for (int v : r.rank(tag).ranks) out.push_back(static_cast<double>(v));
    }
  }
  return out;
}

enum class CorrelationKind { pearson, kendall };

inline double concatenated_correlation(Batch batch, Tag u, Tag v, CorrelationKind kind) {
  const auto a = concatenate(batch, u);
  const auto b = concatenate(batch, v);
  return kind == CorrelationKind::pearson ? pearson(a, b) : kendall_tau(a, b);
}

/// Correlation for every pair of tags; empty cells where the coefficient is
/// undefined (constant vector, fewer than two values).
inline MethodPairTable<std::optional<double>> correlation_table(Batch batch, std::span<const Tag> tags,
                                                                CorrelationKind kind) {
  MethodPairTable<std::optional<double>> t{{tags.begin(), tags.end()}, {}};
  std::vector<std::vector<double>> data;
  for (Tag tag : tags) data.push_back(concatenate(batch, tag));
  t.cells.assign(tags.size(), std::vector<std::optional<double>>(tags.size()));
  for (std::size_t u = 0; u < tags.size(); ++u)
    for (std::size_t v = u; v < tags.size(); ++v) {
      std::optional<double> c;
      try {
        c = kind == CorrelationKind::pearson ? pearson(data[u], data[v]) : kendall_tau(data[u], data[v]);
      } catch (const ZeroVariance&) {
      } catch (const DimensionMismatch&) {
      }
      t.cells[u][v] = c;
      t.cells[v][u] = c;
    }
  return t;
}

struct FrequencyEntry {
  RankVector ranks;
  int count = 0;
  std::string order;
};

/// The top_k most frequent rank vectors of one tag, by descending count, then
/// lexicographically.
inline std::vector<FrequencyEntry> frequency_table(Batch batch, Tag tag, std::size_t top_k,
                                                   const OrderSymbols& symbols = kUnicodeSymbols,
                                                   std::span<const std::string> labels = {}) {
  std::map<std::vector<int>, int> counts;
  for (const auto& r : batch) ++counts[r.rank(tag).ranks];
  std::vector<std::pair<std::vector<int>, int>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  if (sorted.size() > top_k) sorted.resize(top_k);
  std::vector<FrequencyEntry> out;
  for (auto& [ranks, count] : sorted) {
    RankVector rv{ranks, tag};
    out.push_back({rv, count, order_string(rv, std::nullopt, symbols, labels)});
  }
  return out;
}

/// counts[d] = respondents whose tag vector is within Hamming distance d of
/// `reference`, for d = 0..n.
inline std::vector<int> within_distance_counts(Batch batch, Tag tag, const RankVector& reference) {
  const std::size_t n = reference.size();
  std::vector<int> exact(n + 1, 0);
  for (const auto& r : batch) ++exact.at(static_cast<std::size_t>(hamming_rank_distance(r.rank(tag), reference)));
  std::vector<int> cumulative(n + 1, 0);
  int running = 0;
  for (std::size_t d = 0; d <= n; ++d) cumulative[d] = running += exact[d];
  return cumulative;
}

}  // namespace prefrank::stats
