#pragma once

/**
 * @file ranking.hpp
 * @brief Rank vectors, preference-order strings and interval ratings.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "prefrank/errors.hpp"
#include "prefrank/rating.hpp"
#include "prefrank/tags.hpp"

namespace prefrank {

/// Ratings closer than this are treated as tied.
inline constexpr double kTieTolerance = 1e-9;

/// ranks[i] is the position of criterion i; 1 is most preferred.
struct RankVector {
  std::vector<int> ranks;
  Tag source = Tag::RR;

  std::size_t size() const noexcept { return ranks.size(); }
  bool operator==(const RankVector&) const = default;
};

/// Whether a vector holds each of 1..n exactly once.
inline bool is_permutation_of_1_to_n(std::span<const int> r) {
  std::vector<bool> seen(r.size(), false);
  for (int v : r) {
    if (v < 1 || static_cast<std::size_t>(v) > r.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

/// Criteria indices listed from rank 1 to rank n.
inline std::vector<std::size_t> order_of(const RankVector& r) {
  std::vector<std::size_t> order(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) order[r.ranks[i] - 1] = i;
  return order;
}

inline RankVector from_order(std::span<const std::size_t> order, Tag source) {
  RankVector r{std::vector<int>(order.size()), source};
  for (std::size_t p = 0; p < order.size(); ++p) r.ranks[order[p]] = static_cast<int>(p + 1);
  return r;
}

/// Descending ratings; equal ratings (within 1e-9) take consecutive ranks in
/// ascending criterion order.
inline RankVector ranks_from_ratings(std::span<const double> x, Tag source) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(x[a] - x[b]) <= kTieTolerance) return false;
    return x[a] > x[b];
  });
  return from_order(order, source);
}

inline RankVector ranks_from_ratings(const RatingVector& x) {
  return ranks_from_ratings(x.scores, rank_tag_for(x.method));
}

/// tied_with_next[p] says whether the criteria at positions p and p+1 of the
/// ranking had equal ratings.
struct TieInfo {
  std::vector<bool> tied_with_next;
};

inline TieInfo tie_info(const RankVector& r, std::span<const double> ratings) {
  const auto order = order_of(r);
  TieInfo info;
  for (std::size_t p = 0; p + 1 < order.size(); ++p)
    info.tied_with_next.push_back(std::abs(ratings[order[p]] - ratings[order[p + 1]]) <= kTieTolerance);
  return info;
}

struct OrderSymbols {
  std::string_view strict;
  std::string_view weak;
  std::string_view undetermined;
};

inline constexpr OrderSymbols kUnicodeSymbols{"≻", "⪰", "∥"};
inline constexpr OrderSymbols kAsciiSymbols{">", ">=", "||"};

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fmt::format("C{}", i + 1));
  return out;
}

/// "C5 ≻ C2 ≻ C1 ...", with ⪰ between criteria recorded as tied.
inline std::string order_string(const RankVector& r, const std::optional<TieInfo>& ties = std::nullopt,
                                const OrderSymbols& symbols = kUnicodeSymbols,
                                std::span<const std::string> labels = {}) {
  const auto names = labels.empty() ? default_labels(r.size()) : std::vector<std::string>(labels.begin(), labels.end());
  const auto order = order_of(r);
  std::string out;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (p > 0) {
      const bool weak = ties && p - 1 < ties->tied_with_next.size() && ties->tied_with_next[p - 1];
      out += fmt::format(" {} ", weak ? symbols.weak : symbols.strict);
    }
    out += names[order[p]];
  }
  return out;
}

/// Rating range [low, high] for one criterion.
struct Interval {
  double low = 0.0;
  double high = 0.0;

  bool degenerate() const noexcept { return std::abs(high - low) <= kTieTolerance; }
  bool operator==(const Interval&) const = default;
};

inline std::vector<Interval> interval_combine(const RatingVector& best, const RatingVector& worst) {
  if (best.size() != worst.size()) throw DimensionMismatch("interval_combine: vectors differ in length");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < best.size(); ++i)
    out.push_back({std::min(best[i], worst[i]), std::max(best[i], worst[i])});
  return out;
}

/// Order of interval-valued ratings. Criteria are listed by upper bound, then
/// lower bound (both descending), then index. Between neighbours:
///   ≻  the first lower bound exceeds the second upper bound,
///   ⪰  the first interval dominates the second in both bounds,
///   ∥  the intervals cross.
inline std::string combined_order_string(std::span<const Interval> xs, const OrderSymbols& symbols = kUnicodeSymbols,
                                         std::span<const std::string> labels = {}) {
  const auto names = labels.empty() ? default_labels(xs.size()) : std::vector<std::string>(labels.begin(), labels.end());
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto greater = [](double a, double b) { return a > b + kTieTolerance; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (greater(xs[a].high, xs[b].high)) return true;
    if (greater(xs[b].high, xs[a].high)) return false;
    return greater(xs[a].low, xs[b].low);
  });
  std::string out;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (p > 0) {
      const Interval& prev = xs[order[p - 1]];
      const Interval& cur = xs[order[p]];
      std::string_view sym = symbols.undetermined;
      if (greater(prev.low, cur.high))
        sym = symbols.strict;
      else if (!greater(cur.low, prev.low) && !greater(cur.high, prev.high))
        sym = symbols.weak;
      out += fmt::format(" {} ", sym);
    }
    out += names[order[p]];
  }
  return out;
}

}  // namespace prefrank
