#pragma once

/**
 * @file respondent.hpp
 * @brief Per-respondent attributes and computed rating/rank vectors.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "prefrank/errors.hpp"
#include "prefrank/ranking.hpp"
#include "prefrank/rating.hpp"
#include "prefrank/tags.hpp"

namespace prefrank {

enum class Sex { male, female, unspecified };

constexpr std::string_view to_string(Sex s) {
  switch (s) {
    case Sex::male: return "male";
    case Sex::female: return "female";
    case Sex::unspecified: return "unspecified";
  }
  return "unspecified";
}

constexpr std::optional<Sex> parse_sex(std::string_view s) {
  if (s == "male" || s == "m" || s == "M") return Sex::male;
  if (s == "female" || s == "f" || s == "F") return Sex::female;
  if (s == "unspecified" || s.empty()) return Sex::unspecified;
  return std::nullopt;
}

struct Attributes {
  std::string id;
  int age = 0;
  Sex sex = Sex::unspecified;
  bool visited = false;

  bool operator==(const Attributes&) const = default;
};

/// Every rating and rank family computed for one respondent.
struct RespondentResult {
  Attributes who;
  std::map<Tag, RatingVector> ratings;
  std::map<Tag, RankVector> ranks;
  double lambda = 0.0;
  bool unique = false;

  const RatingVector& rating(Tag t) const {
    auto it = ratings.find(t);
    if (it == ratings.end()) throw MissingTag("respondent " + who.id + " has no " + std::string(to_string(t)));
    return it->second;
  }
  const RankVector& rank(Tag t) const {
    auto it = ranks.find(t);
    if (it == ranks.end()) throw MissingTag("respondent " + who.id + " has no " + std::string(to_string(t)));
    return it->second;
  }
};

}  // namespace prefrank
