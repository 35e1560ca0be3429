#pragma once

/**
 * @file tags.hpp
 * @brief Names for the rating and rank vector families.
 *
 * Rating vectors: SR (direct scores), SPE (principal eigenvector),
 * SGM (geometric mean), SCB / SCW (best / worst differentiating
 * log-Chebyshev solution). Rank vectors: RR (direct ranks) and RS* (ranks
 * derived from the matching rating vector).
 */

#include <array>
#include <optional>
#include <string_view>

namespace prefrank {

enum class Tag { SR, RR, RSR, SPE, RSPE, SGM, RSGM, SCB, RSCB, SCW, RSCW };

inline constexpr std::array<Tag, 5> kRatingTags{Tag::SR, Tag::SPE, Tag::SGM, Tag::SCB, Tag::SCW};
inline constexpr std::array<Tag, 6> kRankTags{Tag::RR, Tag::RSR, Tag::RSPE, Tag::RSGM, Tag::RSCB, Tag::RSCW};
/// Rating methods that work from a comparison matrix.
inline constexpr std::array<Tag, 4> kMatrixMethods{Tag::SPE, Tag::SGM, Tag::SCB, Tag::SCW};

constexpr std::string_view to_string(Tag t) {
  switch (t) {
    case Tag::SR: return "SR";
    case Tag::RR: return "RR";
    case Tag::RSR: return "RSR";
    case Tag::SPE: return "SPE";
    case Tag::RSPE: return "RSPE";
    case Tag::SGM: return "SGM";
    case Tag::RSGM: return "RSGM";
    case Tag::SCB: return "SCB";
    case Tag::RSCB: return "RSCB";
    case Tag::SCW: return "SCW";
    case Tag::RSCW: return "RSCW";
  }
  return "?";
}

constexpr std::optional<Tag> parse_tag(std::string_view s) {
  for (Tag t : {Tag::SR, Tag::RR, Tag::RSR, Tag::SPE, Tag::RSPE, Tag::SGM, Tag::RSGM, Tag::SCB, Tag::RSCB,
                Tag::SCW, Tag::RSCW})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

constexpr bool is_rating_tag(Tag t) {
  return t == Tag::SR || t == Tag::SPE || t == Tag::SGM || t == Tag::SCB || t == Tag::SCW;
}

constexpr bool is_rank_tag(Tag t) { return !is_rating_tag(t); }

/// Rank family derived from a rating family (SPE -> RSPE, SR -> RSR).
constexpr Tag rank_tag_for(Tag rating) {
  switch (rating) {
    case Tag::SR: return Tag::RSR;
    case Tag::SPE: return Tag::RSPE;
    case Tag::SGM: return Tag::RSGM;
    case Tag::SCB: return Tag::RSCB;
    case Tag::SCW: return Tag::RSCW;
    default: return rating;
  }
}

/// Rating family behind a derived rank family (RSPE -> SPE). RR has none and
/// maps to itself.
constexpr Tag rating_tag_for(Tag rank) {
  switch (rank) {
    case Tag::RSR: return Tag::SR;
    case Tag::RSPE: return Tag::SPE;
    case Tag::RSGM: return Tag::SGM;
    case Tag::RSCB: return Tag::SCB;
    case Tag::RSCW: return Tag::SCW;
    default: return rank;
  }
}

}  // namespace prefrank
