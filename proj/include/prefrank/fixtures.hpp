#pragma once

/**
 * @file fixtures.hpp
 * @brief Three worked hotel-selection respondents with their published
 *        rating and rank vectors, used for self-checks and golden tests.
 *
 * Criteria: C1 location, C2 accommodation cost, C3 social environment,
 * C4 free breakfast, C5 amenities, C6 courtesy of staff.
 */

#include <map>
#include <string>
#include <vector>

#include "prefrank/comparison.hpp"
#include "prefrank/survey.hpp"
#include "prefrank/tags.hpp"

namespace prefrank::fixtures {

inline const std::vector<std::string>& hotel_criteria() {
  static const std::vector<std::string> labels{"C1", "C2", "C3", "C4", "C5", "C6"};
  return labels;
}

/// Upper triangles, row by row.
inline ComparisonMatrix respondent1_matrix() {
  const std::vector<double> up{1.0 / 4, 5, 4, 1.0 / 5, 4,  //
                               5, 5, 1.0 / 3, 5,           //
                               1.0 / 3, 1.0 / 5, 2,        //
                               1.0 / 5, 3,                 //
                               5};
  return ComparisonMatrix::from_upper(6, up);
}

inline ComparisonMatrix respondent2_matrix() {
  const std::vector<double> up{1, 3, 3, 2, 4,  //
                               4, 2, 4, 5,     //
                               3, 1, 4,        //
                               1, 3,           //
                               3};
  return ComparisonMatrix::from_upper(6, up);
}

inline ComparisonMatrix respondent3_matrix() {
  const std::vector<double> up{1.0 / 4, 5, 4, 1.0 / 3, 3,    //
                               5, 5, 3, 5,                   //
                               1.0 / 3, 1.0 / 5, 1.0 / 3,    //
                               1.0 / 4, 1,                   //
                               5};
  return ComparisonMatrix::from_upper(6, up);
}

/// The three respondents as survey records. Respondent 2's direct scores use
/// 3/4 and 1/2, which lie off the five-point scale.
inline SurveyBatch hotel_batch() {
  SurveyBatch b;
  b.criteria = hotel_criteria();
  b.records.push_back({{"1", 24, Sex::male, true}, {0.6, 1.0, 0.2, 0.4, 1.0, 0.2}, {3, 2, 5, 4, 1, 6},
                       respondent1_matrix()});
  b.records.push_back({{"2", 19, Sex::male, false}, {1.0, 1.0, 0.75, 0.5, 0.75, 0.5}, {2, 1, 3, 4, 5, 6},
                       respondent2_matrix()});
  b.records.push_back({{"3", 21, Sex::female, false}, {0.8, 1.0, 0.2, 0.6, 0.8, 0.6}, {2, 1, 6, 4, 3, 5},
                       respondent3_matrix()});
  return b;
}

/// Published vectors for one respondent, printed to four decimals.
struct Published {
  std::string id;
  std::map<Tag, std::vector<double>> ratings;
  std::map<Tag, std::vector<int>> ranks;
};

inline std::vector<Published> published_results() {
  return {
      {"1",
       {{Tag::SPE, {0.3581, 0.6526, 0.1142, 0.1832, 1.0000, 0.0943}},
        {Tag::SGM, {0.3588, 0.6680, 0.1190, 0.1906, 1.0000, 0.0981}},
        {Tag::SCB, {0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018}},
        {Tag::SCW, {0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018}}},
       {{Tag::RSR, {3, 1, 5, 4, 2, 6}},
        {Tag::RSPE, {3, 2, 5, 4, 1, 6}},
        {Tag::RSGM, {3, 2, 5, 4, 1, 6}},
        {Tag::RSCB, {3, 2, 5, 4, 1, 6}},
        {Tag::RSCW, {3, 2, 5, 4, 1, 6}}}},
      {"2",
       {{Tag::SPE, {0.8485, 1.0000, 0.4462, 0.3170, 0.3467, 0.1392}},
        {Tag::SGM, {0.8754, 1.0000, 0.4292, 0.3184, 0.3645, 0.1434}},
        {Tag::SCB, {0.7500, 1.0000, 0.4543, 0.2752, 0.2500, 0.1101}},
        {Tag::SCW, {1.0000, 1.0000, 0.4543, 0.2752, 0.4543, 0.1667}}},
       {{Tag::RSR, {1, 2, 3, 5, 4, 6}},
        {Tag::RSPE, {2, 1, 3, 5, 4, 6}},
        {Tag::RSGM, {2, 1, 3, 5, 4, 6}},
        {Tag::RSCB, {2, 1, 3, 4, 5, 6}},
        {Tag::RSCW, {1, 2, 3, 5, 4, 6}}}},
      {"3",
       {{Tag::SPE, {0.3773, 1.0000, 0.0930, 0.1630, 0.6213, 0.1631}},
        {Tag::SGM, {0.3865, 1.0000, 0.0916, 0.1710, 0.6368, 0.1728}},
        {Tag::SCB, {0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.1755}},
        {Tag::SCW, {0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.2279}}},
       {{Tag::RSR, {2, 1, 6, 4, 3, 5}},
        {Tag::RSPE, {3, 1, 6, 5, 2, 4}},
        {Tag::RSGM, {3, 1, 6, 5, 2, 4}},
        {Tag::RSCB, {3, 1, 6, 4, 2, 5}},
        {Tag::RSCW, {3, 1, 6, 5, 2, 4}}}},
  };
}

}  // namespace prefrank::fixtures
