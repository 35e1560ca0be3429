#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prefrank/fixtures.hpp"
#include "prefrank/ranking.hpp"

using namespace prefrank;

namespace {

RatingVector rv(std::vector<double> x, Tag t) { return {std::move(x), t}; }

}  // namespace

TEST(Ranks, PublishedSpeRespondent1) {
  const auto r = ranks_from_ratings(rv({0.3581, 0.6526, 0.1142, 0.1832, 1.0000, 0.0943}, Tag::SPE));
  EXPECT_EQ(r.ranks, (std::vector<int>{3, 2, 5, 4, 1, 6}));
  EXPECT_EQ(r.source, Tag::RSPE);
}

TEST(Ranks, FullTieKeepsIndexOrder) {
  EXPECT_EQ(ranks_from_ratings(std::vector<double>{1, 1, 1}, Tag::RSGM).ranks, (std::vector<int>{1, 2, 3}));
}

TEST(Ranks, PublishedScwRespondent2Tie) {
  const auto x = rv({1.0, 1.0, 0.4543, 0.2752, 0.4543, 0.1667}, Tag::SCW);
  const auto r = ranks_from_ratings(x);
  EXPECT_EQ(r.ranks, (std::vector<int>{1, 2, 3, 5, 4, 6}));
  EXPECT_EQ(order_string(r, tie_info(r, x.scores)), "C1 ⪰ C2 ≻ C3 ⪰ C5 ≻ C4 ≻ C6");
}

TEST(Ranks, AllPublishedRankVectorsFromComputedRatings) {
  const auto batch = fixtures::hotel_batch();
  for (const auto& pub : fixtures::published_results()) {
    const auto& rec = *std::find_if(batch.records.begin(), batch.records.end(),
                                    [&](const SurveyRecord& r) { return r.who.id == pub.id; });
    const auto rated = rate_all(rec.matrix);
    for (const auto& [tag, want] : pub.ranks) {
      const std::vector<int> got = tag == Tag::RSR ? ranks_from_ratings(rec.scores, Tag::RSR).ranks
                                                   : ranks_from_ratings(rated.at(rating_tag_for(tag))).ranks;
      EXPECT_EQ(got, want) << "respondent " << pub.id << " " << to_string(tag);
    }
  }
}

TEST(Ranks, ScaleInvariant) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    auto x = oracle::random_positive(rng, 6);
    const auto r = ranks_from_ratings(x, Tag::RSPE);
    for (double& v : x) v *= 0.37;
    EXPECT_EQ(ranks_from_ratings(x, Tag::RSPE), r);
  }
}

TEST(Ranks, OrderRoundTrip) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> p{1, 2, 3, 4, 5, 6};
    std::shuffle(p.begin(), p.end(), rng);
    const RankVector r{p, Tag::RR};
    EXPECT_TRUE(is_permutation_of_1_to_n(p));
    EXPECT_EQ(from_order(order_of(r), Tag::RR), r);
  }
  EXPECT_FALSE(is_permutation_of_1_to_n(std::vector<int>{1, 1, 3}));
  EXPECT_FALSE(is_permutation_of_1_to_n(std::vector<int>{0, 1, 2}));
}

TEST(Ranks, OrderListsNonIncreasingRatings) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_positive(rng, 6);
    const auto order = order_of(ranks_from_ratings(x, Tag::RSGM));
    for (std::size_t p = 0; p + 1 < order.size(); ++p) EXPECT_GE(x[order[p]], x[order[p + 1]]);
  }
}

TEST(OrderString, DistinctRatings) {
  EXPECT_EQ(order_string(RankVector{{3, 2, 5, 4, 1, 6}, Tag::RSPE}), "C5 ≻ C2 ≻ C1 ≻ C4 ≻ C3 ≻ C6");
  EXPECT_EQ(order_string(RankVector{{1, 2, 3}, Tag::RSPE}), "C1 ≻ C2 ≻ C3");
  EXPECT_EQ(order_string(RankVector{{1, 2, 3}, Tag::RSPE}, std::nullopt, kAsciiSymbols), "C1 > C2 > C3");
  const std::vector<std::string> labels{"cost", "view"};
  EXPECT_EQ(order_string(RankVector{{2, 1}, Tag::RR}, std::nullopt, kAsciiSymbols, labels), "view > cost");
}

TEST(Intervals, Respondent2Block) {
  const auto r = rate_all(fixtures::respondent2_matrix());
  const auto iv = interval_combine(r.at(Tag::SCB), r.at(Tag::SCW));
  EXPECT_NEAR(iv[0].low, 0.75, 1e-3);
  EXPECT_NEAR(iv[0].high, 1.0, 1e-3);
  EXPECT_FALSE(iv[0].degenerate());
  EXPECT_EQ(combined_order_string(iv), "C2 ⪰ C1 ≻ C3 ⪰ C5 ∥ C4 ≻ C6");
}

TEST(Intervals, Respondent3OnlyLastWidens) {
  const auto r = rate_all(fixtures::respondent3_matrix());
  const auto iv = interval_combine(r.at(Tag::SCB), r.at(Tag::SCW));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(iv[i].degenerate()) << i;
  EXPECT_NEAR(iv[5].low, 0.1755, 1e-3);
  EXPECT_NEAR(iv[5].high, 0.2279, 1e-3);
  const auto text = combined_order_string(iv);
  EXPECT_NE(text.find("C6 ⪰ C4"), std::string::npos) << text;
  EXPECT_EQ(text, "C2 ≻ C5 ≻ C1 ≻ C6 ⪰ C4 ≻ C3");
}

TEST(Intervals, UniqueConeDegenerate) {
  const auto r = rate_all(fixtures::respondent1_matrix());
  for (const auto& x : interval_combine(r.at(Tag::SCB), r.at(Tag::SCW))) EXPECT_TRUE(x.degenerate());
}

TEST(Intervals, LengthMismatch) {
  EXPECT_THROW(interval_combine(rv({1, 0.5}, Tag::SCB), rv({1}, Tag::SCW)), DimensionMismatch);
}
