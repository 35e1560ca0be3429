// Rates a small comparison matrix with the four methods and prints the ranks.
#include <iostream>

#include <fmt/format.h>

#include "prefrank/prefrank.hpp"

int main() {
  using namespace prefrank;
  // C1 is three times as important as C2 and five times as important as C3.
  const std::vector<double> upper{3, 5, 2};
  const auto a = ComparisonMatrix::from_upper(3, upper);

  for (const auto& [tag, rating] : rate_all(a)) {
    const auto ranks = ranks_from_ratings(rating);
    fmt::print("{:<4}", to_string(tag));
    for (double v : rating.scores) fmt::print(" {}", fixed4(v));
    fmt::print("   {}\n", order_string(ranks, tie_info(ranks, rating.scores), kAsciiSymbols, default_labels(3)));
  }
  fmt::print("lambda = {}\n", fixed4(solve_cone(a).lambda));
}
