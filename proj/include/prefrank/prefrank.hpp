#pragma once

/**
 * @file prefrank.hpp
 * @brief Umbrella header for the prefrank library.
 */

#include "prefrank/analysis.hpp"
#include "prefrank/comparison.hpp"
#include "prefrank/errors.hpp"
#include "prefrank/fixtures.hpp"
#include "prefrank/maxplus.hpp"
#include "prefrank/ranking.hpp"
#include "prefrank/rating.hpp"
#include "prefrank/respondent.hpp"
#include "prefrank/stats.hpp"
#include "prefrank/survey.hpp"
#include "prefrank/tags.hpp"
