#pragma once

// JSON form of a truncated series: an array of terms
//
//   { "chi": int, "degree": [int...], "contacts": [[int...]...],
//     "words": [["pt","L",...]...], "coeff": "p/q" }
//
// in the series' own (deterministic) key order.

#include "json.hpp"

#include "gtcomb/gt_series.hpp"

namespace gtcomb {

nlohmann::ordered_json series_to_json(const GTSeries& series);

}  // namespace gtcomb
