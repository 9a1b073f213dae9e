#pragma once

#include <nlohmann/json.hpp>

#include "pfaffian/cgl.hpp"
#include "pfaffian/frobenius.hpp"
#include "pfaffian/leaves.hpp"

namespace pfaffian {

using Json = nlohmann::ordered_json;

/// Bracket coefficient table and torus weights of one Bott-Samelson chart.
Json chart_report(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma);

/// Certificate plus splitting verdict for arbitrary chart data.
Json split_report(const CGLData& d, std::int64_t p);

/// Same pipeline for the Bott-Samelson chart of (u, gamma).
Json split_report(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma,
                  std::int64_t p);

/// Mixed-structure pipeline on T x (big cell).
Json gu_split_report(const RootSystem& rs, std::int64_t p);

Json leaves_report(const RootSystem& rs, Space space);

}  // namespace pfaffian
