#pragma once

#include <string>

#include "json.hpp"

#include "dyck/dyck.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/partition.hpp"
#include "dyck/series.hpp"
#include "dyck/syzygy.hpp"

namespace dyck {

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
/// decimal strings; parsing accepts both.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Box& b);                 // [x, y]
nlohmann::json to_json(const Partition& p);           // [4, 3, 1, 1]
Partition partition_from_json(const nlohmann::json& j);

/// {"paths": [[[x,y], ...], ...], "bullets": [[x,y], ...]}
nlohmann::json to_json(const DyckPattern& p);
DyckPattern pattern_from_json(const nlohmann::json& j);

/// {"min_deg": d, "coeffs": [...]}; the zero series has empty coeffs.
nlohmann::json to_json(const HilbertSeries& s);
HilbertSeries series_from_json(const nlohmann::json& j);

/// {"base": ..., "n": ..., "kind": "kac"|"syzygy"|"b_side", "members": [...]}
/// Members carry pattern, label, d, b, and for b-side families also mu.
nlohmann::json to_json(const PatternFamily& f);

/// {"lambda": ..., "m": ..., "n": ..., "strands": [...]}
nlohmann::json to_json(const HomologyClasses& h);

/// {"lambda": ..., "m": ..., "n": ..., "rows": {"5": {"0": 225, ...}}}
nlohmann::json to_json(const BettiTable& t);

}  // namespace dyck
