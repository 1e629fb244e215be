#pragma once

#include <string>

#include "dyck/dyck.hpp"
#include "dyck/partition.hpp"

namespace dyck {

/// Standalone SVG drawing of a pattern over a partition: dotted unit grid,
/// the partition as a thick staircase outline, each path as a round-capped
/// polyline through its box centers (single boxes become dots), and bullets
/// as filled disks.  The canvas covers the diagram and the pattern support
/// plus one empty cell of slack.
std::string render_pattern_svg(const Partition& lambda,
                               const DyckPattern& pattern);

}  // namespace dyck
