#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyck/partition.hpp"

namespace dyck {

class DyckPath;
class DyckPattern;
struct PathCheck;
struct PatternCheck;
PathCheck validate_dyck_path(std::vector<Box> cells);
PatternCheck make_pattern(std::vector<DyckPath> paths, std::vector<Box> bullets);

/// Lattice path of boxes stepping east (x+1, y) or south (x, y-1).  Both
/// endpoints lie on the antidiagonal x + y = level, no box of the path lies
/// below that antidiagonal, and the length is therefore odd.  A single box
/// is a valid path.
class DyckPath {
 public:
  const std::vector<Box>& cells() const { return cells_; }
  int level() const { return level_; }
  int length() const { return static_cast<int>(cells_.size()); }
  Box start() const { return cells_.front(); }
  Box end() const { return cells_.back(); }
  bool contains(const Box& b) const;

  /// Inner corners turn south-then-east, outer corners east-then-south.
  /// Endpoints are never corners.
  struct Corners {
    std::vector<Box> inner;
    std::vector<Box> outer;
  };
  Corners corners() const;

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  DyckPath(std::vector<Box> cells, int level)
      : cells_(std::move(cells)), level_(level) {}
  friend struct PathCheck;
  friend PathCheck validate_dyck_path(std::vector<Box> cells);

  std::vector<Box> cells_;
  int level_ = 0;
};

struct PathCheck {
  std::optional<DyckPath> path;
  std::string error;  // names the violated clause; empty on success
  explicit operator bool() const { return path.has_value(); }
  const DyckPath& operator*() const { return *path; }
};

/// Checks the box chain clause by clause: nonempty, positive coordinates,
/// unit east or south steps, endpoints on one antidiagonal, no box below it.
PathCheck validate_dyck_path(std::vector<Box> cells);

inline DyckPath::Corners path_corners(const DyckPath& p) { return p.corners(); }

std::string to_string(const DyckPath& p);

/// Disjoint Dyck paths together with bullet boxes.  Every bullet must be
/// coverable as part of a head run (boxes directly west of some path start,
/// in its row) or a tail run (boxes directly south of some path end, in its
/// column); runs may only pass through other bullets.  Construction via
/// make_pattern enforces this.  Paths are kept sorted by (start row, start
/// column, length) and bullets by (column, row).
class DyckPattern {
 public:
  DyckPattern() = default;  // the empty pattern

  const std::vector<DyckPath>& paths() const { return paths_; }
  const std::vector<Box>& bullets() const { return bullets_; }
  /// All path boxes and bullets, sorted by (column, row).
  std::vector<Box> support() const;
  /// Number of path boxes.
  int d() const;
  /// Number of bullets.
  int b() const { return static_cast<int>(bullets_.size()); }
  bool empty() const { return paths_.empty() && bullets_.empty(); }
  /// Index of the path containing the box, or -1.
  int path_index_of(const Box& box) const;

  friend auto operator<=>(const DyckPattern&, const DyckPattern&) = default;

 private:
  friend struct PatternCheck;
  friend PatternCheck make_pattern(std::vector<DyckPath> paths,
                                   std::vector<Box> bullets);
  std::vector<DyckPath> paths_;
  std::vector<Box> bullets_;
};

struct PatternCheck {
  std::optional<DyckPattern> pattern;
  std::string error;
  explicit operator bool() const { return pattern.has_value(); }
  const DyckPattern& operator*() const { return *pattern; }
};

/// Builds a pattern, rejecting overlapping boxes and uncoverable bullets.
PatternCheck make_pattern(std::vector<DyckPath> paths, std::vector<Box> bullets);

std::string to_string(const DyckPattern& p);

enum class CoverKind { Head, Tail };

struct BulletCover {
  Box bullet;
  /// Feasible assignments (path index, head or tail).  Empty means the
  /// bullet cannot be covered.
  std::vector<std::pair<int, CoverKind>> options;
};

/// For each bullet, all paths that can absorb it into their head or tail
/// run, given that run boxes in between must themselves be bullets.
std::vector<BulletCover> decompose_bullets(const std::vector<DyckPath>& paths,
                                           const std::vector<Box>& bullets);

/// The partition whose boxes are those of lambda plus the pattern support.
/// nullopt when the support meets lambda or the union is not a partition.
std::optional<Partition> lambda_of(const Partition& lambda,
                                   const DyckPattern& pattern);

/// Same with the bullets alone.
std::optional<Partition> lambda_of_bullets(const Partition& lambda,
                                           const DyckPattern& pattern);

struct AdmissibilityReport {
  bool ok = false;
  /// First violated condition (1 to 4), 0 when admissible.
  int condition = 0;
  Box witness{};
  std::string message;
};

/// Admissibility of a pattern over lambda, checked in order:
///   1. the support is disjoint from lambda;
///   2. lambda plus the support is again a partition;
///   3. for ordered path pairs (i, j), if some box of path j lies N, E or NE
///      of a box of path i, then every box N, E or NE of path i lies in
///      path i or path j;
///   4. no bullet lies N, E or NE of any path box.
AdmissibilityReport is_admissible(const Partition& lambda,
                                  const DyckPattern& pattern);

}  // namespace dyck
