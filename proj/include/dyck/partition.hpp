#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dyck/numeric.hpp"

namespace dyck {

/// Box in the plane with 1-based coordinates: x is the column, y is the row.
/// Row 1 is the bottom row, so a partition grows upward and to the right and
/// box (x, y) belongs to lambda exactly when x <= lambda_y.
struct Box {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

/// Integer partition, stored as weakly decreasing positive parts.
/// part(y) is 0 past the last row, so containment tests need no bounds checks.
class Partition {
 public:
  Partition() = default;
  /// Validates weak decrease and positivity; trailing zeros are stripped.
  explicit Partition(std::vector<int> parts);

  /// Rebuilds a partition from its box set.  Returns nullopt when the boxes
  /// do not form a partition diagram; if `offending` is given it receives a
  /// box whose west or south neighbour is missing.
  static std::optional<Partition> from_boxes(std::vector<Box> boxes,
                                             Box* offending = nullptr);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// 1-based row length, 0 for rows past the end.
  int part(int y) const;
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Box& b) const;
  /// All boxes, ordered by (row, column).
  std::vector<Box> boxes() const;
  /// Boxes with no box above or to the right, ordered by row.
  std::vector<Box> corners() const;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Containment order: every row of a fits inside the same row of b.
bool leq(const Partition& a, const Partition& b);

/// Rowwise maximum of the two diagrams.
Partition union_of(const Partition& a, const Partition& b);

/// Dimension of the Schur functor S_p applied to a k-dimensional space,
/// via the hook content formula.  Zero when p has more than k rows.
Int schur_dim(const Partition& p, int k);

std::string to_string(const Partition& p);

/// Parses "(4,3,1,1)", "()" or exponent form "(3^3,1^2)".
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace dyck
