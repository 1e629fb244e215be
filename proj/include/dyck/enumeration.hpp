#pragma once

#include <utility>
#include <vector>

#include "dyck/dyck.hpp"
#include "dyck/errors.hpp"
#include "dyck/partition.hpp"

namespace dyck {

enum class FamilyKind { Kac, Syzygy, BSide };

struct FamilyMember {
  DyckPattern pattern;
  /// Closure of the base partition and the pattern support.
  Partition label;
  /// Partition the pattern lives over: the family base, except for b-side
  /// members where it is the enlarged partition mu.
  Partition base;
  int d = 0;
  int b = 0;
};

struct PatternFamily {
  Partition lambda;
  int n = 0;
  FamilyKind kind = FamilyKind::Kac;
  /// Sorted by (b, label size, label, base, pattern).
  std::vector<FamilyMember> members;
};

/// All partitions nu containing base with at most max_rows rows and
/// |nu \ base| <= extra (or exactly extra when exact is set), in
/// lexicographic order of the part vectors.  max_col additionally caps the
/// first part when nonnegative.
std::vector<Partition> super_partitions(const Partition& base, int max_rows,
                                        int extra, bool exact = false,
                                        int max_col = -1);

/// Bullet-free admissible patterns over lambda with at most size_bound path
/// boxes and labels of at most n rows.  Single-box paths are allowed.
/// size_bound -1 means n*n, which captures the whole family.
PatternFamily enumerate_kac_patterns(const Partition& lambda, int n,
                                     int size_bound = -1, int jobs = 1);

/// Admissible patterns over lambda whose paths all have at least three
/// boxes, bullets allowed; these index the linear strands.  The search
/// region widens adaptively and throws RegionOverflow if it cannot settle.
PatternFamily enumerate_syzygy_patterns(const Partition& lambda, int n,
                                        int jobs = 1);

/// Pairs (mu, paths): mu contains lambda with |mu| - |lambda| = b, the
/// bullet-free pattern is admissible over mu with every path of length at
/// least three, and each corner of mu whose three N/E/NE boxes lie in one
/// path, or entirely outside the support, already lies in lambda.
/// Members carry base = mu.
PatternFamily enumerate_b_side(const Partition& lambda, int b, int n,
                               int jobs = 1);

/// Moves the bullets of an admissible pattern over lambda into the base:
/// returns mu = lambda plus the bullets, and the bullet-free path system,
/// which is admissible over mu.
std::pair<Partition, DyckPattern> a_to_b(const Partition& lambda,
                                         const DyckPattern& pattern);

/// Inverse direction: reattaches mu \ lambda as bullets to the path system
/// and checks admissibility over lambda.
DyckPattern b_to_a(const Partition& lambda, const Partition& mu,
                   const DyckPattern& paths);

}  // namespace dyck
