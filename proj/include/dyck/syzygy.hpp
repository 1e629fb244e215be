#pragma once

#include <map>
#include <string>
#include <vector>

#include "dyck/enumeration.hpp"
#include "dyck/grothendieck.hpp"
#include "dyck/partition.hpp"
#include "dyck/series.hpp"

namespace dyck {

struct StrandMember {
  DyckPattern pattern;
  Partition label;
  HilbertSeries series;
};

/// Homology strand in homological degree |lambda| + b.
struct Strand {
  int b = 0;
  int row = 0;
  std::vector<StrandMember> members;
  HilbertSeries total;
};

struct HomologyClasses {
  Partition lambda;
  int m = 0;
  int n = 0;
  std::vector<Strand> strands;  // increasing b
};

/// Classes of the linear strand homology of the invariant ideal I_lambda
/// inside the m x n matrix coordinate ring: strand b collects the simple
/// modules labelled by the admissible patterns with b bullets.
HomologyClasses homology_classes(const Partition& lambda, int m, int n,
                                 int jobs = 1, SeriesCache* cache = nullptr);

/// Graded Betti numbers.  rows[r][s] is the Betti number in homological
/// degree s and internal degree r + s; zero entries are omitted.
struct BettiTable {
  Partition lambda;
  int m = 0;
  int n = 0;
  std::map<int, std::map<int, Int>> rows;

  /// Aligned grid with a column index header, one line per row, and "."
  /// for zero entries, in the style of Macaulay2.
  std::string to_text() const;
};

BettiTable betti_from_homology(const HomologyClasses& h);
BettiTable betti_table(const Partition& lambda, int m, int n, int jobs = 1,
                       SeriesCache* cache = nullptr);

/// One inclusion-exclusion term for an ideal I_{lambda_1} + ... + I_{lambda_k}:
/// the subset S contributes sign (-1)^(|S|+1) times the invariant ideal of
/// the union of its partitions.
struct GeneralTerm {
  std::vector<int> indices;  // 0-based positions into the input list
  Partition merged;
  int sign = 0;
};

/// Terms over all nonempty subsets, ordered by size then lexicographically.
/// The partitions must be pairwise incomparable; otherwise ComparablePair
/// is thrown.
std::vector<GeneralTerm> general_ideal_terms(const std::vector<Partition>& lambdas);

}  // namespace dyck
