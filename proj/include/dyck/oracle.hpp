#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "dyck/numeric.hpp"
#include "dyck/partition.hpp"

namespace dyck {

/// Semistandard Young tableaux of shape p with entries in 1..k, counted by
/// direct backtracking.  Independent of the hook content formula behind
/// schur_dim.  Capped at |p| <= 8 and k <= 6 to keep the search small.
Int ssyt_count(const Partition& p, int k);

/// Rank over the rationals, by fraction-free (Bareiss) elimination with row
/// pivoting.  Takes the matrix by value and destroys it.
int integer_matrix_rank(std::vector<std::vector<Int>> a);

struct CubeComplexReport {
  int n = 0;
  bool square_zero = false;
  bool exact = false;
  /// Rank of d_i : F_i -> F_{i+1} for i = 0..n-1.
  std::vector<int> ranks;
  std::string message;
};

/// Builds the complex 0 -> F_0 -> ... -> F_n -> 0 where F_i is spanned by
/// the i-subsets of {1..n} and d(e_A) = sum over j not in A of
/// (-1)^{#{a in A : a < j}} e_{A+j}, then checks d.d = 0 and exactness
/// (rank d_{i-1} + rank d_i = C(n,i) at every spot) with exact integer
/// ranks.  A nonzero seed rescales the basis vectors by random positive
/// weights w_1..w_n, turning the entry for A -> A+j into (+-1) w_j; this
/// diagonal change of basis preserves both properties.  Requires n <= 12.
CubeComplexReport cube_complex_check(int n, unsigned seed = 0);

struct EulerReport {
  Partition lambda;
  int m = 0;
  int n = 0;
  bool ok = false;
  /// Lowest disagreeing degree, -1 when both sides agree everywhere.
  int first_mismatch = -1;
  /// (degree, complex side, homology side) for each degree 0..d_max.
  std::vector<std::tuple<int, Int, Int>> degrees;
  std::string message;
};

/// Degreewise Euler characteristic of the Kac-module complex against its
/// homology strands: for every d <= d_max,
///   sum_t (-1)^t C(mn, d-t) sum_{mu >= lambda, |mu|=t, l(mu)<=n}
///     schur_dim(mu,m) schur_dim(mu,n)
/// must equal sum_b (-1)^(|lambda|+b) [t^d] (strand b total).  The left
/// side uses only dimension counts and binomials, no pattern enumeration.
EulerReport euler_check(const Partition& lambda, int m, int n, int d_max);

/// Betti numbers of the ideal of maximal minors of a generic m x n matrix
/// (m >= n), all in row n: beta_i = C(m, n+i) C(n+i-1, i) for i = 0..m-n.
std::vector<Int> eagon_northcott_betti(int m, int n);

}  // namespace dyck
