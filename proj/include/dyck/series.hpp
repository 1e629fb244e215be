#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyck/numeric.hpp"

namespace dyck {

/// Polynomial in t with arbitrary precision integer coefficients, used for
/// graded dimension counts.  Kept normalized: the coefficient vector is
/// empty (the zero series) or has nonzero first and last entries.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(int min_deg, std::vector<Int> coeffs);
  static HilbertSeries monomial(Int coeff, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest degree with nonzero coefficient; 0 for the zero series.
  int ord() const { return min_deg_; }
  /// Highest degree with nonzero coefficient; -1 for the zero series.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int deg) const;
  /// Nonzero range as (degree, coefficient) pairs in increasing degree.
  std::vector<std::pair<int, Int>> terms() const;

  HilbertSeries& operator+=(const HilbertSeries& o);
  HilbertSeries& operator-=(const HilbertSeries& o);
  HilbertSeries& operator*=(const Int& c);
  friend HilbertSeries operator+(HilbertSeries a, const HilbertSeries& b) { return a += b; }
  friend HilbertSeries operator-(HilbertSeries a, const HilbertSeries& b) { return a -= b; }

  /// Drops all terms of degree greater than max_degree.
  HilbertSeries truncated(int max_degree) const;
  bool nonnegative() const;

  /// "225*t^5 + 1132*t^6"; unit coefficients print as "t^5", and the zero
  /// series prints as "0".
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  void normalize();
  int min_deg_ = 0;
  std::vector<Int> coeffs_;  // coeffs_[i] is the coefficient of t^(min_deg_ + i)
};

/// The polynomial (1 + t)^e.
HilbertSeries one_plus_t_power(int e);

}  // namespace dyck
