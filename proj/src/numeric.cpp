#include "dyck/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck {

Int binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a running binomial coefficient
  }
  return r;
}

}  // namespace dyck
