#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "dyck/enumeration.hpp"
#include "dyck/partition.hpp"
#include "dyck/series.hpp"

namespace dyck {

/// Expansion of the class [K_lambda] in the basis of simple classes: each
/// pattern of the bullet-free family contributes its label once.
struct KacExpansion {
  Partition lambda;
  int n = 0;
  std::map<Partition, Int> multiplicities;
};

KacExpansion kac_class(const Partition& lambda, int n);

/// Hilbert series of the Kac module K_mu over an m x n matrix space:
/// dim S_mu(C^m) * dim S_mu(C^n) * t^|mu| * (1 + t)^(mn).
HilbertSeries hilbert_series_kac(const Partition& mu, int m, int n);

/// Append-only on-disk memo for simple module series, keyed by
/// (mu, m, n) and storing the widest truncation computed so far.
class SeriesCache {
 public:
  /// Loads existing records; throws std::runtime_error on a format mismatch.
  explicit SeriesCache(std::string path);
  std::optional<std::pair<int, HilbertSeries>> lookup(const Partition& mu,
                                                      int m, int n) const;
  void store(const Partition& mu, int m, int n, int trunc,
             const HilbertSeries& series);
  const std::string& path() const { return path_; }

 private:
  static std::string key(const Partition& mu, int m, int n);
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, std::pair<int, HilbertSeries>> entries_;
};

/// Hilbert series of the simple module L_mu, through degree `trunc`
/// (default |mu| + mn, beyond which the polynomial is complete).  Computed
/// by peeling Kac series along the bullet-free pattern families:
///   HS(L_mu) = HS(K_mu) - sum over nonempty patterns of HS(L_label).
/// Labels strictly grow, so the truncated recursion terminates.  Results
/// are memoized in process; `cache` adds an optional on-disk layer.
HilbertSeries hilbert_series_simple(const Partition& mu, int m, int n,
                                    int trunc = -1, SeriesCache* cache = nullptr);

/// Coefficients c_nu with [L_mu] = sum c_nu [K_nu], over labels of size at
/// most size_limit.  Inverts the unitriangular Kac expansion.
std::map<Partition, Int> simple_in_kac_basis(const Partition& mu, int n,
                                             int size_limit);

}  // namespace dyck
