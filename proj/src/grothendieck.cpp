#include "dyck/grothendieck.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "dyck/errors.hpp"
#include "dyck/json_io.hpp"

namespace dyck {

namespace {

void require_weights(const Partition& mu, int m, int n, const char* who) {
  if (n < 1 || m < n)
    throw std::invalid_argument(std::string(who) + ": need 1 <= n <= m");
  if (mu.length() > n)
    throw std::invalid_argument(std::string(who) + ": " + to_string(mu) +
                                " has more than n = " + std::to_string(n) + " rows");
}

// Bullet-free families are reused across the inversion; the memo keeps the
// widest size bound computed so far per (lambda, n).
class FamilyMemo {
 public:
  std::shared_ptr<const PatternFamily> get(const Partition& lambda, int n, int bound) {
    const int eff = std::clamp(bound, 0, n * n);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find({lambda, n});
      if (it != map_.end() && it->second.first >= eff) return it->second.second;
    }
    auto fam = std::make_shared<const PatternFamily>(
        enumerate_kac_patterns(lambda, n, eff, 1));
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = map_[{lambda, n}];
    if (!slot.second || slot.first < eff) slot = {eff, fam};
    return slot.second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<Partition, int>,
           std::pair<int, std::shared_ptr<const PatternFamily>>>
      map_;
};

FamilyMemo& family_memo() {
  static FamilyMemo* memo = new FamilyMemo;
  return *memo;
}

class SeriesMemo {
 public:
  std::optional<HilbertSeries> lookup(const Partition& mu, int m, int n,
                                      int trunc, int complete_at) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({mu, m, n});
    if (it == map_.end()) return std::nullopt;
    const auto& [stored_trunc, series] = it->second;
    if (stored_trunc >= trunc || stored_trunc >= complete_at)
      return series.truncated(trunc);
    return std::nullopt;
  }

  void store(const Partition& mu, int m, int n, int trunc,
             const HilbertSeries& series) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({mu, m, n});
    if (it == map_.end() || it->second.first < trunc)
      map_[{mu, m, n}] = {trunc, series};
  }

  std::optional<std::pair<int, HilbertSeries>> stored(const Partition& mu,
                                                      int m, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({mu, m, n});
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<Partition, int, int>, std::pair<int, HilbertSeries>> map_;
};

SeriesMemo& series_memo() {
  static SeriesMemo* memo = new SeriesMemo;
  return *memo;
}

HilbertSeries simple_rec(const Partition& mu, int m, int n, int trunc,
                         SeriesCache* disk) {
  if (trunc < mu.size()) return {};
  const int complete_at = mu.size() + m * n;
  if (auto hit = series_memo().lookup(mu, m, n, trunc, complete_at)) {
    // Write through so the on-disk layer fills even on warm lookups.
    if (disk) {
      const auto full = series_memo().stored(mu, m, n);
      disk->store(mu, m, n, full->first, full->second);
    }
    return *hit;
  }
  if (disk) {
    if (auto hit = disk->lookup(mu, m, n)) {
      const auto& [stored_trunc, series] = *hit;
      if (stored_trunc >= trunc || stored_trunc >= complete_at) {
        series_memo().store(mu, m, n, stored_trunc, series);
        return series.truncated(trunc);
      }
    }
  }

  HilbertSeries s = hilbert_series_kac(mu, m, n).truncated(trunc);
  const auto fam = family_memo().get(mu, n, trunc - mu.size());
  for (const FamilyMember& mem : fam->members) {
    if (mem.d == 0) continue;  // the empty pattern carries the class itself
    if (mem.label.size() > trunc) continue;
    s -= simple_rec(mem.label, m, n, trunc, disk);
  }
  if (!s.nonnegative())
    throw NegativeCoefficient(
        "hilbert series of the simple module with highest weight " +
        to_string(mu) + " acquired a negative coefficient; the pattern " +
        "enumeration is inconsistent");
  series_memo().store(mu, m, n, trunc, s);
  if (disk) disk->store(mu, m, n, trunc, s);
  return s;
}

}  // namespace

KacExpansion kac_class(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("kac_class: n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("kac_class: " + to_string(lambda) +
                                " has more than n rows");
  const auto fam = family_memo().get(lambda, n, n * n);
  KacExpansion out{lambda, n, {}};
  for (const FamilyMember& m : fam->members) out.multiplicities[m.label] += 1;
  return out;
}

HilbertSeries hilbert_series_kac(const Partition& mu, int m, int n) {
  require_weights(mu, m, n, "hilbert_series_kac");
  const Int dims = schur_dim(mu, m) * schur_dim(mu, n);
  const int e = m * n;
  std::vector<Int> coeffs(static_cast<std::size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) coeffs[k] = dims * binomial(e, k);
  return HilbertSeries(mu.size(), std::move(coeffs));
}

HilbertSeries hilbert_series_simple(const Partition& mu, int m, int n,
                                    int trunc, SeriesCache* cache) {
  require_weights(mu, m, n, "hilbert_series_simple");
  const int complete_at = mu.size() + m * n;
  if (trunc < 0) trunc = complete_at;
  return simple_rec(mu, m, n, trunc, cache);
}

std::map<Partition, Int> simple_in_kac_basis(const Partition& mu, int n,
                                             int size_limit) {
  if (n < 1) throw std::invalid_argument("simple_in_kac_basis: n must be positive");
  if (mu.length() > n)
    throw std::invalid_argument("simple_in_kac_basis: " + to_string(mu) +
                                " has more than n rows");
  std::map<Partition, Int> coeffs;
  if (size_limit < mu.size()) return coeffs;
  // Expand [L_nu] = [K_nu] - sum [L_label] smallest label first, so every
  // label is processed once with its accumulated coefficient.
  auto size_lex = [](const Partition& a, const Partition& b) {
    return std::tuple(a.size(), a) < std::tuple(b.size(), b);
  };
  std::map<Partition, Int, decltype(size_lex)> pending(size_lex);
  pending[mu] = 1;
  while (!pending.empty()) {
    const auto [nu, c] = *pending.begin();
    pending.erase(pending.begin());
    if (c == 0) continue;
    coeffs[nu] += c;
    const auto fam = family_memo().get(nu, n, size_limit - nu.size());
    for (const FamilyMember& mem : fam->members) {
      if (mem.d == 0) continue;
      if (mem.label.size() > size_limit) continue;
      pending[mem.label] -= c;
    }
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  return coeffs;
}

namespace {
constexpr const char* kCacheFormat = "dyck-syzygy-series";
}

SeriesCache::SeriesCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in.good()) return;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!saw_header) {
      if (j.is_discarded() || j.value("format", "") != kCacheFormat ||
          j.value("version", 0) != 1)
        throw std::runtime_error("series cache " + path_ +
                                 " has an unrecognized format");
      saw_header = true;
      continue;
    }
    if (j.is_discarded()) continue;  // tolerate a truncated trailing record
    try {
      const std::string k = j.at("key").get<std::string>();
      const int trunc = j.at("N").get<int>();
      const HilbertSeries s = series_from_json(j.at("series"));
      auto it = entries_.find(k);
      if (it == entries_.end() || it->second.first < trunc) entries_[k] = {trunc, s};
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::string SeriesCache::key(const Partition& mu, int m, int n) {
  std::string s = "mu=";
  for (int i = 0; i < mu.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu.parts()[i]);
  }
  s += ";m=" + std::to_string(m) + ";n=" + std::to_string(n);
  return s;
}

std::optional<std::pair<int, HilbertSeries>> SeriesCache::lookup(
    const Partition& mu, int m, int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key(mu, m, n));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void SeriesCache::store(const Partition& mu, int m, int n, int trunc,
                        const HilbertSeries& series) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::string k = key(mu, m, n);
  auto it = entries_.find(k);
  if (it != entries_.end() && it->second.first >= trunc) return;
  const bool fresh = entries_.empty() && !std::ifstream(path_).good();
  entries_[k] = {trunc, series};
  std::ofstream out(path_, std::ios::app);
  if (!out.good())
    throw std::runtime_error("cannot write series cache " + path_);
  if (fresh) {
    nlohmann::json header{{"format", kCacheFormat}, {"version", 1}};
    out << header.dump() << "\n";
  }
  nlohmann::json rec{{"key", k}, {"N", trunc}, {"series", to_json(series)}};
  out << rec.dump() << "\n";
}

}  // namespace dyck
