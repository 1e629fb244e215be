#include "dyck/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dyck/enumeration.hpp"
#include "dyck/syzygy.hpp"

namespace dyck {

Int ssyt_count(const Partition& p, int k) {
  if (p.size() > 8 || k > 6)
    throw std::invalid_argument("ssyt_count is capped at |p| <= 8, k <= 6");
  if (p.empty()) return 1;
  if (k < 1) return 0;

  const int rows = p.length();
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
  for (int y = 1; y <= rows; ++y)
    fill[static_cast<std::size_t>(y - 1)].resize(static_cast<std::size_t>(p.part(y)));

  Int count = 0;
  std::function<void(int, int)> place = [&](int y, int x) {
    if (y > rows) {
      ++count;
      return;
    }
    if (x > p.part(y)) {
      place(y + 1, 1);
      return;
    }
    int lo = 1;
    if (x > 1) lo = std::max(lo, fill[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 2)]);
    if (y > 1) lo = std::max(lo, fill[static_cast<std::size_t>(y - 2)][static_cast<std::size_t>(x - 1)] + 1);
    for (int v = lo; v <= k; ++v) {
      fill[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] = v;
      place(y, x + 1);
    }
  };
  place(1, 1);
  return count;
}

int integer_matrix_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

struct SparseEntry {
  int row = 0;
  Int coeff;
};

}  // namespace

CubeComplexReport cube_complex_check(int n, unsigned seed) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("cube_complex_check needs 1 <= n <= 12");

  std::vector<Int> weight(static_cast<std::size_t>(n + 1), Int(1));
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 9);
    for (int j = 1; j <= n; ++j) weight[static_cast<std::size_t>(j)] = dist(rng);
  }

  // Masks of each popcount, in increasing mask order, with index lookup.
  std::vector<std::vector<unsigned>> level(static_cast<std::size_t>(n + 1));
  std::vector<int> index_of(std::size_t{1} << n, -1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto& lvl = level[static_cast<std::size_t>(std::popcount(mask))];
    index_of[mask] = static_cast<int>(lvl.size());
    lvl.push_back(mask);
  }

  // Columns of d_i, indexed by the i-subset, as sparse (row, coeff) lists.
  std::vector<std::vector<std::vector<SparseEntry>>> diff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& cols = diff[static_cast<std::size_t>(i)];
    cols.resize(level[static_cast<std::size_t>(i)].size());
    for (std::size_t a = 0; a < cols.size(); ++a) {
      const unsigned mask = level[static_cast<std::size_t>(i)][a];
      for (int j = 1; j <= n; ++j) {
        const unsigned bit = 1u << (j - 1);
        if (mask & bit) continue;
        const int below = std::popcount(mask & (bit - 1));
        Int coeff = weight[static_cast<std::size_t>(j)];
        if (below % 2 == 1) coeff = -coeff;
        cols[a].push_back({index_of[mask | bit], std::move(coeff)});
      }
    }
  }

  CubeComplexReport report;
  report.n = n;
  report.square_zero = true;
  for (int i = 0; i + 1 < n && report.square_zero; ++i) {
    for (const auto& column : diff[static_cast<std::size_t>(i)]) {
      std::map<int, Int> image;
      for (const SparseEntry& e : column)
        for (const SparseEntry& f : diff[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(e.row)])
          image[f.row] += e.coeff * f.coeff;
      for (const auto& [row, value] : image)
        if (value != 0) {
          report.square_zero = false;
          report.message = "d.d nonzero between levels " + std::to_string(i) +
                           " and " + std::to_string(i + 2);
          break;
        }
      if (!report.square_zero) break;
    }
  }

  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Int>> dense(
        level[static_cast<std::size_t>(i + 1)].size(),
        std::vector<Int>(level[static_cast<std::size_t>(i)].size(), Int(0)));
    for (std::size_t a = 0; a < diff[static_cast<std::size_t>(i)].size(); ++a)
      for (const SparseEntry& e : diff[static_cast<std::size_t>(i)][a])
        dense[static_cast<std::size_t>(e.row)][a] = e.coeff;
    report.ranks.push_back(integer_matrix_rank(std::move(dense)));
  }

  report.exact = true;
  for (int i = 0; i <= n; ++i) {
    const int in = i > 0 ? report.ranks[static_cast<std::size_t>(i - 1)] : 0;
    const int out = i < n ? report.ranks[static_cast<std::size_t>(i)] : 0;
    const Int dim = binomial(n, i);
    if (Int(in) + Int(out) != dim) {
      report.exact = false;
      if (report.message.empty()) {
        const Int gap = dim - in - out;
        report.message = "cohomology at level " + std::to_string(i) +
                         " has dimension " + gap.str();
      }
      break;
    }
  }
  if (report.square_zero && report.exact)
    report.message = "d.d = 0 and the complex is exact";
  return report;
}

EulerReport euler_check(const Partition& lambda, int m, int n, int d_max) {
  if (d_max < lambda.size())
    throw std::invalid_argument("d_max must be at least |lambda|");

  EulerReport report;
  report.lambda = lambda;
  report.m = m;
  report.n = n;

  // Complex side: Cauchy dimension of the degree-t term, all mu >= lambda.
  std::vector<Int> term_dim(static_cast<std::size_t>(d_max + 1), Int(0));
  for (int t = lambda.size(); t <= d_max; ++t)
    for (const Partition& mu : super_partitions(lambda, n, t - lambda.size(), true))
      term_dim[static_cast<std::size_t>(t)] += schur_dim(mu, m) * schur_dim(mu, n);

  HomologyClasses h = homology_classes(lambda, m, n);

  report.ok = true;
  const int mn = m * n;
  for (int d = 0; d <= d_max; ++d) {
    Int complex_side = 0;
    for (int t = lambda.size(); t <= d; ++t) {
      Int contribution = term_dim[static_cast<std::size_t>(t)] * binomial(mn, d - t);
      complex_side += t % 2 == 0 ? contribution : -contribution;
    }
    Int homology_side = 0;
    for (const Strand& strand : h.strands) {
      Int coeff = strand.total.coeff(d);
      homology_side += (lambda.size() + strand.b) % 2 == 0 ? coeff : -coeff;
    }
    report.degrees.emplace_back(d, complex_side, homology_side);
    if (complex_side != homology_side && report.ok) {
      report.ok = false;
      report.first_mismatch = d;
      report.message = "degree " + std::to_string(d) + ": complex side " +
                       complex_side.str() + ", homology side " + homology_side.str();
    }
  }
  if (report.ok)
    report.message = "both sides agree in every degree up to " + std::to_string(d_max);
  return report;
}

std::vector<Int> eagon_northcott_betti(int m, int n) {
  if (n < 1 || m < n)
    throw std::invalid_argument("eagon_northcott_betti needs m >= n >= 1");
  std::vector<Int> betti;
  for (int i = 0; i <= m - n; ++i)
    betti.push_back(binomial(m, n + i) * binomial(n + i - 1, i));
  return betti;
}

}  // namespace dyck
