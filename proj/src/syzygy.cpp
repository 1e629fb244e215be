#include "dyck/syzygy.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace dyck {

HomologyClasses homology_classes(const Partition& lambda, int m, int n,
                                 int jobs, SeriesCache* cache) {
  if (n < 1 || n > m)
    throw std::invalid_argument("need 1 <= n <= m, got n = " + std::to_string(n) +
                                ", m = " + std::to_string(m));
  if (lambda.length() > n)
    throw std::invalid_argument("partition " + to_string(lambda) + " has more than " +
                                std::to_string(n) + " rows");

  PatternFamily family = enumerate_syzygy_patterns(lambda, n, jobs);

  std::vector<HilbertSeries> series(family.members.size());
  detail::parallel_for(family.members.size(), jobs, [&](std::size_t i) {
    series[i] = hilbert_series_simple(family.members[i].label, m, n, -1, cache);
  });

  HomologyClasses out;
  out.lambda = lambda;
  out.m = m;
  out.n = n;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const FamilyMember& mem = family.members[i];
    if (out.strands.empty() || out.strands.back().b != mem.b) {
      Strand s;
      s.b = mem.b;
      s.row = lambda.size() + mem.b;
      out.strands.push_back(std::move(s));
    }
    Strand& strand = out.strands.back();
    strand.members.push_back({mem.pattern, mem.label, series[i]});
    strand.total += series[i];
  }
  return out;
}

BettiTable betti_from_homology(const HomologyClasses& h) {
  BettiTable table;
  table.lambda = h.lambda;
  table.m = h.m;
  table.n = h.n;
  for (const Strand& strand : h.strands)
    for (const auto& [deg, coeff] : strand.total.terms())
      table.rows[strand.row][deg - strand.row] = coeff;
  return table;
}

BettiTable betti_table(const Partition& lambda, int m, int n, int jobs,
                       SeriesCache* cache) {
  return betti_from_homology(homology_classes(lambda, m, n, jobs, cache));
}

std::string BettiTable::to_text() const {
  if (rows.empty()) return "(empty table)\n";
  const int row_lo = rows.begin()->first;
  const int row_hi = rows.rbegin()->first;
  int col_hi = 0;
  for (const auto& [r, cols] : rows)
    if (!cols.empty()) col_hi = std::max(col_hi, cols.rbegin()->first);

  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(row_hi - row_lo + 1),
      std::vector<std::string>(static_cast<std::size_t>(col_hi + 1), "."));
  std::vector<std::size_t> widths(static_cast<std::size_t>(col_hi + 1));
  for (int c = 0; c <= col_hi; ++c)
    widths[static_cast<std::size_t>(c)] = std::to_string(c).size();
  std::size_t label_width = 0;
  for (int r = row_lo; r <= row_hi; ++r)
    label_width = std::max(label_width, std::to_string(r).size() + 1);
  for (const auto& [r, cols] : rows)
    for (const auto& [c, v] : cols) {
      std::string& cell = cells[static_cast<std::size_t>(r - row_lo)]
                               [static_cast<std::size_t>(c)];
      cell = v.str();
      widths[static_cast<std::size_t>(c)] =
          std::max(widths[static_cast<std::size_t>(c)], cell.size());
    }

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (int c = 0; c <= col_hi; ++c)
    out << "  " << std::setw(static_cast<int>(widths[static_cast<std::size_t>(c)])) << c;
  out << '\n';
  for (int r = row_lo; r <= row_hi; ++r) {
    out << std::setw(static_cast<int>(label_width)) << (std::to_string(r) + ":");
    for (int c = 0; c <= col_hi; ++c)
      out << "  "
          << std::setw(static_cast<int>(widths[static_cast<std::size_t>(c)]))
          << cells[static_cast<std::size_t>(r - row_lo)][static_cast<std::size_t>(c)];
    out << '\n';
  }
  return out.str();
}

std::vector<GeneralTerm> general_ideal_terms(const std::vector<Partition>& lambdas) {
  const int k = static_cast<int>(lambdas.size());
  if (k == 0) throw std::invalid_argument("need at least one partition");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (leq(lambdas[i], lambdas[j]) || leq(lambdas[j], lambdas[i]))
        throw ComparablePair(i, j,
                             "partitions " + to_string(lambdas[i]) + " and " +
                                 to_string(lambdas[j]) + " are comparable");
  if (k > 20)
    throw std::invalid_argument("inclusion-exclusion over " + std::to_string(k) +
                                " ideals needs 2^" + std::to_string(k) + " terms");

  std::vector<GeneralTerm> terms;
  for (int size = 1; size <= k; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      GeneralTerm term;
      term.indices = idx;
      for (int i : idx) term.merged = union_of(term.merged, lambdas[static_cast<std::size_t>(i)]);
      term.sign = size % 2 == 1 ? 1 : -1;
      terms.push_back(std::move(term));
      int p = size - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == k - size + p) --p;
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < size; ++q)
        idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return terms;
}

}  // namespace dyck
