#include <map>
#include <vector>

#include "doctest.h"

#include "dyck/enumeration.hpp"
#include "dyck/grothendieck.hpp"
#include "dyck/partition.hpp"
#include "dyck/series.hpp"

using dyck::HilbertSeries;
using dyck::Int;
using dyck::Partition;

namespace {

HilbertSeries series(int min_deg, std::vector<Int> coeffs) {
  return HilbertSeries(min_deg, std::move(coeffs));
}

}  // namespace

TEST_SUITE("grothendieck") {

TEST_CASE("kac module series") {
  CHECK(dyck::hilbert_series_kac({}, 1, 1) == series(0, {1, 1}));
  CHECK(dyck::hilbert_series_kac(Partition({1}), 1, 1) == series(1, {1, 1}));
  CHECK(dyck::hilbert_series_kac(Partition({1}), 2, 2) ==
        series(1, {4, 16, 24, 16, 4}));

  const auto k = dyck::hilbert_series_kac(Partition({3, 2}), 3, 3);
  CHECK(k.ord() == 5);
  CHECK(k.max_deg() == 14);
  CHECK(k.coeff(5) == 225);
  CHECK(k.coeff(6) == 225 * 9);
  CHECK(k.coeff(14) == 225);

  // The module only exists when the partition fits in n rows.
  CHECK_THROWS_AS(dyck::hilbert_series_kac(Partition({1, 1}), 2, 1),
                  std::invalid_argument);
}

TEST_CASE("simple module series, base cases") {
  CHECK(dyck::hilbert_series_simple({}, 1, 1) == series(0, {1}));
  CHECK(dyck::hilbert_series_simple({}, 3, 3) == series(0, {1}));
  CHECK(dyck::hilbert_series_simple(Partition({1}), 1, 1) == series(1, {1}));
  // The 2 x 2 determinant spans a principal ideal with a trivial resolution,
  // so its class is a single dimension in degree 2.
  CHECK(dyck::hilbert_series_simple(Partition({1, 1}), 2, 2) == series(2, {1}));
}

TEST_CASE("simple module series over the 3 x 3 matrix space") {
  CHECK(dyck::hilbert_series_simple(Partition({3, 2}), 3, 3) ==
        series(5, {225, 1132, 2673, 3582, 2785, 1188, 225}));
  CHECK(dyck::hilbert_series_simple(Partition({4, 4}), 3, 3) ==
        series(8, {225, 700, 828, 450, 100}));
  CHECK(dyck::hilbert_series_simple(Partition({3, 3, 3}), 3, 3) ==
        series(9, {1}));
  CHECK(dyck::hilbert_series_simple(Partition({4, 4, 3}), 3, 3) ==
        series(11, {9, 16, 9}));
  CHECK(dyck::hilbert_series_simple(Partition({5, 5, 5}), 3, 3) ==
        series(15, {1}));
}

TEST_CASE("simple series truncation is consistent") {
  const Partition mu({3, 2});
  const auto full = dyck::hilbert_series_simple(mu, 3, 3);
  for (int k : {4, 5, 7, 9, 20})
    CHECK(dyck::hilbert_series_simple(mu, 3, 3, k) == full.truncated(k));
  // The default truncation |mu| + mn already captures the whole polynomial.
  CHECK(dyck::hilbert_series_simple(mu, 3, 3, mu.size() + 9 + 5) == full);
  CHECK(full.max_deg() <= mu.size() + 9);
}

TEST_CASE("simple series ord and leading coefficient") {
  for (const Partition& mu : dyck::super_partitions({}, 3, 4)) {
    const auto s = dyck::hilbert_series_simple(mu, 3, 3);
    REQUIRE_FALSE(s.is_zero());
    CHECK(s.nonnegative());
    CHECK(s.ord() == mu.size());
    CHECK(s.coeff(mu.size()) ==
          dyck::schur_dim(mu, 3) * dyck::schur_dim(mu, 3));
  }
}

TEST_CASE("kac series is the sum of its simple constituents") {
  struct Case { Partition lambda; int m; int n; };
  const std::vector<Case> cases = {
      {Partition({1}), 2, 2}, {Partition({2, 1}), 3, 2}, {Partition({3, 2}), 3, 3}};
  for (const auto& c : cases) {
    const auto fam = dyck::enumerate_kac_patterns(c.lambda, c.n);
    HilbertSeries sum;
    for (const auto& mem : fam.members)
      sum += dyck::hilbert_series_simple(mem.label, c.m, c.n);
    CHECK(sum == dyck::hilbert_series_kac(c.lambda, c.m, c.n));
  }
}

TEST_CASE("kac class expansion") {
  const auto exp = dyck::kac_class(Partition({4, 3, 1, 1}), 4);
  CHECK(exp.multiplicities.size() == 19);
  for (const auto& [label, mult] : exp.multiplicities) {
    CHECK(mult == 1);
    CHECK(dyck::leq(Partition({4, 3, 1, 1}), label));
  }
  CHECK(exp.multiplicities.count(Partition({4, 3, 1, 1})) == 1);

  const auto tiny = dyck::kac_class({}, 1);
  CHECK(tiny.multiplicities.size() == 2);
}

TEST_CASE("simple class in the kac basis") {
  const Partition mu({3, 2});
  const int limit = 12;
  const auto coeffs = dyck::simple_in_kac_basis(mu, 3, limit);
  REQUIRE(coeffs.count(mu) == 1);
  CHECK(coeffs.at(mu) == 1);
  for (const auto& [nu, c] : coeffs) {
    CHECK(dyck::leq(mu, nu));
    CHECK(c != 0);
  }
  // Summing the Kac series with these coefficients recovers the simple
  // series through the size limit.
  HilbertSeries sum;
  for (const auto& [nu, c] : coeffs) {
    HilbertSeries k = dyck::hilbert_series_kac(nu, 3, 3);
    k *= c;
    sum += k;
  }
  CHECK(sum.truncated(limit) ==
        dyck::hilbert_series_simple(mu, 3, 3, limit));
}

TEST_CASE("invalid shapes are rejected") {
  CHECK_THROWS_AS(dyck::hilbert_series_simple(Partition({1, 1, 1}), 3, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(dyck::hilbert_series_kac(Partition({1}), 0, 1),
                  std::invalid_argument);
}

}  // TEST_SUITE
