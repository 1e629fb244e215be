#include <vector>

#include "doctest.h"

#include "dyck/series.hpp"

using dyck::HilbertSeries;
using dyck::Int;

TEST_SUITE("series") {

TEST_CASE("normalization and accessors") {
  const HilbertSeries zero;
  CHECK(zero.is_zero());
  CHECK(zero.max_deg() == -1);
  CHECK(zero.coeff(0) == 0);
  CHECK(zero.terms().empty());

  const HilbertSeries s(2, {Int(0), Int(3), Int(0), Int(5), Int(0)});
  CHECK_FALSE(s.is_zero());
  CHECK(s.ord() == 3);
  CHECK(s.max_deg() == 5);
  CHECK(s.coeff(3) == 3);
  CHECK(s.coeff(4) == 0);
  CHECK(s.coeff(5) == 5);
  CHECK(s.coeff(2) == 0);
  CHECK(s.coeff(6) == 0);
  CHECK(s.terms() == std::vector<std::pair<int, Int>>{{3, Int(3)}, {5, Int(5)}});
}

TEST_CASE("monomials and arithmetic") {
  const HilbertSeries t5 = HilbertSeries::monomial(Int(2), 5);
  CHECK(t5.ord() == 5);
  CHECK(t5.coeff(5) == 2);
  CHECK(HilbertSeries::monomial(Int(0), 7).is_zero());

  HilbertSeries a = HilbertSeries::monomial(Int(1), 0);
  a += HilbertSeries::monomial(Int(4), 2);
  a -= HilbertSeries::monomial(Int(1), 0);
  CHECK(a == HilbertSeries::monomial(Int(4), 2));

  HilbertSeries b = HilbertSeries::monomial(Int(3), 1) + HilbertSeries::monomial(Int(-3), 1);
  CHECK(b.is_zero());

  HilbertSeries c = HilbertSeries::monomial(Int(2), 3);
  c *= Int(5);
  CHECK(c.coeff(3) == 10);
  c *= Int(0);
  CHECK(c.is_zero());
}

TEST_CASE("binomial expansion") {
  const HilbertSeries p = dyck::one_plus_t_power(4);
  CHECK(p.ord() == 0);
  CHECK(p.max_deg() == 4);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 4);
  CHECK(p.coeff(2) == 6);
  CHECK(p.coeff(3) == 4);
  CHECK(p.coeff(4) == 1);
  CHECK(dyck::one_plus_t_power(0) == HilbertSeries::monomial(Int(1), 0));
}

TEST_CASE("truncation") {
  const HilbertSeries p = dyck::one_plus_t_power(5);
  const HilbertSeries cut = p.truncated(2);
  CHECK(cut.max_deg() == 2);
  CHECK(cut.coeff(2) == 10);
  CHECK(cut.coeff(3) == 0);
  CHECK(p.truncated(-1).is_zero());
  CHECK(p.truncated(10) == p);
}

TEST_CASE("nonnegativity test") {
  CHECK(dyck::one_plus_t_power(3).nonnegative());
  CHECK(HilbertSeries().nonnegative());
  HilbertSeries s = HilbertSeries::monomial(Int(1), 1) - HilbertSeries::monomial(Int(2), 2);
  CHECK_FALSE(s.nonnegative());
}

TEST_CASE("text form") {
  CHECK(HilbertSeries().to_string() == "0");
  CHECK(HilbertSeries::monomial(Int(1), 0).to_string() == "1");
  CHECK(HilbertSeries::monomial(Int(7), 0).to_string() == "7");
  CHECK(HilbertSeries::monomial(Int(1), 9).to_string() == "t^9");
  CHECK(HilbertSeries::monomial(Int(225), 5).to_string() == "225*t^5");
  const HilbertSeries s = HilbertSeries::monomial(Int(225), 5) +
                          HilbertSeries::monomial(Int(1132), 6);
  CHECK(s.to_string() == "225*t^5 + 1132*t^6");
}

}  // TEST_SUITE
