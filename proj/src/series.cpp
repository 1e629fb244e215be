#include "dyck/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck {

HilbertSeries::HilbertSeries(int min_deg, std::vector<Int> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

HilbertSeries HilbertSeries::monomial(Int coeff, int deg) {
  return HilbertSeries(deg, {std::move(coeff)});
}

void HilbertSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_deg_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) min_deg_ = 0;
}

Int HilbertSeries::coeff(int deg) const {
  const int i = deg - min_deg_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::vector<std::pair<int, Int>> HilbertSeries::terms() const {
  std::vector<std::pair<int, Int>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(min_deg_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_deg_, o.min_deg_);
  const int hi = std::max(max_deg(), o.max_deg());
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
  for (int d = min_deg_; d <= max_deg(); ++d) out[d - lo] += coeffs_[d - min_deg_];
  for (int d = o.min_deg_; d <= o.max_deg(); ++d) out[d - lo] += o.coeffs_[d - o.min_deg_];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

HilbertSeries& HilbertSeries::operator-=(const HilbertSeries& o) {
  HilbertSeries neg = o;
  for (Int& c : neg.coeffs_) c = -c;
  return *this += neg;
}

HilbertSeries& HilbertSeries::operator*=(const Int& c) {
  if (c == 0) return *this = HilbertSeries();
  for (Int& v : coeffs_) v *= c;
  return *this;
}

HilbertSeries HilbertSeries::truncated(int max_degree) const {
  if (is_zero() || max_degree >= max_deg()) return *this;
  if (max_degree < min_deg_) return {};
  std::vector<Int> out(coeffs_.begin(),
                       coeffs_.begin() + (max_degree - min_deg_ + 1));
  return HilbertSeries(min_deg_, std::move(out));
}

bool HilbertSeries::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Int& c) { return c >= 0; });
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [deg, c] : terms()) {
    if (!s.empty()) s += " + ";
    if (deg == 0) {
      s += c.str();
    } else if (c == 1) {
      s += "t^" + std::to_string(deg);
    } else {
      s += c.str() + "*t^" + std::to_string(deg);
    }
  }
  return s;
}

HilbertSeries one_plus_t_power(int e) {
  if (e < 0) throw std::invalid_argument("one_plus_t_power: negative exponent");
  std::vector<Int> coeffs(static_cast<std::size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) coeffs[k] = binomial(e, k);
  return HilbertSeries(0, std::move(coeffs));
}

}  // namespace dyck
