#include "dyck/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dyck {

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + ")";
}

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Partition> Partition::from_boxes(std::vector<Box> boxes,
                                               Box* offending) {
  std::sort(boxes.begin(), boxes.end());
  auto present = [&](const Box& b) {
    return std::binary_search(boxes.begin(), boxes.end(), b);
  };
  int max_row = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    bool bad = b.x < 1 || b.y < 1 || (i > 0 && boxes[i - 1] == b) ||
               (b.x > 1 && !present({b.x - 1, b.y})) ||
               (b.y > 1 && !present({b.x, b.y - 1}));
    if (bad) {
      if (offending) *offending = b;
      return std::nullopt;
    }
    max_row = std::max(max_row, b.y);
  }
  std::vector<int> parts(max_row, 0);
  for (const Box& b : boxes) parts[b.y - 1] += 1;
  return Partition(std::move(parts));
}

int Partition::part(int y) const {
  if (y < 1) throw std::out_of_range("partition rows are 1-based");
  return y <= length() ? parts_[y - 1] : 0;
}

bool Partition::contains(const Box& b) const {
  return b.x >= 1 && b.y >= 1 && b.y <= length() && b.x <= parts_[b.y - 1];
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int y = 1; y <= length(); ++y)
    for (int x = 1; x <= parts_[y - 1]; ++x) out.push_back({x, y});
  return out;
}

std::vector<Box> Partition::corners() const {
  std::vector<Box> out;
  for (int y = 1; y <= length(); ++y)
    if (part(y) > part(y + 1)) out.push_back({part(y), y});
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int x = 0; x < p; ++x) conj[x] += 1;
  return Partition(std::move(conj));
}

bool leq(const Partition& a, const Partition& b) {
  for (int y = 1; y <= a.length(); ++y)
    if (a.part(y) > b.part(y)) return false;
  return true;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.length(), b.length()));
  for (int y = 1; y <= static_cast<int>(parts.size()); ++y)
    parts[y - 1] = std::max(a.part(y), b.part(y));
  return Partition(std::move(parts));
}

Int schur_dim(const Partition& p, int k) {
  if (k < 0) throw std::invalid_argument("schur_dim: k must be nonnegative");
  if (p.length() > k) return 0;
  const Partition conj = p.conjugate();
  Rat acc = 1;
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      const int content = j - i;
      const int hook = (p.part(i) - j) + (conj.part(j) - i) + 1;
      acc *= Rat(k + content, hook);
    }
  }
  if (denominator(acc) != 1)
    throw std::logic_error("schur_dim: hook content product is not integral");
  return numerator(acc);
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("cannot parse partition '" + text + "': " + why);
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected a number at position " + std::to_string(start));
    long v = std::stol(text.substr(start, i - start));
    if (v > 1000000) fail("part too large");
    return static_cast<int>(v);
  };

  skip_ws();
  if (i >= text.size() || text[i] != '(') fail("expected '('");
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    for (;;) {
      int value = read_int();
      int repeat = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        repeat = read_int();
        skip_ws();
      }
      if (repeat < 1) fail("exponent must be positive");
      parts.insert(parts.end(), repeat, value);
      if (i >= text.size()) fail("missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] != ',') fail(std::string("unexpected character '") + text[i] + "'");
      ++i;
    }
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return {};  // unreachable
}

}  // namespace dyck
