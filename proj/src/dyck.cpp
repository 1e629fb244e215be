#include "dyck/dyck.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <tuple>

namespace dyck {

bool DyckPath::contains(const Box& b) const {
  return std::find(cells_.begin(), cells_.end(), b) != cells_.end();
}

DyckPath::Corners DyckPath::corners() const {
  Corners out;
  for (std::size_t i = 1; i + 1 < cells_.size(); ++i) {
    const bool entered_east = cells_[i].x == cells_[i - 1].x + 1;
    const bool leaves_south = cells_[i + 1].y == cells_[i].y - 1;
    if (entered_east && leaves_south) out.outer.push_back(cells_[i]);
    if (!entered_east && !leaves_south) out.inner.push_back(cells_[i]);
  }
  return out;
}

PathCheck validate_dyck_path(std::vector<Box> cells) {
  auto fail = [](std::string msg) { return PathCheck{std::nullopt, std::move(msg)}; };
  if (cells.empty()) return fail("a path needs at least one box");
  for (const Box& c : cells)
    if (c.x < 1 || c.y < 1)
      return fail("box " + to_string(c) + " lies outside the positive quadrant");
  const int level = cells.front().x + cells.front().y;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const Box &p = cells[i - 1], &c = cells[i];
    const bool east = c.x == p.x + 1 && c.y == p.y;
    const bool south = c.x == p.x && c.y == p.y - 1;
    if (!east && !south)
      return fail("step from " + to_string(p) + " to " + to_string(c) +
                  " is not a unit east or south step");
  }
  if (cells.back().x + cells.back().y != level)
    return fail("endpoints " + to_string(cells.front()) + " and " +
                to_string(cells.back()) + " lie on different antidiagonals");
  for (const Box& c : cells)
    if (c.x + c.y < level)
      return fail("box " + to_string(c) + " dips below the level " +
                  std::to_string(level) + " antidiagonal");
  assert(cells.size() % 2 == 1);  // forced by the endpoint condition
  return PathCheck{DyckPath(std::move(cells), level), ""};
}

std::string to_string(const DyckPath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.cells().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.cells()[i]);
  }
  return s + "]";
}

std::vector<Box> DyckPattern::support() const {
  std::vector<Box> out = bullets_;
  for (const DyckPath& p : paths_)
    out.insert(out.end(), p.cells().begin(), p.cells().end());
  std::sort(out.begin(), out.end());
  return out;
}

int DyckPattern::d() const {
  int total = 0;
  for (const DyckPath& p : paths_) total += p.length();
  return total;
}

int DyckPattern::path_index_of(const Box& box) const {
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (paths_[i].contains(box)) return static_cast<int>(i);
  return -1;
}

PatternCheck make_pattern(std::vector<DyckPath> paths, std::vector<Box> bullets) {
  auto fail = [](std::string msg) { return PatternCheck{std::nullopt, std::move(msg)}; };
  std::sort(paths.begin(), paths.end(), [](const DyckPath& a, const DyckPath& b) {
    return std::tuple(a.start().y, a.start().x, a.length(), a.cells()) <
           std::tuple(b.start().y, b.start().x, b.length(), b.cells());
  });
  std::sort(bullets.begin(), bullets.end());
  for (const Box& b : bullets)
    if (b.x < 1 || b.y < 1)
      return fail("bullet " + to_string(b) + " lies outside the positive quadrant");

  std::vector<Box> seen = bullets;
  for (const DyckPath& p : paths)
    seen.insert(seen.end(), p.cells().begin(), p.cells().end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1])
      return fail("box " + to_string(seen[i]) + " is used twice");

  const auto covers = decompose_bullets(paths, bullets);
  for (const BulletCover& c : covers)
    if (c.options.empty())
      return fail("bullet " + to_string(c.bullet) +
                  " cannot be covered by any head or tail run");

  DyckPattern out;
  out.paths_ = std::move(paths);
  out.bullets_ = std::move(bullets);
  return PatternCheck{std::move(out), ""};
}

std::string to_string(const DyckPattern& p) {
  std::string s = "{paths=[";
  for (std::size_t i = 0; i < p.paths().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.paths()[i]);
  }
  s += "], bullets=[";
  for (std::size_t i = 0; i < p.bullets().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.bullets()[i]);
  }
  return s + "]}";
}

std::vector<BulletCover> decompose_bullets(const std::vector<DyckPath>& paths,
                                           const std::vector<Box>& bullets) {
  std::vector<Box> sorted = bullets;
  std::sort(sorted.begin(), sorted.end());
  auto is_bullet = [&](const Box& b) {
    return std::binary_search(sorted.begin(), sorted.end(), b);
  };
  std::vector<BulletCover> out;
  out.reserve(bullets.size());
  for (const Box& b : bullets) {
    BulletCover cover{b, {}};
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const Box s = paths[i].start();
      if (b.y == s.y && b.x < s.x) {
        bool run = true;
        for (int x = b.x + 1; x < s.x && run; ++x) run = is_bullet({x, b.y});
        if (run) cover.options.emplace_back(static_cast<int>(i), CoverKind::Head);
      }
      const Box e = paths[i].end();
      if (b.x == e.x && b.y < e.y) {
        bool run = true;
        for (int y = b.y + 1; y < e.y && run; ++y) run = is_bullet({b.x, y});
        if (run) cover.options.emplace_back(static_cast<int>(i), CoverKind::Tail);
      }
    }
    out.push_back(std::move(cover));
  }
  return out;
}

namespace {

std::optional<Partition> closure(const Partition& lambda,
                                 const std::vector<Box>& extra,
                                 Box* offending = nullptr) {
  for (const Box& b : extra)
    if (lambda.contains(b)) {
      if (offending) *offending = b;
      return std::nullopt;
    }
  std::vector<Box> all = lambda.boxes();
  all.insert(all.end(), extra.begin(), extra.end());
  return Partition::from_boxes(std::move(all), offending);
}

}  // namespace

std::optional<Partition> lambda_of(const Partition& lambda,
                                   const DyckPattern& pattern) {
  return closure(lambda, pattern.support());
}

std::optional<Partition> lambda_of_bullets(const Partition& lambda,
                                           const DyckPattern& pattern) {
  return closure(lambda, pattern.bullets());
}

AdmissibilityReport is_admissible(const Partition& lambda,
                                  const DyckPattern& pattern) {
  const std::vector<Box> supp = pattern.support();
  for (const Box& b : supp)
    if (lambda.contains(b))
      return {false, 1, b,
              "condition 1: box " + to_string(b) + " of the pattern lies in " +
                  to_string(lambda)};

  Box bad{};
  if (!closure(lambda, supp, &bad))
    return {false, 2, bad,
            "condition 2: the union with " + to_string(lambda) +
                " is not a partition near box " + to_string(bad)};

  const auto& paths = pattern.paths();
  auto neighbours = [](const Box& c) {
    return std::array<Box, 3>{Box{c.x, c.y + 1}, Box{c.x + 1, c.y},
                              Box{c.x + 1, c.y + 1}};
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (i == j) continue;
      bool premise = false;
      for (const Box& c : paths[i].cells()) {
        for (const Box& nb : neighbours(c))
          if (paths[j].contains(nb)) {
            premise = true;
            break;
          }
        if (premise) break;
      }
      if (!premise) continue;
      for (const Box& c : paths[i].cells())
        for (const Box& nb : neighbours(c))
          if (!paths[i].contains(nb) && !paths[j].contains(nb))
            return {false, 3, nb,
                    "condition 3: box " + to_string(nb) +
                        " lies N, E or NE of path " + std::to_string(i) +
                        " but outside paths " + std::to_string(i) + " and " +
                        std::to_string(j)};
    }
  }

  for (const DyckPath& p : paths)
    for (const Box& c : p.cells())
      for (const Box& nb : neighbours(c))
        if (std::binary_search(pattern.bullets().begin(),
                               pattern.bullets().end(), nb))
          return {false, 4, nb,
                  "condition 4: bullet " + to_string(nb) +
                      " lies N, E or NE of path box " + to_string(c)};

  return {true, 0, Box{}, ""};
}

}  // namespace dyck
