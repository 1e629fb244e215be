#include "dyck/enumeration.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace dyck {

namespace {

// Widest search region tried before giving up on stabilization.
constexpr int kRegionCap = 4096;

// Scan order: top row first, west to east within a row.  The first
// uncovered box of a skew shape in this order is always either a bullet or
// the start of a path, because a path reaches every cell from its west or
// north neighbour, both of which come earlier in the scan.
struct ScanLess {
  bool operator()(const Box& a, const Box& b) const {
    if (a.y != b.y) return a.y > b.y;
    return a.x < b.x;
  }
};

// Enumerates every way to split a fixed box set into disjoint Dyck paths
// and (optionally) bullets.  Feasibility of bullets and admissibility are
// the caller's final filters; only cheap necessary conditions prune here.
class SkewDecomposer {
 public:
  using Callback =
      std::function<void(const std::vector<std::vector<Box>>&, const std::vector<Box>&)>;

  SkewDecomposer(std::vector<Box> boxes, bool allow_bullets, int min_path_length)
      : boxes_(std::move(boxes)),
        allow_bullets_(allow_bullets),
        min_len_(min_path_length) {
    std::sort(boxes_.begin(), boxes_.end(), ScanLess{});
    state_.assign(boxes_.size(), kFree);
    int max_x = 0, max_y = 0;
    for (const Box& b : boxes_) {
      max_x = std::max(max_x, b.x);
      max_y = std::max(max_y, b.y);
    }
    grid_w_ = max_x + 2;
    grid_h_ = max_y + 2;
    grid_.assign(static_cast<std::size_t>(grid_w_) * grid_h_, -1);
    for (std::size_t i = 0; i < boxes_.size(); ++i)
      grid_[static_cast<std::size_t>(boxes_[i].y) * grid_w_ + boxes_[i].x] =
          static_cast<int>(i);
  }

  void run(const Callback& cb) {
    cb_ = &cb;
    recurse(0);
    cb_ = nullptr;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kBullet = -2;

  int find(const Box& b) const {
    if (b.x < 1 || b.y < 1 || b.x >= grid_w_ || b.y >= grid_h_) return -1;
    return grid_[static_cast<std::size_t>(b.y) * grid_w_ + b.x];
  }

  // The three neighbour directions that matter for pattern interaction.
  static std::array<Box, 3> fan(const Box& c) {
    return {Box{c.x, c.y + 1}, Box{c.x + 1, c.y}, Box{c.x + 1, c.y + 1}};
  }

  // A path box may not have a bullet among its N/E/NE neighbours.
  bool bullet_in_fan(const Box& c) const {
    for (const Box& nb : fan(c)) {
      const int idx = find(nb);
      if (idx >= 0 && state_[idx] == kBullet) return true;
    }
    return false;
  }

  // A bullet may not sit N/E/NE of any current path box: look S/W/SW.
  bool beside_path(const Box& b) const {
    for (const Box& nb :
         {Box{b.x, b.y - 1}, Box{b.x - 1, b.y}, Box{b.x - 1, b.y - 1}}) {
      const int idx = find(nb);
      if (idx >= 0 && state_[idx] >= 0) return true;
    }
    return false;
  }

  // True if some box of path qi sits in the fan of a box of p.
  bool touches(const std::vector<Box>& p, int qi) const {
    for (const Box& c : p)
      for (const Box& nb : fan(c)) {
        const int idx = find(nb);
        if (idx >= 0 && state_[idx] == qi) return true;
      }
    return false;
  }

  // True if every fan neighbour of p belongs to path pi or path qi.
  bool fan_covered(const std::vector<Box>& p, int pi, int qi) const {
    for (const Box& c : p)
      for (const Box& nb : fan(c)) {
        const int idx = find(nb);
        if (idx < 0 || (state_[idx] != pi && state_[idx] != qi)) return false;
      }
    return true;
  }

  // Pairwise interaction test of the just closed path against the earlier
  // ones.  Closed paths never gain boxes deeper in the branch, so a pair
  // that fails here fails in every completion and the closure can be
  // skipped; longer extensions of the same path are still explored.
  bool close_ok() const {
    const int qi = static_cast<int>(paths_.size()) - 1;
    const auto& q = paths_[qi];
    for (int pi = 0; pi < qi; ++pi) {
      const auto& p = paths_[pi];
      if (touches(p, qi) && !fan_covered(p, pi, qi)) return false;
      if (touches(q, pi) && !fan_covered(q, qi, pi)) return false;
    }
    return true;
  }

  // A bullet must end up west of some path start (so its east neighbour has
  // to be an as yet unassigned box) or south of some already closed path
  // end, reachable through a chain of bullets in its column.
  bool bullet_plausible(const Box& b) const {
    const int east = find({b.x + 1, b.y});
    if (east >= 0 && state_[east] == kFree) return true;
    Box q{b.x, b.y + 1};
    for (;;) {
      const int idx = find(q);
      if (idx < 0 || state_[idx] == kFree) return false;
      if (state_[idx] == kBullet) {
        q.y += 1;
        continue;
      }
      const auto& path = paths_[state_[idx]];
      return path.back() == q;
    }
  }

  void recurse(std::size_t pos) {
    while (pos < boxes_.size() && state_[pos] != kFree) ++pos;
    if (pos == boxes_.size()) {
      (*cb_)(paths_, bullets_);
      return;
    }
    const Box b = boxes_[pos];
    if (allow_bullets_ && !beside_path(b) && bullet_plausible(b)) {
      state_[pos] = kBullet;
      bullets_.push_back(b);
      recurse(pos + 1);
      bullets_.pop_back();
      state_[pos] = kFree;
    }
    paths_.emplace_back();
    extend(pos, pos, b.x + b.y);
    paths_.pop_back();
  }

  void extend(std::size_t start_pos, int cur_idx, int level) {
    const Box cur = boxes_[cur_idx];
    if (bullet_in_fan(cur)) return;
    state_[cur_idx] = static_cast<int>(paths_.size()) - 1;
    paths_.back().push_back(cur);
    if (cur.x + cur.y == level &&
        static_cast<int>(paths_.back().size()) >= min_len_ && close_ok())
      recurse(start_pos + 1);
    const int east = find({cur.x + 1, cur.y});
    if (east >= 0 && state_[east] == kFree) extend(start_pos, east, level);
    if (cur.x + cur.y - 1 >= level) {
      const int south = find({cur.x, cur.y - 1});
      if (south >= 0 && state_[south] == kFree) extend(start_pos, south, level);
    }
    paths_.back().pop_back();
    state_[cur_idx] = kFree;
  }

  std::vector<Box> boxes_;
  bool allow_bullets_;
  int min_len_;
  int grid_w_ = 2;
  int grid_h_ = 2;
  std::vector<int> grid_;
  std::vector<int> state_;
  std::vector<std::vector<Box>> paths_;
  std::vector<Box> bullets_;
  const Callback* cb_ = nullptr;
};

std::vector<Box> skew_boxes(const Partition& inner, const Partition& outer) {
  std::vector<Box> out;
  for (int y = 1; y <= outer.length(); ++y)
    for (int x = inner.part(y) + 1; x <= outer.part(y); ++x) out.push_back({x, y});
  return out;
}

void require_fits(const Partition& lambda, int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument(std::string(who) + ": " + to_string(lambda) +
                                " has more than n = " + std::to_string(n) + " rows");
}

bool member_less(const FamilyMember& a, const FamilyMember& b) {
  return std::tuple(a.b, a.label.size(), a.label, a.base, a.pattern) <
         std::tuple(b.b, b.label.size(), b.label, b.base, b.pattern);
}

// Decompositions of nu \ base filtered through the admissibility predicate.
std::vector<FamilyMember> members_over(const Partition& base, const Partition& nu,
                                       bool allow_bullets, int min_path_length) {
  std::vector<FamilyMember> out;
  std::vector<Box> boxes = skew_boxes(base, nu);
  // Without bullets every box rides a path of odd length >= 3, and no
  // multiset of such lengths sums to 1, 2, or 4.
  if (!allow_bullets && min_path_length == 3) {
    const std::size_t k = boxes.size();
    if (k == 1 || k == 2 || k == 4) return out;
  }
  SkewDecomposer dec(std::move(boxes), allow_bullets, min_path_length);
  dec.run([&](const std::vector<std::vector<Box>>& raw_paths,
              const std::vector<Box>& bullets) {
    std::vector<DyckPath> paths;
    paths.reserve(raw_paths.size());
    for (const auto& cells : raw_paths) {
      PathCheck pc = validate_dyck_path(cells);
      if (!pc) throw std::logic_error("decomposer produced a bad path: " + pc.error);
      paths.push_back(*pc.path);
    }
    PatternCheck check = make_pattern(std::move(paths), bullets);
    if (!check) return;  // some bullet is not coverable
    AdmissibilityReport rep = is_admissible(base, *check.pattern);
    if (!rep.ok) return;
    FamilyMember m;
    m.pattern = *check.pattern;
    m.label = nu;
    m.base = base;
    m.d = m.pattern.d();
    m.b = m.pattern.b();
    out.push_back(std::move(m));
  });
  return out;
}

std::vector<FamilyMember> collect_parallel(
    const std::vector<Partition>& candidates, int jobs,
    const std::function<std::vector<FamilyMember>(const Partition&)>& per) {
  std::vector<std::vector<FamilyMember>> slots(candidates.size());
  detail::parallel_for(candidates.size(), jobs,
                       [&](std::size_t i) { slots[i] = per(candidates[i]); });
  std::vector<FamilyMember> out;
  for (auto& s : slots)
    out.insert(out.end(), std::make_move_iterator(s.begin()),
               std::make_move_iterator(s.end()));
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

}  // namespace

std::vector<Partition> super_partitions(const Partition& base, int max_rows,
                                        int extra, bool exact, int max_col) {
  if (base.length() > max_rows)
    throw std::invalid_argument("super_partitions: base has too many rows");
  if (extra < 0) throw std::invalid_argument("super_partitions: negative extra");
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int y, int prev, int used) {
    if (y > max_rows) {
      if (!exact || used == extra) out.emplace_back(parts);
      return;
    }
    const int lo = base.part(y);
    const int hi = std::min(prev, lo + (extra - used));
    for (int v = lo; v <= hi; ++v) {
      parts.push_back(v);
      if (v == 0) {
        if (!exact || used == extra) out.emplace_back(parts);
      } else {
        rec(y + 1, v, used + (v - lo));
      }
      parts.pop_back();
    }
  };
  int first_hi = base.part(1) + extra;
  if (max_col >= 0) first_hi = std::min(first_hi, max_col);
  rec(1, first_hi, 0);
  return out;
}

PatternFamily enumerate_kac_patterns(const Partition& lambda, int n,
                                     int size_bound, int jobs) {
  require_fits(lambda, n, "enumerate_kac_patterns");
  const int bound = size_bound < 0 ? n * n : size_bound;
  // nu gains at most `bound` boxes, so the region never needs to adapt.
  const auto candidates = super_partitions(lambda, n, bound);
  PatternFamily fam{lambda, n, FamilyKind::Kac, {}};
  fam.members = collect_parallel(candidates, jobs, [&](const Partition& nu) {
    return members_over(lambda, nu, /*allow_bullets=*/false, /*min_path_length=*/1);
  });
  return fam;
}

PatternFamily enumerate_syzygy_patterns(const Partition& lambda, int n, int jobs) {
  require_fits(lambda, n, "enumerate_syzygy_patterns");
  PatternFamily fam{lambda, n, FamilyKind::Syzygy, {}};
  for (int width = 2 * n;; width *= 2) {
    const int max_col = lambda.part(1) + width;
    const auto candidates = super_partitions(
        lambda, n, n * max_col - lambda.size(), /*exact=*/false, max_col);
    fam.members = collect_parallel(candidates, jobs, [&](const Partition& nu) {
      return members_over(lambda, nu, /*allow_bullets=*/true, /*min_path_length=*/3);
    });
    const bool touched =
        std::any_of(fam.members.begin(), fam.members.end(),
                    [&](const FamilyMember& m) { return m.label.part(1) == max_col; });
    if (!touched) return fam;
    if (width > kRegionCap)
      throw RegionOverflow("enumerate_syzygy_patterns: the search region for " +
                           to_string(lambda) + " did not stabilize below width " +
                           std::to_string(kRegionCap));
  }
}

namespace {

// B-side corner filter: a corner of mu whose N/E/NE boxes all sit in a
// single path, or lie entirely outside the support, must belong to lambda.
bool corner_condition(const Partition& lambda, const Partition& mu,
                      const DyckPattern& paths) {
  for (const Box& c : mu.corners()) {
    const std::array<Box, 3> nb{Box{c.x, c.y + 1}, Box{c.x + 1, c.y},
                                Box{c.x + 1, c.y + 1}};
    int first = paths.path_index_of(nb[0]);
    bool one_path = first >= 0 && paths.path_index_of(nb[1]) == first &&
                    paths.path_index_of(nb[2]) == first;
    bool outside = paths.path_index_of(nb[0]) < 0 &&
                   paths.path_index_of(nb[1]) < 0 && paths.path_index_of(nb[2]) < 0;
    if ((one_path || outside) && !lambda.contains(c)) return false;
  }
  return true;
}

}  // namespace

PatternFamily enumerate_b_side(const Partition& lambda, int b, int n, int jobs) {
  require_fits(lambda, n, "enumerate_b_side");
  if (b < 0) throw std::invalid_argument("enumerate_b_side: negative b");
  PatternFamily fam{lambda, n, FamilyKind::BSide, {}};
  const auto mus = super_partitions(lambda, n, b, /*exact=*/true);
  std::vector<std::vector<FamilyMember>> slots(mus.size());
  detail::parallel_for(mus.size(), jobs, [&](std::size_t i) {
    const Partition& mu = mus[i];
    for (int width = 2 * n;; width *= 2) {
      const int max_col = mu.part(1) + width;
      std::vector<FamilyMember> found;
      for (const Partition& rho : super_partitions(
               mu, n, n * max_col - mu.size(), /*exact=*/false, max_col)) {
        for (FamilyMember& m :
             members_over(mu, rho, /*allow_bullets=*/false, /*min_path_length=*/3)) {
          if (!corner_condition(lambda, mu, m.pattern)) continue;
          m.b = b;
          found.push_back(std::move(m));
        }
      }
      const bool touched =
          std::any_of(found.begin(), found.end(), [&](const FamilyMember& m) {
            return m.label.part(1) == max_col;
          });
      if (!touched) {
        slots[i] = std::move(found);
        return;
      }
      if (width > kRegionCap)
        throw RegionOverflow("enumerate_b_side: the search region over " +
                             to_string(mu) + " did not stabilize below width " +
                             std::to_string(kRegionCap));
    }
  });
  for (auto& s : slots)
    fam.members.insert(fam.members.end(), std::make_move_iterator(s.begin()),
                       std::make_move_iterator(s.end()));
  std::sort(fam.members.begin(), fam.members.end(), member_less);
  return fam;
}

std::pair<Partition, DyckPattern> a_to_b(const Partition& lambda,
                                         const DyckPattern& pattern) {
  AdmissibilityReport rep = is_admissible(lambda, pattern);
  if (!rep.ok)
    throw std::invalid_argument("a_to_b: pattern is not admissible over " +
                                to_string(lambda) + ": " + rep.message);
  const auto mu = lambda_of_bullets(lambda, pattern);
  if (!mu)
    throw std::invalid_argument(
        "a_to_b: bullets do not close " + to_string(lambda) + " to a partition");
  PatternCheck paths = make_pattern(pattern.paths(), {});
  if (!paths) throw std::logic_error("a_to_b: " + paths.error);
  AdmissibilityReport over_mu = is_admissible(*mu, *paths.pattern);
  if (!over_mu.ok)
    throw std::logic_error("a_to_b: path system fails admissibility over " +
                           to_string(*mu) + ": " + over_mu.message);
  return {*mu, *paths.pattern};
}

DyckPattern b_to_a(const Partition& lambda, const Partition& mu,
                   const DyckPattern& paths) {
  if (!leq(lambda, mu))
    throw std::invalid_argument("b_to_a: " + to_string(lambda) +
                                " is not contained in " + to_string(mu));
  if (paths.b() != 0)
    throw std::invalid_argument("b_to_a: expected a bullet-free pattern");
  PatternCheck check = make_pattern(paths.paths(), skew_boxes(lambda, mu));
  if (!check)
    throw std::invalid_argument("b_to_a: boxes of mu minus lambda cannot ride " +
                                std::string("the paths as bullets: ") + check.error);
  AdmissibilityReport rep = is_admissible(lambda, *check.pattern);
  if (!rep.ok)
    throw std::invalid_argument("b_to_a: reconstructed pattern is not admissible: " +
                                rep.message);
  return *check.pattern;
}

}  // namespace dyck
