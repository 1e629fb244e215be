#include "dyck/json_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace dyck {

namespace {

Box box_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("box must be a [x, y] pair");
  return Box{j[0].get<int>(), j[1].get<int>()};
}

const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Kac: return "kac";
    case FamilyKind::Syzygy: return "syzygy";
    case FamilyKind::BSide: return "b_side";
  }
  return "unknown";
}

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

nlohmann::json to_json(const Box& b) { return nlohmann::json::array({b.x, b.y}); }

nlohmann::json to_json(const Partition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

nlohmann::json to_json(const DyckPattern& p) {
  nlohmann::json paths = nlohmann::json::array();
  for (const DyckPath& path : p.paths()) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Box& c : path.cells()) cells.push_back(to_json(c));
    paths.push_back(std::move(cells));
  }
  nlohmann::json bullets = nlohmann::json::array();
  for (const Box& b : p.bullets()) bullets.push_back(to_json(b));
  return {{"paths", std::move(paths)}, {"bullets", std::move(bullets)}};
}

DyckPattern pattern_from_json(const nlohmann::json& j) {
  std::vector<DyckPath> paths;
  for (const auto& cells_json : j.at("paths")) {
    std::vector<Box> cells;
    for (const auto& c : cells_json) cells.push_back(box_from_json(c));
    PathCheck pc = validate_dyck_path(std::move(cells));
    if (!pc) throw std::invalid_argument("bad path in pattern: " + pc.error);
    paths.push_back(*pc.path);
  }
  std::vector<Box> bullets;
  for (const auto& b : j.at("bullets")) bullets.push_back(box_from_json(b));
  PatternCheck check = make_pattern(std::move(paths), std::move(bullets));
  if (!check) throw std::invalid_argument("bad pattern: " + check.error);
  return *check.pattern;
}

nlohmann::json to_json(const HilbertSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  if (!s.is_zero())
    for (int d = s.ord(); d <= s.max_deg(); ++d) coeffs.push_back(int_to_json(s.coeff(d)));
  return {{"min_deg", s.is_zero() ? 0 : s.ord()}, {"coeffs", std::move(coeffs)}};
}

HilbertSeries series_from_json(const nlohmann::json& j) {
  const int min_deg = j.at("min_deg").get<int>();
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
  return HilbertSeries(min_deg, std::move(coeffs));
}

nlohmann::json to_json(const PatternFamily& f) {
  nlohmann::json members = nlohmann::json::array();
  for (const FamilyMember& m : f.members) {
    nlohmann::json entry{{"pattern", to_json(m.pattern)},
                         {"label", to_json(m.label)},
                         {"d", m.d},
                         {"b", m.b}};
    if (f.kind == FamilyKind::BSide) entry["mu"] = to_json(m.base);
    members.push_back(std::move(entry));
  }
  return {{"base", to_json(f.lambda)},
          {"n", f.n},
          {"kind", kind_name(f.kind)},
          {"members", std::move(members)}};
}

nlohmann::json to_json(const HomologyClasses& h) {
  nlohmann::json strands = nlohmann::json::array();
  for (const Strand& s : h.strands) {
    nlohmann::json members = nlohmann::json::array();
    for (const StrandMember& m : s.members)
      members.push_back({{"pattern", to_json(m.pattern)},
                         {"label", to_json(m.label)},
                         {"series", to_json(m.series)}});
    strands.push_back({{"b", s.b},
                       {"row", s.row},
                       {"members", std::move(members)},
                       {"total", to_json(s.total)}});
  }
  return {{"lambda", to_json(h.lambda)},
          {"m", h.m},
          {"n", h.n},
          {"strands", std::move(strands)}};
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [r, cols] : t.rows) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [s, v] : cols) row[std::to_string(s)] = int_to_json(v);
    rows[std::to_string(r)] = std::move(row);
  }
  return {{"lambda", to_json(t.lambda)},
          {"m", t.m},
          {"n", t.n},
          {"rows", std::move(rows)}};
}

}  // namespace dyck
