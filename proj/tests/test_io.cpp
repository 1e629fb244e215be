#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "dyck/grothendieck.hpp"
#include "dyck/json_io.hpp"
#include "dyck/partition.hpp"
#include "dyck/svg.hpp"
#include "dyck/syzygy.hpp"

using dyck::HilbertSeries;
using dyck::Int;
using dyck::Partition;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / (stem + ".jsonl");
}

struct FileGuard {
  std::filesystem::path path;
  ~FileGuard() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("integer serialization switches to strings past 64 bits") {
  CHECK(dyck::int_to_json(Int(0)) == json(0));
  CHECK(dyck::int_to_json(Int(-7)) == json(-7));
  const Int max64 = Int(INT64_MAX);
  CHECK(dyck::int_to_json(max64).is_number());
  const Int past = max64 + 1;
  CHECK(dyck::int_to_json(past).is_string());
  CHECK(dyck::int_to_json(past) == json("9223372036854775808"));

  for (const Int& v : {Int(0), Int(12), Int(-3), max64, past, Int("1" + std::string(40, '0'))})
    CHECK(dyck::int_from_json(dyck::int_to_json(v)) == v);
  CHECK(dyck::int_from_json(json(5)) == 5);
  CHECK(dyck::int_from_json(json("5")) == 5);
  CHECK_THROWS(dyck::int_from_json(json("fifty")));
  CHECK_THROWS(dyck::int_from_json(json::array()));
}

TEST_CASE("partition json round trip") {
  for (const Partition& p : {Partition{}, Partition({1}), Partition({4, 3, 1, 1})}) {
    const json j = dyck::to_json(p);
    CHECK(j.is_array());
    CHECK(dyck::partition_from_json(j) == p);
  }
  CHECK(dyck::to_json(Partition({4, 3, 1, 1})) == json({4, 3, 1, 1}));
  CHECK_THROWS(dyck::partition_from_json(json({1, 2})));
  CHECK_THROWS(dyck::partition_from_json(json("x")));
}

TEST_CASE("pattern json round trip") {
  const auto path = *dyck::validate_dyck_path({{3, 3}, {4, 3}, {4, 2}});
  const auto pat = *dyck::make_pattern({path}, {{1, 3}, {2, 3}});
  const json j = dyck::to_json(pat);
  CHECK(j.at("paths") == json({{{3, 3}, {4, 3}, {4, 2}}}));
  CHECK(j.at("bullets") == json({{1, 3}, {2, 3}}));
  CHECK(dyck::pattern_from_json(j) == pat);

  CHECK(dyck::pattern_from_json(dyck::to_json(dyck::DyckPattern{})).empty());

  // Broken path and uncoverable bullet both reject.
  CHECK_THROWS_AS(dyck::pattern_from_json(
                      json{{"paths", {{{1, 1}, {3, 1}}}}, {"bullets", json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dyck::pattern_from_json(
                      json{{"paths", json::array()}, {"bullets", {{1, 1}}}}),
                  std::invalid_argument);
}

TEST_CASE("series json round trip") {
  for (const HilbertSeries& s :
       {HilbertSeries{}, HilbertSeries(5, {225, 1132}), HilbertSeries(0, {1}),
        HilbertSeries(2, {Int("123456789012345678901234567890"), 1})}) {
    const json j = dyck::to_json(s);
    CHECK(dyck::series_from_json(j) == s);
  }
  const json j = dyck::to_json(HilbertSeries(5, {225, 1132}));
  CHECK(j.at("min_deg") == 5);
  CHECK(j.at("coeffs") == json({225, 1132}));
}

TEST_CASE("family and betti json shapes") {
  const auto fam = dyck::enumerate_syzygy_patterns(Partition({3, 2}), 3);
  const json jf = dyck::to_json(fam);
  CHECK(jf.at("kind") == "syzygy");
  CHECK(jf.at("n") == 3);
  CHECK(jf.at("base") == json({3, 2}));
  REQUIRE(jf.at("members").size() == 5);
  CHECK(jf.at("members")[0].contains("pattern"));
  CHECK(jf.at("members")[0].at("label") == json({3, 2}));
  CHECK_FALSE(jf.at("members")[0].contains("mu"));

  const auto bside = dyck::enumerate_b_side(Partition({3, 2}), 1, 3);
  const json jb = dyck::to_json(bside);
  CHECK(jb.at("kind") == "b_side");
  for (const auto& mem : jb.at("members")) CHECK(mem.at("mu") == json({3, 2, 1}));

  const json jh = dyck::to_json(dyck::homology_classes(Partition({3, 2}), 3, 3));
  REQUIRE(jh.at("strands").size() == 3);
  CHECK(jh.at("strands")[0].at("row") == 5);
  CHECK(jh.at("strands")[2].at("total").at("min_deg") == 15);

  const json jt = dyck::to_json(dyck::betti_table(Partition({3, 2}), 3, 3));
  CHECK(jt.at("rows").at("5").at("0") == 225);
  CHECK(jt.at("rows").at("7").at("8") == 1);
  CHECK_FALSE(jt.at("rows").contains("4"));
}

TEST_CASE("svg rendering") {
  const auto path = *dyck::validate_dyck_path({{3, 3}, {4, 3}, {4, 2}});
  const auto pat = *dyck::make_pattern({path}, {{1, 3}, {2, 3}});
  const std::string svg = dyck::render_pattern_svg(Partition({3, 2}), pat);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  auto count = [&](const std::string& needle) {
    int c = 0;
    for (std::size_t at = svg.find(needle); at != std::string::npos;
         at = svg.find(needle, at + 1))
      ++c;
    return c;
  };
  CHECK(count("<polyline") == 1);
  CHECK(count("<circle") == 2);
  CHECK(count("<polygon") == 1);

  // The empty pattern over the empty partition still renders a frame.
  const std::string blank = dyck::render_pattern_svg({}, {});
  CHECK(blank.rfind("<svg", 0) == 0);

  // A singleton path draws a degenerate polyline, not a gap.
  const auto dot = *dyck::make_pattern({*dyck::validate_dyck_path({{2, 1}})}, {});
  const std::string one = dyck::render_pattern_svg(Partition({1}), dot);
  CHECK(one.find("<polyline") != std::string::npos);
}

TEST_CASE("series cache stores and reloads") {
  FileGuard guard{temp_file("dyck_cache_roundtrip")};
  std::filesystem::remove(guard.path);
  const HilbertSeries s(5, {225, 1132});
  {
    dyck::SeriesCache cache(guard.path.string());
    CHECK_FALSE(cache.lookup(Partition({3, 2}), 3, 3).has_value());
    cache.store(Partition({3, 2}), 3, 3, 10, s);
    const auto hit = cache.lookup(Partition({3, 2}), 3, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 10);
    CHECK(hit->second == s);
    // The same partition under other sizes is a different key.
    CHECK_FALSE(cache.lookup(Partition({3, 2}), 3, 2).has_value());
  }
  {
    dyck::SeriesCache reloaded(guard.path.string());
    const auto hit = reloaded.lookup(Partition({3, 2}), 3, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 10);
    CHECK(hit->second == s);
  }
}

TEST_CASE("series cache keeps the widest truncation") {
  FileGuard guard{temp_file("dyck_cache_widest")};
  std::filesystem::remove(guard.path);
  dyck::SeriesCache cache(guard.path.string());
  cache.store(Partition({1}), 2, 2, 8, HilbertSeries(1, {2, 3}));
  cache.store(Partition({1}), 2, 2, 4, HilbertSeries(1, {2}));
  auto hit = cache.lookup(Partition({1}), 2, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 8);
  CHECK(hit->second == HilbertSeries(1, {2, 3}));

  dyck::SeriesCache reloaded(guard.path.string());
  hit = reloaded.lookup(Partition({1}), 2, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 8);
}

TEST_CASE("series cache survives a truncated trailing record") {
  FileGuard guard{temp_file("dyck_cache_truncated")};
  std::filesystem::remove(guard.path);
  {
    dyck::SeriesCache cache(guard.path.string());
    cache.store(Partition({2}), 2, 2, 6, HilbertSeries(2, {3}));
  }
  {
    std::ofstream out(guard.path, std::ios::app);
    out << "{\"key\": \"mu=9;m=";  // simulated crash mid write
  }
  dyck::SeriesCache reloaded(guard.path.string());
  const auto hit = reloaded.lookup(Partition({2}), 2, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->second == HilbertSeries(2, {3}));
}

TEST_CASE("series cache rejects foreign files") {
  FileGuard guard{temp_file("dyck_cache_foreign")};
  {
    std::ofstream out(guard.path);
    out << "{\"format\": \"something-else\", \"version\": 3}\n";
  }
  CHECK_THROWS_AS(dyck::SeriesCache(guard.path.string()), std::runtime_error);
}

TEST_CASE("series computed through the cache match uncached results") {
  FileGuard guard{temp_file("dyck_cache_consistency")};
  std::filesystem::remove(guard.path);
  dyck::SeriesCache cache(guard.path.string());
  const auto plain = dyck::betti_table(Partition({3, 2}), 3, 3);
  const auto cold = dyck::betti_table(Partition({3, 2}), 3, 3, 1, &cache);
  const auto warm = dyck::betti_table(Partition({3, 2}), 3, 3, 1, &cache);
  CHECK(cold.rows == plain.rows);
  CHECK(warm.rows == plain.rows);
  CHECK(dyck::SeriesCache(guard.path.string()).lookup(Partition({3, 2}), 3, 3).has_value());
}

}  // TEST_SUITE
