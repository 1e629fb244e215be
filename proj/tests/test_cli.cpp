#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const char* exe = std::getenv("DYCK_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "DYCK_CLI must point at the binary");
  const std::string cmd = std::string("\"") + exe + "\" " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::filesystem::path temp_dir(const std::string& stem) {
  auto p = std::filesystem::temp_directory_path() / stem;
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("kac text output") {
  const auto r = run("kac \"(4,3,1,1)\" --n 4");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("19 patterns, 19 distinct labels over (4,3,1,1) with n = 4\n", 0) == 0);
  CHECK(r.out.find("(4,3,1,1)  d=0  {paths=[], bullets=[]}\n") != std::string::npos);
  CHECK(r.out.find("(5,5,1,1)") != std::string::npos);
}

TEST_CASE("kac json output") {
  const auto r = run("kac \"(4,3,1,1)\" --n 4 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("kind") == "kac");
  CHECK(j.at("base") == json({4, 3, 1, 1}));
  CHECK(j.at("members").size() == 19);
  CHECK(j.at("label_multiplicities").size() == 19);
  for (const auto& [label, count] : j.at("label_multiplicities").items())
    CHECK(count == 1);
}

TEST_CASE("syzygy text output") {
  const auto r = run("syzygy \"(3,2)\" --m 3 --n 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("homology classes for (3,2) in the 3 x 3 matrix ring\n", 0) == 0);
  CHECK(r.out.find("strand b=0, homological row 5, 2 class(es)\n") != std::string::npos);
  CHECK(r.out.find("strand b=1, homological row 6, 2 class(es)\n") != std::string::npos);
  CHECK(r.out.find("strand b=2, homological row 7, 1 class(es)\n") != std::string::npos);
  CHECK(r.out.find("    HS = 225*t^5 + 1132*t^6 + 2673*t^7 + 3582*t^8 + 2785*t^9 "
                   "+ 1188*t^10 + 225*t^11\n") != std::string::npos);
  CHECK(r.out.find("    HS = t^9\n") != std::string::npos);
  CHECK(r.out.find("    HS = 9*t^11 + 16*t^12 + 9*t^13\n") != std::string::npos);
  CHECK(r.out.find("  total: 225*t^5 + 1132*t^6 + 2673*t^7 + 3807*t^8 + 3485*t^9 "
                   "+ 2016*t^10 + 675*t^11 + 100*t^12\n") != std::string::npos);
  CHECK(r.out.find("  total: t^15\n") != std::string::npos);
}

TEST_CASE("syzygy strand filter") {
  const auto r = run("syzygy \"(3,2)\" --m 3 --n 3 --b 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("strand b=2") != std::string::npos);
  CHECK(r.out.find("strand b=0") == std::string::npos);
  CHECK(r.out.find("strand b=1") == std::string::npos);
}

TEST_CASE("syzygy json output") {
  const auto r = run("syzygy \"(3,2)\" --m 3 --n 3 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("lambda") == json({3, 2}));
  CHECK(j.at("m") == 3);
  REQUIRE(j.at("strands").size() == 3);
  CHECK(j.at("strands")[2].at("total") ==
        json{{"min_deg", 15}, {"coeffs", {1}}});
}

TEST_CASE("betti text output matches the golden tables") {
  const auto r = run("betti \"(3,2)\" --m 3 --n 3");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "      0     1     2     3     4     5    6    7  8\n"
        "5:  225  1132  2673  3807  3485  2016  675  100  .\n"
        "6:    .     .     .     1     .     9   16    9  .\n"
        "7:    .     .     .     .     .     .    .    .  1\n");

  CHECK(run("betti \"()\" --m 3 --n 3").out == "    0\n0:  1\n");
  CHECK(run("betti \"(1,1)\" --m 3 --n 2").out == "    0  1\n2:  3  2\n");
  CHECK(run("betti \"(1,1)\" --m 4 --n 2").out == "    0  1  2\n2:  6  8  3\n");
}

TEST_CASE("betti json output") {
  const auto r = run("betti \"(3,2)\" --m 3 --n 3 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("rows").at("5").at("0") == 225);
  CHECK(j.at("rows").at("6").at("6") == 16);
  CHECK(j.at("rows").at("7").at("8") == 1);
}

TEST_CASE("check emits a passing TAP report") {
  const auto r = run("check");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("1..27\n", 0) == 0);
  CHECK(r.out.find("not ok") == std::string::npos);
  CHECK(r.out.find("ok 27 - ") != std::string::npos);

  const auto cube = run("check --scope cube");
  CHECK(cube.status == 0);
  CHECK(cube.out.rfind("1..16\n", 0) == 0);
}

TEST_CASE("general prints signed inclusion-exclusion terms") {
  const auto r = run("general \"(2)\" \"(1,1)\"");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "+ [0] (2)\n"
        "+ [1] (1,1)\n"
        "- [0,1] (2,1)\n");

  const auto j = json::parse(run("general \"(2)\" \"(1,1)\" --format json").out);
  REQUIRE(j.size() == 3);
  CHECK(j[2].at("indices") == json({0, 1}));
  CHECK(j[2].at("sign") == -1);
  CHECK(j[2].at("merged") == json({2, 1}));

  const auto bad = run("general \"(2)\" \"(2,1)\"", /*merge_stderr=*/true);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("error;") == std::string::npos);
  CHECK(bad.out.find("error:") != std::string::npos);
  CHECK(bad.out.find("comparable") != std::string::npos);
}

TEST_CASE("render writes one svg per pattern") {
  const auto dir = temp_dir("dyck_cli_render");
  const auto r = run("render \"(3,2)\" --n 3 --out \"" + dir.string() + "\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("5 file(s) written\n") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "syzygy_000_3-2.svg"));
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".svg") ++count;
  CHECK(count == 5);

  const auto kac = run("render \"(1)\" --n 2 --family kac --out \"" + dir.string() + "\"");
  CHECK(kac.status == 0);
  CHECK(kac.out.find("5 file(s) written\n") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "kac_000_1.svg"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("output does not depend on the thread count") {
  for (const std::string base :
       {std::string("betti \"(3,2)\" --m 3 --n 3"),
        std::string("syzygy \"(2,2,1)\" --m 3 --n 3 --format json"),
        std::string("kac \"(4,3,1,1)\" --n 4 --format json")}) {
    const auto serial = run(base + " --jobs 1");
    const auto parallel = run(base + " --jobs 4");
    CHECK(serial.status == 0);
    CHECK(parallel.status == 0);
    CHECK(serial.out == parallel.out);
  }
}

TEST_CASE("cache options do not change the output") {
  const auto dir = temp_dir("dyck_cli_cache");
  std::filesystem::create_directories(dir);
  const auto cache_file = dir / "series.jsonl";
  const std::string base = "betti \"(3,2)\" --m 3 --n 3";
  const auto plain = run(base + " --no-cache");
  const auto cold = run(base + " --cache \"" + cache_file.string() + "\"");
  const auto warm = run(base + " --cache \"" + cache_file.string() + "\"");
  CHECK(plain.status == 0);
  CHECK(cold.status == 0);
  CHECK(warm.status == 0);
  CHECK(cold.out == plain.out);
  CHECK(warm.out == plain.out);
  CHECK(std::filesystem::exists(cache_file));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bad invocations fail with diagnostics") {
  CHECK(run("").status != 0);
  CHECK(run("frobnicate", true).status != 0);

  const auto bad_partition = run("betti \"4,3\" --m 3 --n 3", true);
  CHECK(bad_partition.status == 1);
  CHECK(bad_partition.out.find("error:") != std::string::npos);
  CHECK(bad_partition.out.find("cannot parse partition") != std::string::npos);

  const auto bad_shape = run("betti \"(1)\" --m 2 --n 3", true);
  CHECK(bad_shape.status != 0);

  const auto too_long = run("betti \"(1,1,1)\" --m 3 --n 2", true);
  CHECK(too_long.status == 1);
  CHECK(too_long.out.find("error:") != std::string::npos);
}

}  // TEST_SUITE
