#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "dyck/enumeration.hpp"
#include "dyck/grothendieck.hpp"
#include "dyck/json_io.hpp"
#include "dyck/oracle.hpp"
#include "dyck/partition.hpp"
#include "dyck/svg.hpp"
#include "dyck/syzygy.hpp"

namespace {

struct CacheOptions {
  std::string path;
  bool disabled = false;

  /// Resolution order: --no-cache wins, then --cache PATH, then the
  /// DYCK_SYZYGY_CACHE environment variable, else no disk cache.
  std::unique_ptr<dyck::SeriesCache> open() const {
    if (disabled) return nullptr;
    std::string p = path;
    if (p.empty())
      if (const char* env = std::getenv("DYCK_SYZYGY_CACHE")) p = env;
    if (p.empty()) return nullptr;
    return std::make_unique<dyck::SeriesCache>(p);
  }
};

std::string file_label(const dyck::Partition& p) {
  if (p.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += '-';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

void require_shape(int m, int n) {
  if (n < 1 || n > m)
    throw CLI::ValidationError("--n", "need 1 <= n <= m (got m = " + std::to_string(m) +
                                          ", n = " + std::to_string(n) + ")");
}

int run_kac(const std::string& lambda_text, int n, int size_bound, int jobs,
            const std::string& format) {
  dyck::Partition lambda = dyck::parse_partition(lambda_text);
  dyck::PatternFamily family = dyck::enumerate_kac_patterns(lambda, n, size_bound, jobs);
  std::map<dyck::Partition, dyck::Int> multiplicities;
  for (const auto& member : family.members) multiplicities[member.label] += 1;

  if (format == "json") {
    nlohmann::json j = dyck::to_json(family);
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [label, count] : multiplicities)
      mult[dyck::to_string(label)] = dyck::int_to_json(count);
    j["label_multiplicities"] = std::move(mult);
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  std::cout << family.members.size() << " patterns, " << multiplicities.size()
            << " distinct labels over " << dyck::to_string(lambda)
            << " with n = " << n << '\n';
  for (const auto& member : family.members)
    std::cout << dyck::to_string(member.label) << "  d=" << member.d << "  "
              << dyck::to_string(member.pattern) << '\n';
  return 0;
}

int run_syzygy(const std::string& lambda_text, int m, int n, int b_filter,
               int jobs, const std::string& format, const CacheOptions& cache_opt) {
  require_shape(m, n);
  dyck::Partition lambda = dyck::parse_partition(lambda_text);
  auto cache = cache_opt.open();
  dyck::HomologyClasses h = dyck::homology_classes(lambda, m, n, jobs, cache.get());
  if (b_filter >= 0)
    std::erase_if(h.strands, [&](const dyck::Strand& s) { return s.b != b_filter; });

  if (format == "json") {
    std::cout << dyck::to_json(h).dump(2) << '\n';
    return 0;
  }

  std::cout << "homology classes for " << dyck::to_string(lambda) << " in the "
            << m << " x " << n << " matrix ring\n";
  for (const dyck::Strand& strand : h.strands) {
    std::cout << "strand b=" << strand.b << ", homological row " << strand.row
              << ", " << strand.members.size() << " class(es)\n";
    for (const dyck::StrandMember& member : strand.members) {
      std::cout << "  " << dyck::to_string(member.label) << "  "
                << dyck::to_string(member.pattern) << '\n'
                << "    HS = " << member.series.to_string() << '\n';
    }
    std::cout << "  total: " << strand.total.to_string() << '\n';
  }
  return 0;
}

int run_betti(const std::string& lambda_text, int m, int n, int jobs,
              const std::string& format, const CacheOptions& cache_opt) {
  require_shape(m, n);
  dyck::Partition lambda = dyck::parse_partition(lambda_text);
  auto cache = cache_opt.open();
  dyck::BettiTable table = dyck::betti_table(lambda, m, n, jobs, cache.get());
  if (format == "json")
    std::cout << dyck::to_json(table).dump(2) << '\n';
  else
    std::cout << table.to_text();
  return 0;
}

int run_render(const std::string& lambda_text, int n, const std::string& family_kind,
               const std::string& out_dir, int size_bound, int jobs) {
  dyck::Partition lambda = dyck::parse_partition(lambda_text);
  dyck::PatternFamily family =
      family_kind == "kac" ? dyck::enumerate_kac_patterns(lambda, n, size_bound, jobs)
                           : dyck::enumerate_syzygy_patterns(lambda, n, jobs);
  std::filesystem::create_directories(out_dir);
  int index = 0;
  for (const auto& member : family.members) {
    std::ostringstream name;
    name << family_kind << '_' << std::setw(3) << std::setfill('0') << index
         << '_' << file_label(member.label) << ".svg";
    const std::filesystem::path path = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << dyck::render_pattern_svg(family.lambda, member.pattern);
    std::cout << path.string() << '\n';
    ++index;
  }
  std::cout << index << " file(s) written\n";
  return 0;
}

int run_check(const std::string& scope) {
  struct Point {
    bool ok = false;
    std::string name;
  };
  std::vector<Point> points;
  const auto want = [&](const char* s) { return scope == "all" || scope == s; };

  if (want("cube")) {
    for (int n = 1; n <= 8; ++n) {
      dyck::CubeComplexReport plain = dyck::cube_complex_check(n);
      points.push_back({plain.square_zero && plain.exact,
                        "cube complex n=" + std::to_string(n) + ": " + plain.message});
      dyck::CubeComplexReport scaled =
          dyck::cube_complex_check(n, 1000u + static_cast<unsigned>(n));
      points.push_back({scaled.square_zero && scaled.exact,
                        "cube complex n=" + std::to_string(n) + " rescaled: " + scaled.message});
    }
  }
  if (want("euler")) {
    const std::vector<dyck::Partition> cases = {
        dyck::Partition{},
        dyck::Partition{{1}},
        dyck::Partition{{2}},
        dyck::Partition{{1, 1}},
        dyck::Partition{{2, 1}},
        dyck::Partition{{3, 2}},
    };
    for (const dyck::Partition& lambda : cases) {
      dyck::EulerReport r = dyck::euler_check(lambda, 3, 3, lambda.size() + 9);
      points.push_back({r.ok, "euler alternating sums for " + dyck::to_string(lambda) +
                                  ", m=n=3: " + r.message});
    }
  }
  if (want("schur")) {
    int cases = 0;
    bool ok = true;
    for (int size = 0; size <= 6; ++size)
      for (const dyck::Partition& p : dyck::super_partitions({}, 6, size, true))
        for (int k = 0; k <= 5; ++k) {
          ok = ok && dyck::ssyt_count(p, k) == dyck::schur_dim(p, k);
          ++cases;
        }
    points.push_back({ok, "hook content dimension matches the tableau count (" +
                              std::to_string(cases) + " cases)"});
  }
  if (want("minors")) {
    const std::vector<std::pair<int, int>> shapes = {{2, 2}, {3, 2}, {4, 2}, {3, 3}};
    for (const auto& [m, n] : shapes) {
      dyck::Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
      dyck::BettiTable table = dyck::betti_table(column, m, n);
      std::vector<dyck::Int> expected = dyck::eagon_northcott_betti(m, n);
      std::map<int, dyck::Int> want_row;
      for (std::size_t i = 0; i < expected.size(); ++i)
        want_row[static_cast<int>(i)] = expected[i];
      const bool ok = table.rows.size() == 1 && table.rows.count(n) == 1 &&
                      table.rows.at(n) == want_row;
      points.push_back({ok, "maximal minors of a " + std::to_string(m) + " x " +
                                std::to_string(n) +
                                " matrix match the Eagon-Northcott numbers"});
    }
  }

  std::cout << "1.." << points.size() << '\n';
  bool all_ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::cout << (points[i].ok ? "ok " : "not ok ") << i + 1 << " - "
              << points[i].name << '\n';
    all_ok = all_ok && points[i].ok;
  }
  return all_ok ? 0 : 1;
}

int run_general(const std::vector<std::string>& lambda_texts, const std::string& format) {
  std::vector<dyck::Partition> lambdas;
  for (const std::string& text : lambda_texts)
    lambdas.push_back(dyck::parse_partition(text));
  std::vector<dyck::GeneralTerm> terms = dyck::general_ideal_terms(lambdas);

  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const dyck::GeneralTerm& term : terms)
      j.push_back({{"indices", term.indices},
                   {"merged", dyck::to_json(term.merged)},
                   {"sign", term.sign}});
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  for (const dyck::GeneralTerm& term : terms) {
    std::cout << (term.sign > 0 ? '+' : '-') << " [";
    for (std::size_t i = 0; i < term.indices.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << term.indices[i];
    }
    std::cout << "] " << dyck::to_string(term.merged) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck pattern calculus for GL-invariant ideals of the m x n matrix ring"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"text", "json"});

  std::string kac_lambda, kac_format = "text";
  int kac_n = 0, kac_bound = -1, kac_jobs = 1;
  CLI::App* kac = app.add_subcommand(
      "kac", "Composition factor patterns of a Kac module (bullet-free family)");
  kac->add_option("lambda", kac_lambda, "base partition, e.g. \"(4,3,1,1)\"")->required();
  kac->add_option("--n", kac_n, "row bound (matrix columns)")->required();
  kac->add_option("--size-bound", kac_bound, "pattern size cap; default n*n covers the whole family");
  kac->add_option("--jobs", kac_jobs, "worker threads");
  kac->add_option("--format", kac_format, "text or json")->check(format_check);

  std::string syz_lambda, syz_format = "text";
  int syz_m = 0, syz_n = 0, syz_b = -1, syz_jobs = 1;
  CacheOptions syz_cache;
  CLI::App* syzygy = app.add_subcommand(
      "syzygy", "Linear strand homology classes with Hilbert series");
  syzygy->add_option("lambda", syz_lambda, "base partition")->required();
  syzygy->add_option("--m", syz_m, "matrix rows")->required();
  syzygy->add_option("--n", syz_n, "matrix columns (at most m)")->required();
  syzygy->add_option("--b", syz_b, "only the strand with this bullet count");
  syzygy->add_option("--jobs", syz_jobs, "worker threads");
  syzygy->add_option("--format", syz_format, "text or json")->check(format_check);
  syzygy->add_option("--cache", syz_cache.path, "series cache file");
  syzygy->add_flag("--no-cache", syz_cache.disabled, "ignore any cache, including the environment default");

  std::string betti_lambda, betti_format = "text";
  int betti_m = 0, betti_n = 0, betti_jobs = 1;
  CacheOptions betti_cache;
  CLI::App* betti = app.add_subcommand("betti", "Graded Betti table of the invariant ideal");
  betti->add_option("lambda", betti_lambda, "base partition")->required();
  betti->add_option("--m", betti_m, "matrix rows")->required();
  betti->add_option("--n", betti_n, "matrix columns (at most m)")->required();
  betti->add_option("--jobs", betti_jobs, "worker threads");
  betti->add_option("--format", betti_format, "text or json")->check(format_check);
  betti->add_option("--cache", betti_cache.path, "series cache file");
  betti->add_flag("--no-cache", betti_cache.disabled, "ignore any cache, including the environment default");

  std::string render_lambda, render_family = "syzygy", render_out = ".";
  int render_n = 0, render_bound = -1, render_jobs = 1;
  CLI::App* render = app.add_subcommand("render", "Draw a pattern family as SVG files");
  render->add_option("lambda", render_lambda, "base partition")->required();
  render->add_option("--n", render_n, "row bound")->required();
  render->add_option("--family", render_family, "kac or syzygy")
      ->check(CLI::IsMember({"kac", "syzygy"}));
  render->add_option("--out", render_out, "output directory");
  render->add_option("--size-bound", render_bound, "pattern size cap (kac only)");
  render->add_option("--jobs", render_jobs, "worker threads");

  std::string check_scope = "all";
  bool check_all = false;
  CLI::App* check = app.add_subcommand("check", "Run the independent verification suites (TAP output)");
  check->add_option("--scope", check_scope, "all, cube, euler, schur or minors")
      ->check(CLI::IsMember({"all", "cube", "euler", "schur", "minors"}));
  check->add_flag("--all", check_all, "run every suite (the default)");

  std::vector<std::string> general_lambdas;
  std::string general_format = "text";
  CLI::App* general = app.add_subcommand(
      "general", "Inclusion-exclusion terms for a sum of invariant ideals");
  general->add_option("lambdas", general_lambdas, "pairwise incomparable partitions")
      ->required()
      ->expected(-1);
  general->add_option("--format", general_format, "text or json")->check(format_check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kac) return run_kac(kac_lambda, kac_n, kac_bound, kac_jobs, kac_format);
    if (*syzygy)
      return run_syzygy(syz_lambda, syz_m, syz_n, syz_b, syz_jobs, syz_format, syz_cache);
    if (*betti)
      return run_betti(betti_lambda, betti_m, betti_n, betti_jobs, betti_format, betti_cache);
    if (*render)
      return run_render(render_lambda, render_n, render_family, render_out,
                        render_bound, render_jobs);
    if (*check) return run_check(check_all ? "all" : check_scope);
    if (*general) return run_general(general_lambdas, general_format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
