// collabmap: batch front end. Exit 0 on success, 1 on data or validation
// errors, 2 on usage errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "collabmap/collab.hpp"
#include "collabmap/compare.hpp"
#include "collabmap/corpus.hpp"
#include "collabmap/error.hpp"
#include "collabmap/harness.hpp"
#include "collabmap/indicators.hpp"
#include "collabmap/report.hpp"
#include "collabmap/resolve.hpp"

namespace fs = std::filesystem;
using namespace collabmap;

namespace {

struct DataOptions {
  std::string data_dir;
  int year_min = YearWindow{}.min;
  int year_max = YearWindow{}.max;
  std::string home_country = std::string(collab::kDefaultHomeCountry);
  unsigned threads = 0;
  std::string out;

  YearWindow window() const {
    if (year_min > year_max) fail(ErrorCode::InvalidArgument, "--year-min is after --year-max");
    return {year_min, year_max};
  }
  indicators::AnalysisOptions analysis() const {
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    return {home_country, t};
  }
};

void add_data_options(CLI::App* cmd, DataOptions& o, bool with_out = true) {
  cmd->add_option("--data-dir", o.data_dir, "Directory holding the input files")->required();
  cmd->add_option("--year-min", o.year_min, "First year of the analysis window");
  cmd->add_option("--year-max", o.year_max, "Last year of the analysis window");
  cmd->add_option("--home-country", o.home_country, "ISO country code of domestic firms");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  if (with_out) cmd->add_option("--out", o.out, "Write to this file instead of stdout");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) fail(ErrorCode::MissingFile, "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"University-industry collaboration maps and researcher performance comparisons"};
  app.require_subcommand(1);

  DataOptions d;
  std::string format = "csv";
  std::string level = "sds", metric = "count", grouping, indicator, subset = "all";
  std::size_t top = 10;
  stats::CompareConfig cmp;
  double threshold = 0.9;
  harness::SynthConfig synth;
  std::string synth_out;

  auto* validate = app.add_subcommand("validate", "Load and check a data directory");
  add_data_options(validate, d);

  auto* map = app.add_subcommand("map", "Rank sectors by collaboration intensity");
  add_data_options(map, d);
  map->add_option("--level", level, "sds or uda");
  map->add_option("--metric", metric, "count, pct_all, pct_coauth or per_researcher");
  map->add_option("--top", top, "Number of sectors to keep");
  map->add_option("--format", format, "csv, json or md");

  auto* edges = app.add_subcommand("edges", "University-firm collaboration edge list");
  add_data_options(edges, d);

  auto* compare = app.add_subcommand("compare", "Compare an indicator between two groups");
  add_data_options(compare, d);
  compare->add_option("--grouping", grouping, "Which two groups to compare")->required();
  compare->add_option("--indicator", indicator, "ifpr, o, fss, ii_sds or ii_sci")->required();
  compare->add_option("--min-collab-pubs", cmp.min_collab_pubs,
                      "Minimum collaboration publications for a unit to enter the test");
  compare->add_option("--min-industry-pubs", cmp.min_industry_pubs,
                      "Minimum industry co-authored publications for a unit to enter the test");
  compare->add_option("--format", format, "csv, json or md");

  auto* multidisc = app.add_subcommand("multidisc", "Multidisciplinarity indices");
  add_data_options(multidisc, d);
  multidisc->add_option("--subset", subset, "all, collab or industry");
  multidisc->add_option("--format", format, "csv, json or md");

  auto* suggest = app.add_subcommand("suggest", "Alias candidates for unresolved address names");
  add_data_options(suggest, d);
  suggest->add_option("--threshold", threshold, "Minimum Jaro-Winkler score");

  std::string report_dir;
  auto* report = app.add_subcommand("report", "Write every table family into a directory");
  add_data_options(report, d, false);
  report->add_option("--out", report_dir, "Output directory")->required();
  report->add_option("--min-collab-pubs", cmp.min_collab_pubs);
  report->add_option("--min-industry-pubs", cmp.min_industry_pubs);
  report->add_option("--format", format, "csv, json or md");

  auto* gen = app.add_subcommand("synth", "Generate a synthetic data directory");
  gen->add_option("--seed", synth.seed, "PRNG seed");
  gen->add_option("--pubs", synth.n_pubs, "Number of publications");
  gen->add_option("--universities", synth.n_universities);
  gen->add_option("--firms", synth.n_firms);
  gen->add_option("--public-orgs", synth.n_public_orgs);
  gen->add_option("--researchers", synth.n_researchers);
  gen->add_option("--journals", synth.n_journals);
  gen->add_option("--industry-rate", synth.industry_rate);
  gen->add_option("--max-authors", synth.max_authors);
  gen->add_option("--out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      harness::generate(synth, synth_out);
      return 0;
    }

    // usage errors first, before touching the data
    const auto fmt = report::parse_format(format);
    const auto lvl = indicators::parse_level(level);
    const auto met = report::parse_metric(metric);
    const auto sel = collab::parse_selector(subset);
    stats::Grouping g{};
    stats::Indicator ind{};
    if (compare->parsed()) {
      g = stats::parse_grouping(grouping);
      ind = stats::parse_indicator(indicator);
    }
    if (top < 1) fail(ErrorCode::InvalidArgument, "--top must be >= 1");
    if (!(threshold > 0.0 && threshold <= 1.0)) fail(ErrorCode::InvalidArgument, "--threshold must be in (0, 1]");

    const Corpus corpus = load_corpus(d.data_dir, d.window());

    if (validate->parsed()) {
      auto rep = validate_corpus(corpus);
      emit(render_validation(corpus, rep), d.out);
      return rep.errors.empty() ? 0 : 1;
    }
    if (suggest->parsed()) {
      resolve::LegalSuffixes suffixes;
      std::vector<resolve::AliasRow> rows;
      const fs::path dir(d.data_dir);
      if (fs::is_regular_file(dir / "suffixes.txt")) suffixes = resolve::load_suffixes((dir / "suffixes.txt").string());
      if (fs::is_regular_file(dir / "aliases.csv")) rows = resolve::load_aliases((dir / "aliases.csv").string());
      auto aliases = resolve::AliasMap::build(corpus.organizations, rows, suffixes);
      std::vector<std::string> raw;
      for (const auto& u : corpus.unresolved_addresses) raw.push_back(u.raw_name);
      emit(resolve::suggestions_csv(resolve::suggest_aliases(raw, corpus.organizations, aliases, threshold)),
           d.out);
      return 0;
    }

    const indicators::Analysis analysis(corpus, d.analysis());

    if (map->parsed()) {
      auto table = report::build_rank_table(analysis, lvl, met, top);
      emit(report::render(table, fmt), d.out);
    } else if (edges->parsed()) {
      std::vector<collab::CollaborationProfile> profiles;
      for (const auto& f : analysis.facts()) profiles.push_back(f.profile);
      emit(collab::edges_csv(collab::extract_edges(profiles)), d.out);
    } else if (compare->parsed()) {
      emit(report::render(report::build_comparison_table(analysis, g, ind, cmp), fmt), d.out);
    } else if (multidisc->parsed()) {
      emit(report::render(report::build_multidisc_table(analysis, sel), fmt), d.out);
    } else if (report->parsed()) {
      fs::create_directories(report_dir);
      for (const auto& [name, content] : report::full_report(analysis, cmp, fmt)) {
        emit(content, (fs::path(report_dir) / name).string());
      }
    }
    return 0;
  } catch (const Error& e) {
    std::fprintf(stderr, "collabmap: %s\n", e.what());
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "collabmap: %s\n", e.what());
    return 1;
  }
}
