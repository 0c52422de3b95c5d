#include "collabmap/report.hpp"

#include <algorithm>

#include "collabmap/error.hpp"

namespace collabmap::report {

using indicators::Level;

Metric parse_metric(std::string_view s) {
  if (s == "count") return Metric::count;
  if (s == "pct_all") return Metric::pct_all;
  if (s == "pct_coauth") return Metric::pct_coauth;
  if (s == "per_researcher") return Metric::per_researcher;
  fail(ErrorCode::UnknownMetric, std::string(s));
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "md") return Format::md;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(s) + "'");
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::count: return "count";
    case Metric::pct_all: return "pct_all";
    case Metric::pct_coauth: return "pct_coauth";
    case Metric::per_researcher: return "per_researcher";
  }
  return "";
}

namespace {

std::string_view metric_title(Metric m) {
  switch (m) {
    case Metric::count: return "industry co-authored articles";
    case Metric::pct_all: return "industry co-authored share of all articles (%)";
    case Metric::pct_coauth: return "industry co-authored share of extramural-collaboration articles (%)";
    case Metric::per_researcher: return "industry co-authored articles per researcher";
  }
  return "";
}

std::optional<double> metric_value(const indicators::SectorIntensityRow& row, Metric m) {
  switch (m) {
    case Metric::count: return static_cast<double>(row.n_industry_coauth);
    case Metric::pct_all: return row.pct_of_all;
    case Metric::pct_coauth: return row.pct_of_coauth;
    case Metric::per_researcher: return row.per_researcher;
  }
  return std::nullopt;
}

}  // namespace

RankTable build_rank_table(const indicators::Analysis& analysis, Level level, Metric metric,
                           std::size_t k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  RankTable table;
  table.level = level;
  table.metric = metric;
  table.k = k;
  table.title = "Top " + std::to_string(k) + " " + (level == Level::sds ? "SDS" : "UDA") + " by " +
                std::string(metric_title(metric));
  for (auto& row : indicators::sector_intensity(analysis, level)) {
    auto v = metric_value(row, metric);
    if (!v) continue;
    table.rows.push_back({0, *v, std::move(row)});
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const RankRow& a, const RankRow& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.sector.sector_name != b.sector.sector_name) return a.sector.sector_name < b.sector.sector_name;
    return a.sector.sector_id < b.sector.sector_id;
  });
  if (table.rows.size() > k) table.rows.resize(k);
  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].rank = i + 1;
  return table;
}

RankTable build_rank_table(const Corpus& corpus, Level level, Metric metric, std::size_t k) {
  return build_rank_table(indicators::Analysis(corpus), level, metric, k);
}

ComparisonTable build_comparison_table(const indicators::Analysis& analysis,
                                       stats::Grouping grouping, stats::Indicator indicator,
                                       const stats::CompareConfig& config) {
  ComparisonTable t;
  t.comparison = stats::compare(analysis, grouping, indicator, config);
  const auto& c = t.comparison;
  std::string test = c.result.kind == stats::TestKind::paired
                         ? "paired t over " + c.unit_kind + " means"
                         : std::string("Welch t over researchers");
  t.title = c.a.label + " vs " + c.b.label + " (" + test + ")";
  return t;
}

MultidiscTable build_multidisc_table(const indicators::Analysis& analysis, collab::Selector subset) {
  return {subset, indicators::multidisc_table(analysis, subset)};
}

std::vector<std::pair<std::string, std::string>> full_report(const indicators::Analysis& analysis,
                                                             const stats::CompareConfig& config,
                                                             Format format) {
  const std::string ext = format == Format::csv ? ".csv" : format == Format::json ? ".json" : ".md";
  std::vector<std::pair<std::string, std::string>> out;

  const std::pair<const char*, Metric> uda_tables[] = {
      {"table1_uda_count", Metric::count},
      {"table1_uda_pct_all", Metric::pct_all},
      {"table1_uda_pct_coauth", Metric::pct_coauth}};
  for (const auto& [name, metric] : uda_tables) {
    out.emplace_back(name + ext, render(build_rank_table(analysis, Level::uda, metric, 4), format));
  }
  const std::pair<const char*, Metric> sds_tables[] = {
      {"table2_sds_count", Metric::count},
      {"table3_sds_pct_all", Metric::pct_all},
      {"table4_sds_pct_coauth", Metric::pct_coauth},
      {"table5_sds_per_researcher", Metric::per_researcher}};
  for (const auto& [name, metric] : sds_tables) {
    out.emplace_back(name + ext, render(build_rank_table(analysis, Level::sds, metric, 10), format));
  }

  using stats::Grouping;
  using stats::Indicator;
  const std::tuple<const char*, Grouping, Indicator> comparisons[] = {
      {"table6_sds_all_vs_collab_ifpr", Grouping::sds_all_vs_collab, Indicator::ifpr},
      {"table7_sds_all_vs_industry_ifpr", Grouping::sds_all_vs_industry, Indicator::ifpr},
      {"table8_researchers_o", Grouping::researchers_industry_vs_rest, Indicator::o},
      {"table8_researchers_fss", Grouping::researchers_industry_vs_rest, Indicator::fss},
      {"table9_multidisc_all_vs_industry_ii_sds", Grouping::multidisc_all_vs_industry, Indicator::ii_sds},
      {"table9_multidisc_all_vs_industry_ii_sci", Grouping::multidisc_all_vs_industry, Indicator::ii_sci},
      {"table10_multidisc_collab_vs_industry_ii_sds", Grouping::multidisc_collab_vs_industry,
       Indicator::ii_sds},
      {"table10_multidisc_collab_vs_industry_ii_sci", Grouping::multidisc_collab_vs_industry,
       Indicator::ii_sci}};
  for (const auto& [name, grouping, indicator] : comparisons) {
    std::string body;
    try {
      body = render(build_comparison_table(analysis, grouping, indicator, config), format);
    } catch (const Error& e) {
      body = std::string("unavailable: ") + e.what() + "\n";
    }
    out.emplace_back(name + ext, std::move(body));
  }

  for (auto subset : {collab::Selector::all, collab::Selector::extramural_collab,
                      collab::Selector::industry_coauthored}) {
    out.emplace_back("multidisc_" + std::string(collab::to_string(subset)) + ext,
                     render(build_multidisc_table(analysis, subset), format));
  }
  std::vector<collab::CollaborationProfile> profiles;
  profiles.reserve(analysis.facts().size());
  for (const auto& f : analysis.facts()) profiles.push_back(f.profile);
  out.emplace_back("edges.csv", collab::edges_csv(collab::extract_edges(profiles)));
  return out;
}

}  // namespace collabmap::report
