#pragma once

// Table assembly and rendering. Renders are byte-stable: fixed field order,
// fixed decimals (3 for percentages and indices, 4 for t, scientific for
// p < 1e-3), LF newlines. JSON keeps full double precision.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collabmap/compare.hpp"
#include "collabmap/indicators.hpp"

namespace collabmap::report {

enum class Metric { count, pct_all, pct_coauth, per_researcher };
enum class Format { csv, json, md };

Metric parse_metric(std::string_view s);  // throws UnknownMetric
Format parse_format(std::string_view s);  // throws InvalidArgument
std::string_view to_string(Metric m);

struct RankRow {
  std::size_t rank = 0;
  double value = 0.0;
  indicators::SectorIntensityRow sector;
};

struct RankTable {
  std::string title;
  indicators::Level level = indicators::Level::sds;
  Metric metric = Metric::count;
  std::size_t k = 0;
  std::vector<RankRow> rows;  // value descending, then sector name, then sector id
};

RankTable build_rank_table(const indicators::Analysis& analysis, indicators::Level level,
                           Metric metric, std::size_t k);
RankTable build_rank_table(const Corpus& corpus, indicators::Level level, Metric metric,
                           std::size_t k);

struct ComparisonTable {
  std::string title;
  stats::Comparison comparison;
};

ComparisonTable build_comparison_table(const indicators::Analysis& analysis,
                                       stats::Grouping grouping, stats::Indicator indicator,
                                       const stats::CompareConfig& config = {});

struct MultidiscTable {
  collab::Selector subset = collab::Selector::all;
  std::vector<indicators::MultidiscIndex> rows;
};

MultidiscTable build_multidisc_table(const indicators::Analysis& analysis, collab::Selector subset);

std::string render(const RankTable& table, Format format);
std::string render(const ComparisonTable& table, Format format);
std::string render(const MultidiscTable& table, Format format);

std::string format_fixed(double value, int decimals);
std::string format_p(double p);

/// Every table family (ranking tables, comparisons, multidisciplinarity
/// indices, edge list) as (file name, content) pairs in a fixed order.
std::vector<std::pair<std::string, std::string>> full_report(const indicators::Analysis& analysis,
                                                             const stats::CompareConfig& config,
                                                             Format format);

}  // namespace collabmap::report
