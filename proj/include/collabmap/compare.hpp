#pragma once

// Assembles the two aligned samples behind each comparison table and runs the
// matching test: paired t over per-unit means (SDS or SCI category), or Welch
// over per-researcher percentiles.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "collabmap/indicators.hpp"
#include "collabmap/stats.hpp"

namespace collabmap::stats {

enum class Grouping {
  sds_all_vs_collab,             // IF_pr, all vs extramural collaboration
  sds_all_vs_industry,           // IF_pr, all vs industry co-authored
  researchers_industry_vs_rest,  // O_pr / FSS_pr, Welch
  multidisc_all_vs_industry,     // Ii_SDS / Ii_SCI, all vs industry
  multidisc_collab_vs_industry,  // Ii_SDS / Ii_SCI, extramural vs industry
};

enum class Indicator { ifpr, o, fss, ii_sds, ii_sci };

Grouping parse_grouping(std::string_view s);
Indicator parse_indicator(std::string_view s);
std::string_view to_string(Grouping g);
std::string_view to_string(Indicator i);

struct CompareConfig {
  std::size_t min_collab_pubs = 7;    // floor for sds_all_vs_collab
  std::size_t min_industry_pubs = 1;  // floor for the industry groupings
};

struct Comparison {
  Grouping grouping = Grouping::sds_all_vs_collab;
  Indicator indicator = Indicator::ifpr;
  Sample a;
  Sample b;
  TestResult result;
  std::string unit_kind;           // "SDS", "SCI category" or "researcher"
  std::vector<std::string> units;  // aligned with a.values / b.values for paired tests
  std::size_t candidate_units = 0;
  std::size_t excluded_units = 0;
  std::size_t threshold = 0;
  std::string exclusion_note;
};

/// Throws UnknownIndicator for an indicator the grouping does not define,
/// InsufficientSectors when fewer than two units survive the exclusions, and
/// whatever the underlying test throws.
Comparison compare(const indicators::Analysis& analysis, Grouping grouping, Indicator indicator,
                   const CompareConfig& config = {});
Comparison compare(const Corpus& corpus, Grouping grouping, Indicator indicator,
                   const CompareConfig& config = {});

}  // namespace collabmap::stats
