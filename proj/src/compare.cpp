#include "collabmap/compare.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "collabmap/error.hpp"

namespace collabmap::stats {

using collab::Selector;
using indicators::Analysis;

Grouping parse_grouping(std::string_view s) {
  for (auto g : {Grouping::sds_all_vs_collab, Grouping::sds_all_vs_industry,
                 Grouping::researchers_industry_vs_rest, Grouping::multidisc_all_vs_industry,
                 Grouping::multidisc_collab_vs_industry}) {
    if (to_string(g) == s) return g;
  }
  fail(ErrorCode::UnknownGrouping, std::string(s));
}

Indicator parse_indicator(std::string_view s) {
  for (auto i : {Indicator::ifpr, Indicator::o, Indicator::fss, Indicator::ii_sds, Indicator::ii_sci}) {
    if (to_string(i) == s) return i;
  }
  fail(ErrorCode::UnknownIndicator, std::string(s));
}

std::string_view to_string(Grouping g) {
  switch (g) {
    case Grouping::sds_all_vs_collab: return "sds_all_vs_collab";
    case Grouping::sds_all_vs_industry: return "sds_all_vs_industry";
    case Grouping::researchers_industry_vs_rest: return "researchers_industry_vs_rest";
    case Grouping::multidisc_all_vs_industry: return "multidisc_all_vs_industry";
    case Grouping::multidisc_collab_vs_industry: return "multidisc_collab_vs_industry";
  }
  return "";
}

std::string_view to_string(Indicator i) {
  switch (i) {
    case Indicator::ifpr: return "ifpr";
    case Indicator::o: return "o";
    case Indicator::fss: return "fss";
    case Indicator::ii_sds: return "ii_sds";
    case Indicator::ii_sci: return "ii_sci";
  }
  return "";
}

namespace {

std::string_view indicator_label(Indicator i) {
  switch (i) {
    case Indicator::ifpr: return "IF_pr";
    case Indicator::o: return "O_pr";
    case Indicator::fss: return "FSS_pr";
    case Indicator::ii_sds: return "Ii_SDS";
    case Indicator::ii_sci: return "Ii_SCI";
  }
  return "";
}

std::string_view subset_label(Selector s) {
  switch (s) {
    case Selector::all: return "all publications";
    case Selector::extramural_collab: return "extramural collaborations";
    case Selector::industry_coauthored: return "industry co-authored";
  }
  return "";
}

struct PairedSpec {
  Selector first;
  Selector second;
  std::size_t floor;  // minimum number of `second` publications per unit
  std::string floor_text;
};

Comparison paired_over_units(const Analysis& analysis, Grouping grouping, Indicator indicator,
                             const PairedSpec& spec) {
  const bool by_category = indicator == Indicator::ii_sci;
  const auto units = by_category ? indicators::publications_by_category(analysis)
                                 : indicators::publications_by_sds(analysis);
  const auto& facts = analysis.facts();
  std::function<double(std::size_t)> value;
  switch (indicator) {
    case Indicator::ifpr: value = [&](std::size_t i) { return analysis.ifpr(i); }; break;
    case Indicator::ii_sds: value = [&](std::size_t i) { return double(facts[i].sds.size()); }; break;
    case Indicator::ii_sci: value = [&](std::size_t i) { return double(facts[i].categories.size()); }; break;
    default: fail(ErrorCode::UnknownIndicator, std::string(to_string(indicator)));
  }

  Comparison c;
  c.grouping = grouping;
  c.indicator = indicator;
  c.unit_kind = by_category ? "SCI category" : "SDS";
  c.threshold = spec.floor;
  std::vector<double> xs, ys;
  for (const auto& [unit, pubs] : units) {
    ++c.candidate_units;
    double sum_a = 0.0, sum_b = 0.0;
    std::size_t n_a = 0, n_b = 0;
    for (std::size_t i : pubs) {
      if (analysis.selected(i, spec.first)) {
        sum_a += value(i);
        ++n_a;
      }
      if (analysis.selected(i, spec.second)) {
        sum_b += value(i);
        ++n_b;
      }
    }
    if (n_b < std::max<std::size_t>(spec.floor, 1) || n_a == 0) {
      ++c.excluded_units;
      continue;
    }
    c.units.push_back(unit);
    xs.push_back(sum_a / double(n_a));
    ys.push_back(sum_b / double(n_b));
  }
  const std::string plural = by_category ? "SCI categories" : "SDSs";
  c.exclusion_note = "excludes " + std::to_string(c.excluded_units) + " of " +
                     std::to_string(c.candidate_units) + " " + plural + " with fewer than " +
                     std::to_string(std::max<std::size_t>(spec.floor, 1)) + " " + spec.floor_text;
  if (c.units.size() < 2) {
    fail(ErrorCode::InsufficientSectors,
         std::to_string(c.units.size()) + " unit(s) left; " + c.exclusion_note);
  }
  const std::string label(indicator_label(indicator));
  c.a = descriptive(xs, label + " of " + std::string(subset_label(spec.first)));
  c.b = descriptive(ys, label + " of " + std::string(subset_label(spec.second)));
  c.result = paired_t(xs, ys);
  return c;
}

Comparison researchers_vs_rest(const Analysis& analysis, Indicator indicator) {
  if (indicator != Indicator::o && indicator != Indicator::fss) {
    fail(ErrorCode::UnknownIndicator,
         std::string(to_string(indicator)) + " is not defined for researchers_industry_vs_rest");
  }
  const auto perf = indicators::researcher_performance(analysis);
  const auto active = indicators::active_sectors(analysis);
  Comparison c;
  c.grouping = Grouping::researchers_industry_vs_rest;
  c.indicator = indicator;
  c.unit_kind = "researcher";
  c.candidate_units = analysis.corpus().researchers.size();
  c.excluded_units = c.candidate_units - perf.size();
  c.threshold = 1;
  c.exclusion_note = "population: researchers of the " + std::to_string(active.size()) +
                     " SDSs with at least 1 article; excludes " + std::to_string(c.excluded_units) +
                     " researchers of SDSs without articles";
  std::vector<double> with, without;
  for (const auto& p : perf) {
    double v = indicator == Indicator::o ? p.output_pr : p.fss_pr;
    (p.collaborated_with_industry ? with : without).push_back(v);
    c.units.push_back(p.researcher_id);
  }
  if (with.size() < 2 || without.size() < 2) {
    fail(ErrorCode::InsufficientSectors, std::to_string(with.size()) + " collaborating and " +
                                             std::to_string(without.size()) +
                                             " other researchers; " + c.exclusion_note);
  }
  const std::string label(indicator_label(indicator));
  c.a = descriptive(with, label + " of researchers who collaborated with industry");
  c.b = descriptive(without, label + " of the other researchers");
  c.result = welch_t(c.a, c.b);
  return c;
}

}  // namespace

Comparison compare(const Analysis& analysis, Grouping grouping, Indicator indicator,
                   const CompareConfig& config) {
  auto require = [&](std::initializer_list<Indicator> allowed) {
    if (std::find(allowed.begin(), allowed.end(), indicator) == allowed.end()) {
      fail(ErrorCode::UnknownIndicator, std::string(to_string(indicator)) + " is not defined for " +
                                            std::string(to_string(grouping)));
    }
  };
  const std::string industry_floor = "industry co-authored publications";
  switch (grouping) {
    case Grouping::sds_all_vs_collab:
      require({Indicator::ifpr});
      return paired_over_units(analysis, grouping, indicator,
                               {Selector::all, Selector::extramural_collab, config.min_collab_pubs,
                                "extramural-collaboration publications"});
    case Grouping::sds_all_vs_industry:
      require({Indicator::ifpr});
      return paired_over_units(analysis, grouping, indicator,
                               {Selector::all, Selector::industry_coauthored,
                                config.min_industry_pubs, industry_floor});
    case Grouping::researchers_industry_vs_rest:
      return researchers_vs_rest(analysis, indicator);
    case Grouping::multidisc_all_vs_industry:
      require({Indicator::ii_sds, Indicator::ii_sci});
      return paired_over_units(analysis, grouping, indicator,
                               {Selector::all, Selector::industry_coauthored,
                                config.min_industry_pubs, industry_floor});
    case Grouping::multidisc_collab_vs_industry:
      require({Indicator::ii_sds, Indicator::ii_sci});
      return paired_over_units(analysis, grouping, indicator,
                               {Selector::extramural_collab, Selector::industry_coauthored,
                                config.min_industry_pubs, industry_floor});
  }
  fail(ErrorCode::UnknownGrouping, "?");
}

Comparison compare(const Corpus& corpus, Grouping grouping, Indicator indicator,
                   const CompareConfig& config) {
  return compare(Analysis(corpus), grouping, indicator, config);
}

}  // namespace collabmap::stats
