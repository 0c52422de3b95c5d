#pragma once

// Sector intensity, impact-factor percentile ranks, researcher output (O)
// and fractional scientific strength (FSS), and the multidisciplinarity
// indices. Everything here reads an immutable Corpus.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collabmap/collab.hpp"
#include "collabmap/model.hpp"

namespace collabmap::indicators {

/// 100 * (count strictly below + 0.5 * count equal, self included) / N.
std::vector<double> midrank_percentiles(std::span<const double> values);

struct IfRank {
  std::string journal_id;
  std::string category;
  double impact_factor = 0.0;
  double rank_pct = 0.0;

  bool operator==(const IfRank&) const = default;
};

/// Ranks every journal inside each of its SCI categories for `year`, using the
/// record of that year or the nearest one inside `window`. Sorted by
/// (category, journal_id). Throws MissingIF when a journal has no usable record.
std::vector<IfRank> if_percentile_ranks(const JournalRegistry& journals, int year,
                                        const YearWindow& window);

/// Percentile ranks per publication year, for journals that have a record.
class IfRankIndex {
 public:
  IfRankIndex() = default;
  IfRankIndex(const JournalRegistry& journals, const std::set<int>& years, const YearWindow& window);

  /// Category ranks of `journal_id` in `year`; empty if unranked.
  std::vector<double> ranks(std::string_view journal_id, int year) const;

 private:
  // (year, journal_id) -> ranks over the journal's categories
  std::map<std::pair<int, std::string>, std::vector<double>, std::less<>> ranks_;
};

/// Mean of the journal's category ranks in the article's year. Throws UnrankedJournal.
double article_ifpr(const Publication& pub, const IfRankIndex& ranks);

struct AnalysisOptions {
  std::string home_country = std::string(collab::kDefaultHomeCountry);
  unsigned threads = 1;
};

/// Per-publication facts derived once and shared by every indicator.
struct PublicationFacts {
  collab::CollaborationProfile profile;
  std::vector<std::string> researchers;  // distinct linked authors, sorted
  std::vector<std::string> sds;          // distinct SDS of linked authors, sorted
  std::vector<std::string> udas;         // areas of those SDS, sorted
  std::vector<std::string> categories;   // SCI categories of the effective journal record
  std::size_t author_count = 0;          // full byline
  std::optional<double> ifpr;            // empty when the journal cannot be ranked
};

class Analysis {
 public:
  explicit Analysis(const Corpus& corpus, AnalysisOptions options = {});

  const Corpus& corpus() const { return *corpus_; }
  const AnalysisOptions& options() const { return options_; }
  const IfRankIndex& if_ranks() const { return ranks_; }
  const std::vector<PublicationFacts>& facts() const { return facts_; }
  const std::vector<std::size_t>& publications_of(std::string_view researcher_id) const;

  /// article_ifpr of publication i; throws UnrankedJournal.
  double ifpr(std::size_t i) const;
  bool selected(std::size_t i, collab::Selector s) const { return collab::selects(s, facts_[i].profile); }

 private:
  const Corpus* corpus_;
  AnalysisOptions options_;
  IfRankIndex ranks_;
  std::vector<PublicationFacts> facts_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_researcher_;
};

enum class Level { sds, uda };
Level parse_level(std::string_view s);
std::string_view to_string(Level l);

struct SectorIntensityRow {
  std::string sector_id;
  std::string sector_name;
  std::string uda_id;
  std::string uda_name;
  std::size_t n_articles = 0;
  std::size_t n_coauth = 0;  // extramural collaborations
  std::size_t n_industry_coauth = 0;
  std::size_t headcount = 0;
  std::optional<double> pct_of_all;
  std::optional<double> pct_of_coauth;
  std::optional<double> per_researcher;
};

/// One row per sector with at least one article, sorted by sector_id. An
/// article counts once in every sector (and area) of its linked authors.
std::vector<SectorIntensityRow> sector_intensity(const Analysis& analysis, Level level);
std::vector<SectorIntensityRow> sector_intensity(const Corpus& corpus, Level level);

std::size_t researcher_output(std::string_view researcher_id, const Analysis& analysis);
std::size_t researcher_output(std::string_view researcher_id, const Corpus& corpus);
struct FssTerm {
  double ifpr = 0.0;          // article IF_pr in [0, 100]
  std::size_t authors = 1;    // full byline
};
/// Sum of (ifpr / 100) / authors. Throws InvalidArgument on a zero byline.
double fractional_strength(std::span<const FssTerm> terms);

/// Sum over the researcher's publications of (IF_pr / 100) / byline length.
double researcher_fss(std::string_view researcher_id, const Analysis& analysis);
double researcher_fss(std::string_view researcher_id, const Corpus& corpus);

/// Midrank percentile of each value within its researcher's SDS. Throws
/// UnknownResearcher for ids outside the roster and EmptySector on no input.
std::map<std::string, double> rank_within_sector(const std::map<std::string, double>& values,
                                                 const Roster& roster);

struct ResearcherPerformance {
  std::string researcher_id;
  std::string sds_id;
  std::size_t output = 0;  // O
  double fss = 0.0;
  double output_pr = 0.0;
  double fss_pr = 0.0;
  bool collaborated_with_industry = false;
};

/// SDS with at least one attributed article.
std::set<std::string> active_sectors(const Analysis& analysis);

/// Every roster member of an active SDS, sorted by researcher_id.
std::vector<ResearcherPerformance> researcher_performance(const Analysis& analysis);

/// Mean number of distinct author SDS per publication. Throws EmptySet and
/// NoAcademicAuthors.
double multidisc_sds(std::span<const std::size_t> pubs, const Analysis& analysis);
double multidisc_sds(const std::set<std::string>& pub_ids, const Analysis& analysis);
/// Mean number of SCI categories of the publishing journal. Throws EmptySet.
double multidisc_sci(std::span<const std::size_t> pubs, const Analysis& analysis);
double multidisc_sci(const std::set<std::string>& pub_ids, const Analysis& analysis);

struct MultidiscIndex {
  std::string scope_kind;  // "subset", "sds" or "sci"
  std::string scope_id;
  collab::Selector subset = collab::Selector::all;
  std::size_t n_pubs = 0;
  std::optional<double> ii_sds;  // over the scope's publications with linked authors
  std::optional<double> ii_sci;
};

/// Whole-subset row, then one row per SDS, then one per SCI category.
std::vector<MultidiscIndex> multidisc_table(const Analysis& analysis, collab::Selector subset);

/// Publication indices grouped by attributed SDS / by SCI category.
std::map<std::string, std::vector<std::size_t>> publications_by_sds(const Analysis& analysis);
std::map<std::string, std::vector<std::size_t>> publications_by_category(const Analysis& analysis);

}  // namespace collabmap::indicators
