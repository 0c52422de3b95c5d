#include "collabmap/indicators.hpp"

#include <algorithm>
#include <numeric>

#include "collabmap/error.hpp"
#include "collabmap/parallel.hpp"

namespace collabmap::indicators {

std::vector<double> midrank_percentiles(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double r = 100.0 * (static_cast<double>(i) + 0.5 * static_cast<double>(j - i)) /
                     static_cast<double>(n);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

namespace {

struct Entry {
  std::string category;
  std::string journal_id;
  double impact_factor;
};

// Entries sorted by (category, journal_id) with their midrank within category.
std::vector<IfRank> rank_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.category, a.journal_id) < std::tie(b.category, b.journal_id);
  });
  std::vector<IfRank> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].category == entries[i].category) ++j;
    std::vector<double> ifs;
    for (std::size_t k = i; k < j; ++k) ifs.push_back(entries[k].impact_factor);
    auto ranks = midrank_percentiles(ifs);
    for (std::size_t k = i; k < j; ++k) {
      out.push_back({entries[k].journal_id, entries[k].category, entries[k].impact_factor,
                     ranks[k - i]});
    }
    i = j;
  }
  return out;
}

std::vector<Entry> entries_for(const JournalRegistry& journals, int year, const YearWindow& window,
                               bool strict) {
  std::vector<Entry> entries;
  for (const auto& id : journals.journal_ids()) {
    const Journal* j = journals.effective(id, year, window);
    if (!j) {
      if (strict) fail(ErrorCode::MissingIF, "journal " + id + " year " + std::to_string(year));
      continue;
    }
    for (const auto& cat : j->sci_categories) entries.push_back({cat, id, j->impact_factor});
  }
  return entries;
}

}  // namespace

std::vector<IfRank> if_percentile_ranks(const JournalRegistry& journals, int year,
                                        const YearWindow& window) {
  return rank_entries(entries_for(journals, year, window, true));
}

IfRankIndex::IfRankIndex(const JournalRegistry& journals, const std::set<int>& years,
                         const YearWindow& window) {
  for (int year : years) {
    std::map<std::string, std::vector<std::pair<std::string, double>>> per_journal;
    for (const auto& r : rank_entries(entries_for(journals, year, window, false))) {
      per_journal[r.journal_id].emplace_back(r.category, r.rank_pct);
    }
    for (auto& [jid, cats] : per_journal) {
      std::sort(cats.begin(), cats.end());
      std::vector<double> ranks;
      for (const auto& c : cats) ranks.push_back(c.second);
      ranks_.emplace(std::make_pair(year, jid), std::move(ranks));
    }
  }
}

std::vector<double> IfRankIndex::ranks(std::string_view journal_id, int year) const {
  auto it = ranks_.find(std::make_pair(year, std::string(journal_id)));
  return it == ranks_.end() ? std::vector<double>{} : it->second;
}

double article_ifpr(const Publication& pub, const IfRankIndex& ranks) {
  auto r = ranks.ranks(pub.journal_id, pub.year);
  if (r.empty()) {
    fail(ErrorCode::UnrankedJournal, "journal " + pub.journal_id + " year " +
                                         std::to_string(pub.year) + " (publication " + pub.pub_id + ")");
  }
  double sum = 0.0;
  for (double x : r) sum += x;
  return sum / static_cast<double>(r.size());
}

Analysis::Analysis(const Corpus& corpus, AnalysisOptions options)
    : corpus_(&corpus), options_(std::move(options)) {
  std::set<int> years;
  for (const auto& p : corpus.publications) years.insert(p.year);
  ranks_ = IfRankIndex(corpus.journals, years, corpus.window);

  facts_.resize(corpus.publications.size());
  parallel_for(facts_.size(), options_.threads, [&](std::size_t i) {
    const Publication& pub = corpus.publications[i];
    PublicationFacts& f = facts_[i];
    f.profile = collab::classify_publication(pub, corpus.organizations, options_.home_country);
    f.author_count = pub.authors.size();
    for (const auto& a : pub.authors) {
      if (!a.researcher_id) continue;
      f.researchers.push_back(*a.researcher_id);
      auto r = corpus.researchers.find(*a.researcher_id);
      if (r == corpus.researchers.end()) {
        fail(ErrorCode::DanglingReference, "researcher " + *a.researcher_id);
      }
      f.sds.push_back(r->second.sds_id);
      if (const SdsEntry* e = corpus.taxonomy.find(r->second.sds_id)) f.udas.push_back(e->uda_id);
    }
    for (auto* v : {&f.researchers, &f.sds, &f.udas}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    if (const Journal* j = corpus.journals.effective(pub.journal_id, pub.year, corpus.window)) {
      f.categories = j->sci_categories;
    }
    auto r = ranks_.ranks(pub.journal_id, pub.year);
    if (!r.empty()) {
      double sum = 0.0;
      for (double x : r) sum += x;
      f.ifpr = sum / static_cast<double>(r.size());
    }
  });
  for (std::size_t i = 0; i < facts_.size(); ++i) {
    for (const auto& rid : facts_[i].researchers) by_researcher_[rid].push_back(i);
  }
}

const std::vector<std::size_t>& Analysis::publications_of(std::string_view researcher_id) const {
  static const std::vector<std::size_t> none;
  auto it = by_researcher_.find(researcher_id);
  return it == by_researcher_.end() ? none : it->second;
}

double Analysis::ifpr(std::size_t i) const {
  if (!facts_[i].ifpr) {
    const Publication& p = corpus_->publications[i];
    fail(ErrorCode::UnrankedJournal, "journal " + p.journal_id + " year " + std::to_string(p.year) +
                                         " (publication " + p.pub_id + ")");
  }
  return *facts_[i].ifpr;
}

Level parse_level(std::string_view s) {
  if (s == "sds") return Level::sds;
  if (s == "uda") return Level::uda;
  fail(ErrorCode::InvalidArgument, "unknown level '" + std::string(s) + "'");
}

std::string_view to_string(Level l) { return l == Level::sds ? "sds" : "uda"; }

std::vector<SectorIntensityRow> sector_intensity(const Analysis& analysis, Level level) {
  const Corpus& c = analysis.corpus();
  std::map<std::string, SectorIntensityRow> rows;
  std::map<std::string, std::size_t> headcount;
  for (const auto& [id, r] : c.researchers) {
    if (level == Level::sds) {
      ++headcount[r.sds_id];
    } else if (const SdsEntry* e = c.taxonomy.find(r.sds_id)) {
      ++headcount[e->uda_id];
    }
  }
  for (const auto& f : analysis.facts()) {
    const auto& sectors = level == Level::sds ? f.sds : f.udas;
    for (const auto& s : sectors) {
      SectorIntensityRow& row = rows[s];
      ++row.n_articles;
      if (f.profile.extramural()) ++row.n_coauth;
      if (f.profile.collab_count >= 1) ++row.n_industry_coauth;
    }
  }
  std::vector<SectorIntensityRow> out;
  for (auto& [id, row] : rows) {
    row.sector_id = id;
    if (level == Level::sds) {
      const SdsEntry* e = c.taxonomy.find(id);
      row.sector_name = e->sds_name;
      row.uda_id = e->uda_id;
      row.uda_name = e->uda_name;
    } else {
      row.sector_name = c.taxonomy.areas().at(id);
      row.uda_id = id;
      row.uda_name = row.sector_name;
    }
    row.headcount = headcount[id];
    const auto n = static_cast<double>(row.n_industry_coauth);
    row.pct_of_all = 100.0 * n / static_cast<double>(row.n_articles);
    if (row.n_coauth > 0) row.pct_of_coauth = 100.0 * n / static_cast<double>(row.n_coauth);
    if (row.headcount > 0) row.per_researcher = n / static_cast<double>(row.headcount);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<SectorIntensityRow> sector_intensity(const Corpus& corpus, Level level) {
  return sector_intensity(Analysis(corpus), level);
}

std::size_t researcher_output(std::string_view researcher_id, const Analysis& analysis) {
  if (!analysis.corpus().researchers.count(researcher_id)) {
    fail(ErrorCode::UnknownResearcher, std::string(researcher_id));
  }
  return analysis.publications_of(researcher_id).size();
}

std::size_t researcher_output(std::string_view researcher_id, const Corpus& corpus) {
  return researcher_output(researcher_id, Analysis(corpus));
}

double fractional_strength(std::span<const FssTerm> terms) {
  double fss = 0.0;
  for (const auto& t : terms) {
    if (t.authors == 0) fail(ErrorCode::InvalidArgument, "publication with an empty byline");
    fss += t.ifpr / 100.0 / static_cast<double>(t.authors);
  }
  return fss;
}

double researcher_fss(std::string_view researcher_id, const Analysis& analysis) {
  if (!analysis.corpus().researchers.count(researcher_id)) {
    fail(ErrorCode::UnknownResearcher, std::string(researcher_id));
  }
  std::vector<FssTerm> terms;
  for (std::size_t i : analysis.publications_of(researcher_id)) {
    terms.push_back({analysis.ifpr(i), analysis.facts()[i].author_count});
  }
  return fractional_strength(terms);
}

double researcher_fss(std::string_view researcher_id, const Corpus& corpus) {
  return researcher_fss(researcher_id, Analysis(corpus));
}

std::map<std::string, double> rank_within_sector(const std::map<std::string, double>& values,
                                                 const Roster& roster) {
  if (values.empty()) fail(ErrorCode::EmptySector, "no researchers to rank");
  std::map<std::string, std::vector<std::pair<std::string, double>>> by_sector;
  for (const auto& [rid, v] : values) {
    auto r = roster.find(rid);
    if (r == roster.end()) fail(ErrorCode::UnknownResearcher, rid);
    by_sector[r->second.sds_id].emplace_back(rid, v);
  }
  std::map<std::string, double> out;
  for (const auto& [sds, members] : by_sector) {
    std::vector<double> v;
    for (const auto& m : members) v.push_back(m.second);
    auto ranks = midrank_percentiles(v);
    for (std::size_t i = 0; i < members.size(); ++i) out[members[i].first] = ranks[i];
  }
  return out;
}

std::set<std::string> active_sectors(const Analysis& analysis) {
  std::set<std::string> out;
  for (const auto& f : analysis.facts()) out.insert(f.sds.begin(), f.sds.end());
  return out;
}

std::vector<ResearcherPerformance> researcher_performance(const Analysis& analysis) {
  const Corpus& c = analysis.corpus();
  const auto active = active_sectors(analysis);
  std::vector<const Researcher*> population;
  for (const auto& [id, r] : c.researchers) {
    if (active.count(r.sds_id)) population.push_back(&r);
  }
  std::vector<ResearcherPerformance> out(population.size());
  parallel_for(out.size(), analysis.options().threads, [&](std::size_t k) {
    const Researcher& r = *population[k];
    ResearcherPerformance& p = out[k];
    p.researcher_id = r.researcher_id;
    p.sds_id = r.sds_id;
    p.output = researcher_output(r.researcher_id, analysis);
    p.fss = researcher_fss(r.researcher_id, analysis);
    for (std::size_t i : analysis.publications_of(r.researcher_id)) {
      if (analysis.facts()[i].profile.collab_count >= 1) p.collaborated_with_industry = true;
    }
  });
  std::map<std::string, double> o, fss;
  for (const auto& p : out) {
    o[p.researcher_id] = static_cast<double>(p.output);
    fss[p.researcher_id] = p.fss;
  }
  if (!out.empty()) {
    auto o_pr = rank_within_sector(o, c.researchers);
    auto fss_pr = rank_within_sector(fss, c.researchers);
    for (auto& p : out) {
      p.output_pr = o_pr.at(p.researcher_id);
      p.fss_pr = fss_pr.at(p.researcher_id);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> indices_of(const std::set<std::string>& pub_ids, const Analysis& analysis) {
  std::vector<std::size_t> out;
  const auto& pubs = analysis.corpus().publications;
  for (const auto& id : pub_ids) {
    auto it = std::lower_bound(pubs.begin(), pubs.end(), id,
                               [](const Publication& p, const std::string& k) { return p.pub_id < k; });
    if (it == pubs.end() || it->pub_id != id) fail(ErrorCode::DanglingReference, "publication " + id);
    out.push_back(static_cast<std::size_t>(it - pubs.begin()));
  }
  return out;
}

}  // namespace

double multidisc_sds(std::span<const std::size_t> pubs, const Analysis& analysis) {
  if (pubs.empty()) fail(ErrorCode::EmptySet, "no publications");
  double sum = 0.0;
  for (std::size_t i : pubs) {
    const auto& f = analysis.facts()[i];
    if (f.sds.empty()) fail(ErrorCode::NoAcademicAuthors, analysis.corpus().publications[i].pub_id);
    sum += static_cast<double>(f.sds.size());
  }
  return sum / static_cast<double>(pubs.size());
}

double multidisc_sds(const std::set<std::string>& pub_ids, const Analysis& analysis) {
  return multidisc_sds(indices_of(pub_ids, analysis), analysis);
}

double multidisc_sci(std::span<const std::size_t> pubs, const Analysis& analysis) {
  if (pubs.empty()) fail(ErrorCode::EmptySet, "no publications");
  double sum = 0.0;
  for (std::size_t i : pubs) {
    const auto& f = analysis.facts()[i];
    if (f.categories.empty()) {
      const Publication& p = analysis.corpus().publications[i];
      fail(ErrorCode::UnrankedJournal, "journal " + p.journal_id + " (publication " + p.pub_id + ")");
    }
    sum += static_cast<double>(f.categories.size());
  }
  return sum / static_cast<double>(pubs.size());
}

double multidisc_sci(const std::set<std::string>& pub_ids, const Analysis& analysis) {
  return multidisc_sci(indices_of(pub_ids, analysis), analysis);
}

std::map<std::string, std::vector<std::size_t>> publications_by_sds(const Analysis& analysis) {
  std::map<std::string, std::vector<std::size_t>> out;
  const auto& facts = analysis.facts();
  for (std::size_t i = 0; i < facts.size(); ++i) {
    for (const auto& s : facts[i].sds) out[s].push_back(i);
  }
  return out;
}

std::map<std::string, std::vector<std::size_t>> publications_by_category(const Analysis& analysis) {
  std::map<std::string, std::vector<std::size_t>> out;
  const auto& facts = analysis.facts();
  for (std::size_t i = 0; i < facts.size(); ++i) {
    for (const auto& c : facts[i].categories) out[c].push_back(i);
  }
  return out;
}

namespace {

MultidiscIndex index_over(const Analysis& analysis, std::string kind, std::string id,
                          collab::Selector subset, const std::vector<std::size_t>& pubs) {
  MultidiscIndex row;
  row.scope_kind = std::move(kind);
  row.scope_id = std::move(id);
  row.subset = subset;
  std::vector<std::size_t> selected, with_sds, with_cats;
  for (std::size_t i : pubs) {
    if (!analysis.selected(i, subset)) continue;
    selected.push_back(i);
    if (!analysis.facts()[i].sds.empty()) with_sds.push_back(i);
    if (!analysis.facts()[i].categories.empty()) with_cats.push_back(i);
  }
  row.n_pubs = selected.size();
  if (!with_sds.empty()) row.ii_sds = multidisc_sds(with_sds, analysis);
  if (!with_cats.empty()) row.ii_sci = multidisc_sci(with_cats, analysis);
  return row;
}

}  // namespace

std::vector<MultidiscIndex> multidisc_table(const Analysis& analysis, collab::Selector subset) {
  std::vector<std::size_t> all(analysis.facts().size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<MultidiscIndex> out;
  out.push_back(index_over(analysis, "subset", std::string(collab::to_string(subset)), subset, all));
  for (const auto& [sds, pubs] : publications_by_sds(analysis)) {
    auto row = index_over(analysis, "sds", sds, subset, pubs);
    if (row.n_pubs > 0) out.push_back(std::move(row));
  }
  for (const auto& [cat, pubs] : publications_by_category(analysis)) {
    auto row = index_over(analysis, "sci", cat, subset, pubs);
    if (row.n_pubs > 0) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace collabmap::indicators
