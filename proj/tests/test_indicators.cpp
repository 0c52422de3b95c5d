#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "collabmap/corpus.hpp"
#include "collabmap/harness.hpp"
#include "collabmap/indicators.hpp"
#include "support.hpp"

using namespace collabmap;
using namespace collabmap::indicators;
using doctest::Approx;
using support::error_of;

namespace {

const SectorIntensityRow& row(const std::vector<SectorIntensityRow>& rows, const std::string& id) {
  for (const auto& r : rows) {
    if (r.sector_id == id) return r;
  }
  FAIL("no sector " << id);
  return rows.front();
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("midrank percentiles") {
  auto r = midrank_percentiles(std::vector<double>{1.0, 2.0, 3.0});
  CHECK(r[0] == Approx(16.6666666667));
  CHECK(r[1] == 50.0);
  CHECK(r[2] == Approx(83.3333333333));
  CHECK(midrank_percentiles(std::vector<double>{4, 4, 4, 4}) == std::vector<double>{50, 50, 50, 50});
  CHECK(midrank_percentiles(std::vector<double>{7}) == std::vector<double>{50});
  auto ties = midrank_percentiles(std::vector<double>{2, 1, 2, 3});
  CHECK(ties == std::vector<double>{50, 12.5, 50, 87.5});
  CHECK(midrank_percentiles(std::vector<double>{}).empty());
}

TEST_CASE("impact factor percentile ranks") {
  const YearWindow w{2001, 2003};
  JournalRegistry reg;
  reg.add({"A", "a", 2002, 1.0, {"C"}});
  reg.add({"B", "b", 2002, 2.0, {"C", "D"}});
  reg.add({"Z", "z", 2002, 3.0, {"C"}});
  auto ranks = if_percentile_ranks(reg, 2002, w);
  REQUIRE(ranks.size() == 4);
  CHECK(ranks[0].journal_id == "A");
  CHECK(ranks[0].rank_pct == Approx(16.6666666667));
  CHECK(ranks[1].rank_pct == 50.0);
  CHECK(ranks[2].rank_pct == Approx(83.3333333333));
  CHECK(ranks[3].category == "D");
  CHECK(ranks[3].rank_pct == 50.0);  // alone in its category

  JournalRegistry flat;
  for (const char* id : {"A", "B", "C"}) flat.add({id, id, 2002, 1.5, {"X"}});
  for (const auto& r : if_percentile_ranks(flat, 2002, w)) CHECK(r.rank_pct == 50.0);

  JournalRegistry stale = reg;
  stale.add({"OLD", "o", 1995, 1.0, {"C"}});
  CHECK(error_of([&] { if_percentile_ranks(stale, 2002, w); }) == ErrorCode::MissingIF);
}

TEST_CASE("article IF_pr averages the category ranks") {
  const YearWindow w{2001, 2003};
  JournalRegistry reg;
  reg.add({"T", "t", 2002, 5.0, {"A", "B"}});
  // category A: 3 below, 1 tie, 5 above -> 40; category B: 5 below, 1 tie, 3 above -> 60
  const double a_ifs[] = {1, 2, 3, 5, 6, 7, 8, 9, 10};
  const double b_ifs[] = {1, 2, 3, 4, 4.5, 5, 6, 7, 8};
  int k = 0;
  for (double v : a_ifs) reg.add({"A" + std::to_string(k++), "a", 2002, v, {"A"}});
  for (double v : b_ifs) reg.add({"B" + std::to_string(k++), "b", 2002, v, {"B"}});
  IfRankIndex index(reg, {2002}, w);
  CHECK(index.ranks("T", 2002) == std::vector<double>{40.0, 60.0});

  Publication p;
  p.pub_id = "P";
  p.year = 2002;
  p.journal_id = "T";
  CHECK(article_ifpr(p, index) == 50.0);

  p.journal_id = "A0";
  CHECK(article_ifpr(p, index) == 5.0);
  p.journal_id = "NOPE";
  CHECK(error_of([&] { article_ifpr(p, index); }) == ErrorCode::UnrankedJournal);

  JournalRegistry solo;
  solo.add({"S", "s", 2002, 1.0, {"A"}});
  p.journal_id = "S";
  CHECK(article_ifpr(p, IfRankIndex(solo, {2002}, w)) == 50.0);
}

TEST_CASE("monotone transforms leave IF ranks unchanged") {
  const YearWindow w{2001, 2003};
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    JournalRegistry reg, a, b;
    for (int j = 0; j < 25; ++j) {
      double v = static_cast<double>(rng() % 40) / 10.0;
      std::vector<std::string> cats = {"C" + std::to_string(rng() % 4)};
      if (rng() % 2) cats.push_back("D" + std::to_string(rng() % 3));
      std::string id = "J" + std::to_string(j);
      reg.add({id, id, 2002, v, cats});
      a.add({id, id, 2002, std::exp(v), cats});
      b.add({id, id, 2002, v * v * v + 2 * v, cats});
    }
    auto base = if_percentile_ranks(reg, 2002, w);
    auto ta = if_percentile_ranks(a, 2002, w);
    auto tb = if_percentile_ranks(b, 2002, w);
    REQUIRE(base.size() == ta.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(base[i].rank_pct == ta[i].rank_pct);
      CHECK(base[i].rank_pct == tb[i].rank_pct);
    }
  }
}

TEST_CASE("sector intensity on the fixture") {
  Corpus c = load_corpus(support::fixture_dir());
  auto sds = sector_intensity(c, Level::sds);
  CHECK(sds.size() == 5);  // FIS/01 has no articles
  const auto& elec = row(sds, "ING-INF/01");
  CHECK(elec.n_articles == 10);
  CHECK(elec.n_coauth == 6);
  CHECK(elec.n_industry_coauth == 3);
  CHECK(elec.headcount == 8);
  CHECK(*elec.pct_of_all == Approx(30.0));
  CHECK(*elec.pct_of_coauth == Approx(50.0));
  CHECK(*elec.per_researcher == Approx(0.375));
  CHECK(elec.uda_id == "09");

  auto uda = sector_intensity(c, Level::uda);
  CHECK(uda.size() == 3);
  std::size_t total = 0;
  for (const auto& r : uda) total += r.n_articles;
  CHECK(total == 42);  // M14 and I2-like multi-sector papers count in two areas
  CHECK(row(uda, "09").headcount == 11);
  CHECK(row(uda, "09").sector_name == "Ingegneria industriale e dell'informazione");
}

TEST_CASE("sector intensity on the tiny corpus") {
  support::TempDir dir;
  support::write_tiny(dir);
  Corpus c = load_corpus(dir.str());
  auto sds = sector_intensity(c, Level::sds);
  REQUIRE(sds.size() == 3);
  CHECK(row(sds, "A1").n_articles == 3);
  CHECK(*row(sds, "A1").pct_of_coauth == 100.0);
  CHECK(*row(sds, "A1").per_researcher == 1.0);
  CHECK_FALSE(row(sds, "A2").pct_of_coauth.has_value());
  CHECK(*row(sds, "A2").pct_of_all == 0.0);
  CHECK(row(sds, "B1").headcount == 3);
  CHECK(*row(sds, "B1").per_researcher == Approx(1.0 / 3.0));
  CHECK(*row(sds, "B1").pct_of_coauth == 50.0);

  auto uda = sector_intensity(c, Level::uda);
  CHECK(row(uda, "A").n_articles == 3);  // T5 counts once for area A
  CHECK(row(uda, "B").n_articles == 3);
  CHECK(row(uda, "A").headcount == 2);
}

TEST_CASE("output and fractional scientific strength") {
  Corpus c = load_corpus(support::fixture_dir());
  Analysis a(c);
  CHECK(researcher_output("e1", a) == 3);  // I1, C1, S1; Z1 lies outside the window
  CHECK(researcher_output("f1", a) == 0);
  CHECK(researcher_output("m3", c) == 4);
  CHECK(error_of([&] { researcher_output("nobody", a); }) == ErrorCode::UnknownResearcher);

  // I1 (J1 2001, 75, 2 authors) + C1 (J1 2002, 50, 2) + S1 (J1 2001, 75, 2)
  CHECK(researcher_fss("e1", a) == Approx(0.375 + 0.25 + 0.375));
  CHECK(researcher_fss("f1", a) == 0.0);
  CHECK(error_of([&] { researcher_fss("nobody", a); }) == ErrorCode::UnknownResearcher);

  CHECK(fractional_strength(std::vector<FssTerm>{{100.0, 1}}) == 1.0);
  CHECK(fractional_strength(std::vector<FssTerm>{{60.0, 4}}) == Approx(0.15));
  CHECK(fractional_strength(std::vector<FssTerm>{{50.0, 2}, {100.0, 5}}) == Approx(0.45));
  CHECK(fractional_strength(std::vector<FssTerm>{}) == 0.0);
  CHECK(error_of([] { fractional_strength(std::vector<FssTerm>{{50.0, 0}}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("ranking within a sector") {
  Roster roster;
  for (const char* id : {"x", "y", "z"}) roster[id] = Researcher{id, id, "U", "S"};
  roster["w"] = Researcher{"w", "w", "U", "T"};
  auto r = rank_within_sector({{"x", 0.0}, {"y", 2.0}, {"z", 5.0}, {"w", 9.0}}, roster);
  CHECK(r["x"] == Approx(16.6666666667));
  CHECK(r["y"] == 50.0);
  CHECK(r["z"] == Approx(83.3333333333));
  CHECK(r["w"] == 50.0);

  auto flat = rank_within_sector({{"x", 1.0}, {"y", 1.0}, {"z", 1.0}}, roster);
  for (const auto& [id, v] : flat) CHECK(v == 50.0);

  CHECK(error_of([&] { rank_within_sector({}, roster); }) == ErrorCode::EmptySector);
  CHECK(error_of([&] { rank_within_sector({{"q", 1.0}}, roster); }) == ErrorCode::UnknownResearcher);
}

TEST_CASE("researcher performance population") {
  Corpus c = load_corpus(support::fixture_dir());
  Analysis a(c);
  auto perf = researcher_performance(a);
  CHECK(perf.size() == 22);  // f1's sector has no articles
  std::map<std::string, std::vector<double>> o_by_sector, fss_by_sector;
  std::size_t with_industry = 0;
  for (const auto& p : perf) {
    o_by_sector[p.sds_id].push_back(p.output_pr);
    fss_by_sector[p.sds_id].push_back(p.fss_pr);
    with_industry += p.collaborated_with_industry;
    CHECK(p.fss <= static_cast<double>(p.output));
  }
  CHECK(with_industry == 7);
  for (const auto& [s, v] : o_by_sector) CHECK(mean_of(v) == Approx(50.0).epsilon(1e-12));
  for (const auto& [s, v] : fss_by_sector) CHECK(mean_of(v) == Approx(50.0).epsilon(1e-12));
}

TEST_CASE("multidisciplinarity indices") {
  support::TempDir dir;
  support::write_tiny(dir);
  Corpus c = load_corpus(dir.str());
  Analysis a(c);
  CHECK(multidisc_sds(std::set<std::string>{"T2"}, a) == 1.0);
  CHECK(multidisc_sds(std::set<std::string>{"T5"}, a) == 3.0);
  CHECK(multidisc_sds(std::set<std::string>{"T2", "T5"}, a) == 2.0);
  CHECK(multidisc_sci(std::set<std::string>{"T1", "T2"}, a) == 2.0);
  CHECK(multidisc_sci(std::set<std::string>{"T1", "T5"}, a) == 3.0);
  CHECK(error_of([&] { multidisc_sds(std::set<std::string>{}, a); }) == ErrorCode::EmptySet);
  CHECK(error_of([&] { multidisc_sci(std::set<std::string>{}, a); }) == ErrorCode::EmptySet);
  CHECK(error_of([&] { multidisc_sds(std::set<std::string>{"T3"}, a); }) == ErrorCode::NoAcademicAuthors);

  auto table = multidisc_table(a, collab::Selector::all);
  REQUIRE(!table.empty());
  CHECK(table[0].scope_kind == "subset");
  CHECK(table[0].n_pubs == 5);
  CHECK(*table[0].ii_sds == Approx((2 + 1 + 3 + 1) / 4.0));  // T3 has no sector
  for (const auto& r : table) {
    if (r.ii_sds) CHECK(*r.ii_sds >= 1.0);
    if (r.ii_sci) CHECK(*r.ii_sci >= 1.0);
    CHECK(r.n_pubs > 0);
  }
  auto industry = multidisc_table(a, collab::Selector::industry_coauthored);
  CHECK(industry[0].n_pubs == 1);
  CHECK(*industry[0].ii_sds == 2.0);
  CHECK(*industry[0].ii_sci == 2.0);
}

TEST_CASE("analysis is independent of thread count") {
  support::TempDir dir;
  harness::SynthConfig cfg;
  cfg.n_pubs = 600;
  cfg.industry_rate = 0.2;
  harness::generate(cfg, dir.str());
  Corpus c = load_corpus(dir.str());
  Analysis one(c, {"IT", 1}), four(c, {"IT", 4});
  REQUIRE(one.facts().size() == four.facts().size());
  for (std::size_t i = 0; i < one.facts().size(); ++i) {
    CHECK(one.facts()[i].profile == four.facts()[i].profile);
    CHECK(one.facts()[i].ifpr == four.facts()[i].ifpr);
  }
  auto p1 = researcher_performance(one), p4 = researcher_performance(four);
  REQUIRE(p1.size() == p4.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i].fss == p4[i].fss);
    CHECK(p1[i].fss_pr == p4[i].fss_pr);
  }
}

TEST_CASE("FSS never exceeds O and shares nest on random corpora") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    support::TempDir dir;
    harness::SynthConfig cfg;
    cfg.seed = seed;
    cfg.n_pubs = 300;
    cfg.industry_rate = 0.15;
    harness::generate(cfg, dir.str());
    Corpus c = load_corpus(dir.str());
    Analysis a(c);
    for (const auto& p : researcher_performance(a)) {
      CHECK(p.fss <= static_cast<double>(p.output));
      CHECK((p.fss == 0.0) == (p.output == 0));
    }
    for (auto level : {Level::sds, Level::uda}) {
      for (const auto& r : sector_intensity(a, level)) {
        if (r.pct_of_all && r.pct_of_coauth) CHECK(*r.pct_of_all <= *r.pct_of_coauth);
      }
    }
  }
}
