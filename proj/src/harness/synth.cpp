#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "collabmap/csv.hpp"
#include "collabmap/error.hpp"
#include "collabmap/harness.hpp"

namespace collabmap::harness {
namespace fs = std::filesystem;

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

void validate_config(const SynthConfig& c) {
  auto need = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidConfig, what);
  };
  need(c.n_pubs >= 1, "n_pubs must be >= 1");
  need(c.n_universities >= 1, "n_universities must be >= 1");
  need(c.n_firms >= 1, "n_firms must be >= 1");
  need(c.n_public_orgs >= 1, "n_public_orgs must be >= 1");
  need(c.n_researchers >= 1, "n_researchers must be >= 1");
  need(c.n_journals >= 1, "n_journals must be >= 1");
  need(c.n_sds >= 1 && c.n_udas >= 1 && c.n_udas <= c.n_sds, "need 1 <= n_udas <= n_sds");
  need(c.n_categories >= 1, "n_categories must be >= 1");
  need(c.max_authors >= 1, "max_authors must be >= 1");
  need(c.industry_rate >= 0.0 && c.industry_rate <= 1.0, "industry_rate must be in [0, 1]");
  need(c.extramural_rate >= 0.0 && c.extramural_rate <= 1.0, "extramural_rate must be in [0, 1]");
  need(c.year_min <= c.year_max, "year_min must be <= year_max");
}

namespace {

std::string numbered(const char* prefix, std::size_t i, int width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::MissingFile, "cannot write " + path.string());
  out << content;
}

// k distinct picks from [0, n), in draw order
std::vector<std::size_t> pick_distinct(Rng& rng, const std::vector<std::size_t>& pool, std::size_t k) {
  std::vector<std::size_t> rest = pool;
  std::vector<std::size_t> out;
  k = std::min(k, rest.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = static_cast<std::size_t>(rng.below(rest.size()));
    out.push_back(rest[j]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return out;
}

std::string firm_name(std::size_t i) { return numbered("Impresa ", i, 3); }

}  // namespace

void generate(const SynthConfig& c, const std::string& out_dir) {
  validate_config(c);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  Rng rng(c.seed);

  // taxonomy
  std::string taxonomy = "sds_id,sds_name,uda_id,uda_name\n";
  std::vector<std::string> sds_ids;
  for (std::size_t s = 0; s < c.n_sds; ++s) {
    std::size_t a = s % c.n_udas;
    sds_ids.push_back(numbered("S", s + 1, 3));
    taxonomy += csv::join({sds_ids.back(), numbered("Sector ", s + 1, 3), numbered("A", a + 1, 2),
                           numbered("Area ", a + 1, 2)}) + "\n";
  }
  write_file(dir / "taxonomy.csv", taxonomy);

  // organizations
  std::string orgs = "org_id,canonical_name,kind,country\n";
  std::string aliases = "alias,org_id\n";
  std::vector<std::string> univ_ids, firm_ids;
  std::vector<std::size_t> domestic_firms;
  std::vector<std::string> other_ids;
  for (std::size_t u = 0; u < c.n_universities; ++u) {
    univ_ids.push_back(numbered("UNIV", u + 1, 3));
    orgs += csv::join({univ_ids.back(), numbered("Universita ", u + 1, 3), "university", "IT"}) + "\n";
  }
  for (std::size_t f = 0; f < c.n_firms; ++f) {
    firm_ids.push_back(numbered("FIRM", f + 1, 3));
    bool foreign = f % 7 == 6;
    orgs += csv::join({firm_ids.back(), firm_name(f + 1) + " S.p.A.", "private_firm",
                       foreign ? "DE" : "IT"}) + "\n";
    aliases += csv::join({"Gruppo " + firm_name(f + 1), firm_ids.back()}) + "\n";
    if (foreign) other_ids.push_back(firm_ids.back());
    else domestic_firms.push_back(f);
  }
  static const char* kOtherKinds[] = {"public_org", "consortium", "foundation", "foreign_org"};
  for (std::size_t o = 0; o < c.n_public_orgs; ++o) {
    std::string id = numbered("ORG", o + 1, 3);
    const char* kind = kOtherKinds[o % 4];
    orgs += csv::join({id, numbered("Ente ", o + 1, 3), kind, o % 4 == 3 ? "FR" : "IT"}) + "\n";
    other_ids.push_back(id);
  }
  write_file(dir / "organizations.csv", orgs);
  write_file(dir / "aliases.csv", aliases);

  // journals
  std::string journals = "journal_id,name,year,impact_factor,sci_categories\n";
  std::vector<std::string> journal_ids;
  std::vector<std::size_t> all_categories(c.n_categories);
  for (std::size_t i = 0; i < c.n_categories; ++i) all_categories[i] = i;
  for (std::size_t j = 0; j < c.n_journals; ++j) {
    journal_ids.push_back(numbered("J", j + 1, 4));
    std::size_t k = 1 + static_cast<std::size_t>(rng.below(3));
    auto cats = pick_distinct(rng, all_categories, k);
    std::sort(cats.begin(), cats.end());
    std::string cat_field;
    for (std::size_t x : cats) {
      if (!cat_field.empty()) cat_field += ";";
      cat_field += numbered("C", x + 1, 2);
    }
    std::vector<int> years;
    for (int y = c.year_min; y <= c.year_max; ++y) {
      if (rng.chance(0.9)) years.push_back(y);
    }
    if (years.empty()) years.push_back(c.year_min);
    for (int y : years) {
      char impact[32];
      std::snprintf(impact, sizeof impact, "%.1f", static_cast<double>(rng.below(100)) / 10.0);
      journals += csv::join({journal_ids.back(), numbered("Journal ", j + 1, 4), std::to_string(y),
                             impact, cat_field}) + "\n";
    }
  }
  write_file(dir / "journals.csv", journals);

  // roster
  std::string roster = "researcher_id,full_name,university_org_id,sds_id\n";
  std::vector<std::vector<std::size_t>> staff(c.n_universities);
  for (std::size_t r = 0; r < c.n_researchers; ++r) {
    std::size_t u = r % c.n_universities;
    std::size_t s = static_cast<std::size_t>(rng.below(c.n_sds));
    staff[u].push_back(r);
    roster += csv::join({numbered("R", r + 1, 5), numbered("Researcher ", r + 1, 5), univ_ids[u],
                         sds_ids[s]}) + "\n";
  }
  write_file(dir / "roster.csv", roster);

  std::vector<std::size_t> staffed;
  for (std::size_t u = 0; u < c.n_universities; ++u) {
    if (!staff[u].empty()) staffed.push_back(u);
  }
  std::vector<std::size_t> other_pool(other_ids.size());
  for (std::size_t i = 0; i < other_pool.size(); ++i) other_pool[i] = i;

  // publications
  std::string pubs;
  const auto n_years = static_cast<std::uint64_t>(c.year_max - c.year_min + 1);
  for (std::size_t p = 0; p < c.n_pubs; ++p) {
    nlohmann::ordered_json j;
    j["pub_id"] = numbered("P", p + 1, 7);
    j["year"] = c.year_min + static_cast<int>(rng.below(n_years));
    j["journal_id"] = journal_ids[rng.below(journal_ids.size())];

    std::size_t m = 1;
    if (rng.chance(c.extramural_rate * 0.5)) m += 1 + static_cast<std::size_t>(rng.below(2));
    auto universities = pick_distinct(rng, staffed, m);
    std::vector<std::size_t> firms;
    if (rng.chance(c.industry_rate)) {
      std::size_t n = 1;
      if (rng.chance(0.3)) n += 1 + static_cast<std::size_t>(rng.below(2));
      firms = pick_distinct(rng, domestic_firms, n);
    }
    std::vector<std::size_t> others;
    if (rng.chance(c.extramural_rate * 0.5)) others = pick_distinct(rng, other_pool, 1);

    nlohmann::ordered_json authors = nlohmann::ordered_json::array();
    nlohmann::ordered_json address_ids = nlohmann::ordered_json::array();
    nlohmann::ordered_json address_raw = nlohmann::ordered_json::array();
    std::size_t staff_counter = 0;
    for (std::size_t u : universities) {
      address_ids.push_back(univ_ids[u]);
      std::size_t k = 1 + static_cast<std::size_t>(rng.below(c.max_authors));
      std::vector<std::size_t> pool = staff[u];
      for (std::size_t r : pick_distinct(rng, pool, k)) {
        authors.push_back({{"raw_name", numbered("Researcher ", r + 1, 5)},
                           {"researcher_id", numbered("R", r + 1, 5)},
                           {"org_id", univ_ids[u]}});
      }
    }
    for (std::size_t f : firms) {
      authors.push_back({{"raw_name", "Staff " + std::to_string(++staff_counter)},
                         {"researcher_id", nullptr},
                         {"org_id", firm_ids[f]}});
      switch (rng.below(4)) {
        case 0: address_raw.push_back("IMPRESA " + numbered("", f + 1, 3) + " S.p.A."); break;
        case 1: address_raw.push_back(firm_name(f + 1) + " srl"); break;
        case 2: address_raw.push_back("Gruppo " + firm_name(f + 1)); break;
        default: address_ids.push_back(firm_ids[f]); break;
      }
    }
    for (std::size_t o : others) {
      authors.push_back({{"raw_name", "Staff " + std::to_string(++staff_counter)},
                         {"researcher_id", nullptr},
                         {"org_id", other_ids[o]}});
      address_ids.push_back(other_ids[o]);
    }
    j["authors"] = std::move(authors);
    j["address_org_ids"] = std::move(address_ids);
    if (!address_raw.empty()) j["address_raw"] = std::move(address_raw);
    pubs += j.dump() + "\n";
  }
  write_file(dir / "publications.jsonl", pubs);
}

void generate_grid(std::size_t m, std::size_t n, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  write_file(dir / "taxonomy.csv", "sds_id,sds_name,uda_id,uda_name\nS01,Sector 01,A01,Area 01\n");
  std::string orgs = "org_id,canonical_name,kind,country\n";
  std::string roster = "researcher_id,full_name,university_org_id,sds_id\n";
  nlohmann::ordered_json authors = nlohmann::ordered_json::array();
  nlohmann::ordered_json address = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < m; ++u) {
    std::string id = numbered("UNIV", u + 1, 3);
    orgs += id + ",Universita " + std::to_string(u + 1) + ",university,IT\n";
    roster += numbered("R", u + 1, 5) + ",Researcher " + std::to_string(u + 1) + "," + id + ",S01\n";
    authors.push_back({{"raw_name", "Researcher " + std::to_string(u + 1)},
                       {"researcher_id", numbered("R", u + 1, 5)},
                       {"org_id", id}});
    address.push_back(id);
  }
  if (m == 0) {
    // roster needs a university even when the publication lists none
    orgs += "UNIV900,Universita 900,university,IT\n";
    roster += "R90000,Researcher 900,UNIV900,S01\n";
  }
  for (std::size_t f = 0; f < n; ++f) {
    std::string id = numbered("FIRM", f + 1, 3);
    orgs += id + "," + firm_name(f + 1) + " S.p.A.,private_firm,IT\n";
    authors.push_back({{"raw_name", "Staff " + std::to_string(f + 1)}, {"researcher_id", nullptr},
                       {"org_id", id}});
    address.push_back(id);
  }
  orgs += "ORG001,Ente 001,public_org,IT\n";
  authors.push_back({{"raw_name", "Staff 0"}, {"researcher_id", nullptr}, {"org_id", "ORG001"}});
  address.push_back("ORG001");
  write_file(dir / "organizations.csv", orgs);
  write_file(dir / "roster.csv", roster);
  write_file(dir / "journals.csv",
             "journal_id,name,year,impact_factor,sci_categories\nJ0001,Journal 0001,2002,1.5,C01\n");
  nlohmann::ordered_json pub;
  pub["pub_id"] = "P0000001";
  pub["year"] = 2002;
  pub["journal_id"] = "J0001";
  pub["authors"] = std::move(authors);
  pub["address_org_ids"] = std::move(address);
  write_file(dir / "publications.jsonl", pub.dump() + "\n");
}

}  // namespace collabmap::harness
