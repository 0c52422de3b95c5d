#include "collabmap/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "collabmap/csv.hpp"
#include "collabmap/error.hpp"
#include "collabmap/resolve.hpp"
#include "collabmap/text.hpp"

namespace collabmap {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string where(const std::string& source, std::size_t line) {
  return source + ": line " + std::to_string(line);
}

int parse_int(const std::string& s, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::ParseError, context + ": not an integer: '" + s + "'");
  }
  return value;
}

double parse_real(const std::string& s, const std::string& context) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    fail(ErrorCode::ParseError, context + ": not a number: '" + s + "'");
  }
  return value;
}

std::string require_file(const fs::path& dir, const char* name) {
  fs::path p = dir / name;
  if (!fs::is_regular_file(p)) fail(ErrorCode::MissingFile, p.string());
  return p.string();
}

std::string field(const csv::Table& t, const csv::Row& r, std::string_view column) {
  return text::nfc(text::trim(t.get(r, column)));
}

OrgRegistry load_organizations(const std::string& path) {
  csv::Table t(csv::read_file(path), {"org_id", "canonical_name", "kind", "country"}, path);
  OrgRegistry orgs;
  for (const auto& row : t.rows()) {
    Organization org;
    org.org_id = field(t, row, "org_id");
    org.canonical_name = field(t, row, "canonical_name");
    std::string kind = field(t, row, "kind");
    auto parsed = parse_org_kind(kind);
    if (!parsed) fail(ErrorCode::InvalidRecord, where(path, row.line) + ": unknown kind '" + kind + "'");
    org.kind = *parsed;
    org.country = field(t, row, "country");
    if (org.org_id.empty()) fail(ErrorCode::InvalidRecord, where(path, row.line) + ": empty org_id");
    if (org.country.size() != 2 || !std::all_of(org.country.begin(), org.country.end(),
                                                [](char c) { return c >= 'A' && c <= 'Z'; })) {
      fail(ErrorCode::InvalidRecord,
           where(path, row.line) + ": country must be an ISO-3166 alpha-2 code");
    }
    std::string id = org.org_id;
    if (!orgs.emplace(id, std::move(org)).second) fail(ErrorCode::DuplicateId, "organization " + id);
  }
  return orgs;
}

JournalRegistry load_journals(const std::string& path) {
  csv::Table t(csv::read_file(path),
               {"journal_id", "name", "year", "impact_factor", "sci_categories"}, path);
  JournalRegistry journals;
  for (const auto& row : t.rows()) {
    std::string ctx = where(path, row.line);
    Journal j;
    j.journal_id = field(t, row, "journal_id");
    j.name = field(t, row, "name");
    j.year = parse_int(field(t, row, "year"), ctx);
    j.impact_factor = parse_real(field(t, row, "impact_factor"), ctx);
    if (j.impact_factor < 0) fail(ErrorCode::InvalidRecord, ctx + ": negative impact factor");
    std::string cats = field(t, row, "sci_categories");
    std::size_t start = 0;
    while (start <= cats.size()) {
      std::size_t end = cats.find(';', start);
      if (end == std::string::npos) end = cats.size();
      std::string code = text::trim(std::string_view(cats).substr(start, end - start));
      if (!code.empty()) j.sci_categories.push_back(code);
      start = end + 1;
    }
    if (j.sci_categories.empty()) fail(ErrorCode::InvalidRecord, ctx + ": no SCI categories");
    std::sort(j.sci_categories.begin(), j.sci_categories.end());
    if (std::adjacent_find(j.sci_categories.begin(), j.sci_categories.end()) !=
        j.sci_categories.end()) {
      fail(ErrorCode::InvalidRecord, ctx + ": duplicate SCI category");
    }
    if (j.journal_id.empty()) fail(ErrorCode::InvalidRecord, ctx + ": empty journal_id");
    journals.add(std::move(j));
  }
  return journals;
}

Roster load_roster(const std::string& path, const Taxonomy& taxonomy, const OrgRegistry& orgs) {
  csv::Table t(csv::read_file(path), {"researcher_id", "full_name", "university_org_id", "sds_id"},
               path);
  Roster roster;
  for (const auto& row : t.rows()) {
    Researcher r;
    r.researcher_id = field(t, row, "researcher_id");
    r.full_name = field(t, row, "full_name");
    r.university_org_id = field(t, row, "university_org_id");
    r.sds_id = field(t, row, "sds_id");
    auto org = orgs.find(r.university_org_id);
    if (org == orgs.end()) fail(ErrorCode::DanglingReference, "organization " + r.university_org_id);
    if (org->second.kind != OrgKind::university) {
      fail(ErrorCode::InvalidRecord, where(path, row.line) + ": " + r.university_org_id +
                                         " is not a university");
    }
    if (!taxonomy.find(r.sds_id)) fail(ErrorCode::DanglingReference, "sds " + r.sds_id);
    std::string id = r.researcher_id;
    if (id.empty()) fail(ErrorCode::InvalidRecord, where(path, row.line) + ": empty researcher_id");
    if (!roster.emplace(id, std::move(r)).second) fail(ErrorCode::DuplicateId, "researcher " + id);
  }
  return roster;
}

std::string json_string(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    fail(ErrorCode::ParseError, ctx + ": '" + key + "' must be a string");
  }
  return text::nfc(text::trim(it->get<std::string>()));
}

std::vector<std::string> json_strings(const json& obj, const char* key, const std::string& ctx,
                                      bool required) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) fail(ErrorCode::ParseError, ctx + ": missing '" + key + "'");
    return out;
  }
  if (!it->is_array()) fail(ErrorCode::ParseError, ctx + ": '" + key + "' must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) fail(ErrorCode::ParseError, ctx + ": '" + key + "' entries must be strings");
    out.push_back(text::nfc(text::trim(v.get<std::string>())));
  }
  return out;
}

struct RawPublication {
  Publication pub;
  std::vector<std::string> address_raw;
};

RawPublication parse_publication(const std::string& line, const std::string& ctx) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, ctx + ": " + e.what());
  }
  if (!obj.is_object()) fail(ErrorCode::ParseError, ctx + ": expected a JSON object");
  RawPublication raw;
  Publication& p = raw.pub;
  p.pub_id = json_string(obj, "pub_id", ctx);
  auto year = obj.find("year");
  if (year == obj.end() || !year->is_number_integer()) {
    fail(ErrorCode::ParseError, ctx + ": 'year' must be an integer");
  }
  p.year = year->get<int>();
  p.journal_id = json_string(obj, "journal_id", ctx);
  auto authors = obj.find("authors");
  if (authors == obj.end() || !authors->is_array()) {
    fail(ErrorCode::ParseError, ctx + ": 'authors' must be an array");
  }
  for (const auto& a : *authors) {
    if (!a.is_object()) fail(ErrorCode::ParseError, ctx + ": author must be an object");
    AuthorRef ref;
    ref.raw_name = json_string(a, "raw_name", ctx);
    ref.org_id = json_string(a, "org_id", ctx);
    auto rid = a.find("researcher_id");
    if (rid != a.end() && !rid->is_null()) {
      if (!rid->is_string()) fail(ErrorCode::ParseError, ctx + ": 'researcher_id' must be a string or null");
      ref.researcher_id = text::trim(rid->get<std::string>());
    }
    p.authors.push_back(std::move(ref));
  }
  p.address_org_ids = json_strings(obj, "address_org_ids", ctx, true);
  raw.address_raw = json_strings(obj, "address_raw", ctx, false);
  return raw;
}

void check_publication(const Publication& p, const Corpus& c) {
  const std::string ctx = "publication " + p.pub_id;
  if (p.authors.empty()) fail(ErrorCode::InvalidRecord, ctx + ": no authors");
  if (!c.journals.has_journal(p.journal_id)) {
    fail(ErrorCode::DanglingReference, "journal " + p.journal_id + " (" + ctx + ")");
  }
  for (const auto& org : p.address_org_ids) {
    if (!c.organizations.count(org)) {
      fail(ErrorCode::DanglingReference, "organization " + org + " (" + ctx + ")");
    }
  }
  for (const auto& a : p.authors) {
    if (!c.organizations.count(a.org_id)) {
      fail(ErrorCode::DanglingReference, "organization " + a.org_id + " (" + ctx + ")");
    }
    if (!a.researcher_id) continue;
    auto r = c.researchers.find(*a.researcher_id);
    if (r == c.researchers.end()) {
      fail(ErrorCode::DanglingReference, "researcher " + *a.researcher_id + " (" + ctx + ")");
    }
    if (!std::binary_search(p.address_org_ids.begin(), p.address_org_ids.end(),
                            r->second.university_org_id)) {
      fail(ErrorCode::InvalidRecord, ctx + ": university " + r->second.university_org_id +
                                         " of researcher " + r->second.researcher_id +
                                         " missing from the address field");
    }
  }
}

}  // namespace

Taxonomy load_taxonomy(const std::string& path) {
  csv::Table t(csv::read_file(path), {"sds_id", "sds_name", "uda_id", "uda_name"}, path);
  if (t.rows().empty()) fail(ErrorCode::ParseError, path + ": no sector rows");
  std::map<std::string, SdsEntry> sds;
  for (const auto& row : t.rows()) {
    SdsEntry e{field(t, row, "sds_id"), field(t, row, "sds_name"), field(t, row, "uda_id"),
               field(t, row, "uda_name")};
    if (e.sds_id.empty()) fail(ErrorCode::InvalidRecord, where(path, row.line) + ": empty sds_id");
    if (e.uda_id.empty()) fail(ErrorCode::DanglingUda, where(path, row.line) + ": empty uda_id");
    std::string id = e.sds_id;
    if (!sds.emplace(id, std::move(e)).second) fail(ErrorCode::DuplicateId, "sds " + id);
  }
  return Taxonomy(std::move(sds));
}

Corpus load_corpus(const std::string& data_dir, const YearWindow& window) {
  return load_corpus(data_dir, LoadOptions{window});
}

Corpus load_corpus(const std::string& data_dir, const LoadOptions& options) {
  if (options.window.min > options.window.max) {
    fail(ErrorCode::InvalidArgument, "empty publication window");
  }
  const fs::path dir(data_dir);
  const std::string taxonomy_path = require_file(dir, "taxonomy.csv");
  const std::string orgs_path = require_file(dir, "organizations.csv");
  const std::string journals_path = require_file(dir, "journals.csv");
  const std::string roster_path = require_file(dir, "roster.csv");
  const std::string pubs_path = require_file(dir, "publications.jsonl");

  Corpus c;
  c.window = options.window;
  c.taxonomy = load_taxonomy(taxonomy_path);
  c.organizations = load_organizations(orgs_path);
  c.journals = load_journals(journals_path);
  c.researchers = load_roster(roster_path, c.taxonomy, c.organizations);

  resolve::LegalSuffixes suffixes;
  if (fs::is_regular_file(dir / "suffixes.txt")) {
    suffixes = resolve::load_suffixes((dir / "suffixes.txt").string());
  }
  std::vector<resolve::AliasRow> alias_rows;
  if (fs::is_regular_file(dir / "aliases.csv")) {
    alias_rows = resolve::load_aliases((dir / "aliases.csv").string());
  }
  const resolve::AliasMap aliases = resolve::AliasMap::build(c.organizations, alias_rows, suffixes);

  const std::string content = csv::read_file(pubs_path);
  std::set<std::string> seen;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    ++line_no;
    std::string line = text::trim(std::string_view(content).substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    RawPublication raw = parse_publication(line, where(pubs_path, line_no));
    Publication& p = raw.pub;
    if (!seen.insert(p.pub_id).second) fail(ErrorCode::DuplicateId, "publication " + p.pub_id);
    if (!c.window.contains(p.year)) {
      ++c.excluded_by_window;
      continue;
    }
    for (const auto& name : raw.address_raw) {
      auto r = resolve::resolve_org(name, c.organizations, aliases);
      if (r.resolved()) {
        p.address_org_ids.push_back(*r.org_id);
      } else {
        c.unresolved_addresses.push_back({p.pub_id, name});
      }
    }
    std::sort(p.address_org_ids.begin(), p.address_org_ids.end());
    p.address_org_ids.erase(std::unique(p.address_org_ids.begin(), p.address_org_ids.end()),
                            p.address_org_ids.end());
    check_publication(p, c);
    c.publications.push_back(std::move(p));
  }
  if (c.publications.empty()) fail(ErrorCode::EmptyCorpus, pubs_path);

  std::sort(c.publications.begin(), c.publications.end(),
            [](const Publication& a, const Publication& b) { return a.pub_id < b.pub_id; });
  std::sort(c.unresolved_addresses.begin(), c.unresolved_addresses.end());
  return c;
}

ValidationReport validate_corpus(const Corpus& c) {
  ValidationReport report;
  std::set<std::string> referenced;
  for (const auto& [id, r] : c.researchers) {
    referenced.insert(r.university_org_id);
    if (!c.organizations.count(r.university_org_id)) {
      report.errors.push_back({"DanglingReference", "researcher", id, r.university_org_id});
    }
    if (!c.taxonomy.find(r.sds_id)) {
      report.errors.push_back({"DanglingReference", "researcher", id, r.sds_id});
    }
  }
  for (const auto& p : c.publications) {
    if (!c.window.contains(p.year)) {
      report.errors.push_back({"OutsideWindow", "publication", p.pub_id, std::to_string(p.year)});
    }
    if (!c.journals.has_journal(p.journal_id)) {
      report.errors.push_back({"DanglingReference", "publication", p.pub_id, p.journal_id});
    }
    for (const auto& org : p.address_org_ids) {
      referenced.insert(org);
      if (!c.organizations.count(org)) {
        report.errors.push_back({"DanglingReference", "publication", p.pub_id, org});
      }
    }
    for (const auto& a : p.authors) {
      referenced.insert(a.org_id);
      if (!c.organizations.count(a.org_id)) {
        report.errors.push_back({"DanglingReference", "publication", p.pub_id, a.org_id});
      }
      if (!a.researcher_id) {
        report.warnings.push_back({"UnlinkedAuthor", "publication", p.pub_id, a.raw_name});
      } else if (!c.researchers.count(*a.researcher_id)) {
        report.errors.push_back({"DanglingReference", "publication", p.pub_id, *a.researcher_id});
      }
    }
  }
  for (const auto& u : c.unresolved_addresses) {
    report.warnings.push_back({"UnresolvedAddress", "publication", u.pub_id, u.raw_name});
  }
  for (const auto& [id, org] : c.organizations) {
    if (!referenced.count(id)) {
      report.warnings.push_back({"UnreferencedOrganization", "organization", id, org.canonical_name});
    }
  }
  auto order = [](const Issue& a, const Issue& b) {
    return std::tie(a.entity, a.id, a.code, a.detail) < std::tie(b.entity, b.id, b.code, b.detail);
  };
  std::sort(report.errors.begin(), report.errors.end(), order);
  std::sort(report.warnings.begin(), report.warnings.end(), order);
  return report;
}

std::string render_validation(const Corpus& c, const ValidationReport& report) {
  std::string out;
  out += "# publications=" + std::to_string(c.publications.size()) +
         " organizations=" + std::to_string(c.organizations.size()) +
         " journals=" + std::to_string(c.journals.journal_ids().size()) +
         " researchers=" + std::to_string(c.researchers.size()) +
         " sectors=" + std::to_string(c.taxonomy.size()) +
         " excluded_by_window=" + std::to_string(c.excluded_by_window) + "\n";
  out += "# errors=" + std::to_string(report.errors.size()) +
         " warnings=" + std::to_string(report.warnings.size()) + "\n";
  out += "severity,code,entity,id,detail\n";
  for (const auto& i : report.errors) {
    out += csv::join({"error", i.code, i.entity, i.id, i.detail}) + "\n";
  }
  for (const auto& i : report.warnings) {
    out += csv::join({"warning", i.code, i.entity, i.id, i.detail}) + "\n";
  }
  return out;
}

}  // namespace collabmap
