#pragma once

// Loading and validation of a data directory:
//   taxonomy.csv       sds_id,sds_name,uda_id,uda_name
//   organizations.csv  org_id,canonical_name,kind,country
//   journals.csv       journal_id,name,year,impact_factor,sci_categories (';'-separated)
//   roster.csv         researcher_id,full_name,university_org_id,sds_id
//   publications.jsonl {pub_id, year, journal_id, authors:[{raw_name, researcher_id|null, org_id}],
//                       address_org_ids:[...], address_raw:[...] (optional)}
// Optional: aliases.csv (alias,org_id) and suffixes.txt (one legal-form token per line).
// Raw address names are resolved through the alias table and merged into
// address_org_ids.

#include <string>
#include <vector>

#include "collabmap/model.hpp"

namespace collabmap {

struct LoadOptions {
  YearWindow window;
};

Taxonomy load_taxonomy(const std::string& path);

Corpus load_corpus(const std::string& data_dir, const LoadOptions& options = {});
Corpus load_corpus(const std::string& data_dir, const YearWindow& window);

struct Issue {
  std::string code;    // e.g. "UnlinkedAuthor"
  std::string entity;  // "publication", "organization", ...
  std::string id;
  std::string detail;

  auto operator<=>(const Issue&) const = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool operator==(const ValidationReport&) const = default;
};

/// Never throws. Issues are sorted by (entity, id, code, detail).
ValidationReport validate_corpus(const Corpus& corpus);

std::string render_validation(const Corpus& corpus, const ValidationReport& report);

}  // namespace collabmap
