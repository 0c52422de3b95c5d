#pragma once

// Data model shared by every analysis stage. A Corpus is built once by
// load_corpus() and is read-only afterwards.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace collabmap {

enum class OrgKind { university, private_firm, public_org, consortium, foundation, foreign_org };

std::string_view to_string(OrgKind kind);
std::optional<OrgKind> parse_org_kind(std::string_view s);

struct YearWindow {
  int min = 2001;
  int max = 2003;

  bool contains(int year) const { return year >= min && year <= max; }
  bool operator==(const YearWindow&) const = default;
};

struct SdsEntry {
  std::string sds_id;
  std::string sds_name;
  std::string uda_id;
  std::string uda_name;

  bool operator==(const SdsEntry&) const = default;
};

class Taxonomy {
 public:
  Taxonomy() = default;
  explicit Taxonomy(std::map<std::string, SdsEntry> sds);

  const std::map<std::string, SdsEntry>& sectors() const { return sds_; }
  /// uda_id -> uda_name
  const std::map<std::string, std::string>& areas() const { return udas_; }

  const SdsEntry* find(std::string_view sds_id) const;
  std::size_t size() const { return sds_.size(); }

  bool operator==(const Taxonomy&) const = default;

 private:
  std::map<std::string, SdsEntry> sds_;
  std::map<std::string, std::string> udas_;
};

struct Organization {
  std::string org_id;
  std::string canonical_name;
  OrgKind kind = OrgKind::university;
  std::string country;

  bool operator==(const Organization&) const = default;
};

using OrgRegistry = std::map<std::string, Organization, std::less<>>;

struct Journal {
  std::string journal_id;
  std::string name;
  int year = 0;
  double impact_factor = 0.0;
  std::vector<std::string> sci_categories;  // sorted, distinct, non-empty

  bool operator==(const Journal&) const = default;
};

/// Journal records keyed by (journal_id, year).
class JournalRegistry {
 public:
  using Key = std::pair<std::string, int>;

  void add(Journal journal);  // throws DuplicateId on a repeated key

  const std::map<Key, Journal>& records() const { return records_; }
  bool has_journal(std::string_view journal_id) const;
  std::vector<std::string> journal_ids() const;

  /// Record for `year`, or the nearest year inside `window` (earlier year on
  /// a tie). nullptr when the journal has no record in the window.
  const Journal* effective(std::string_view journal_id, int year, const YearWindow& window) const;

  bool operator==(const JournalRegistry&) const = default;

 private:
  std::map<Key, Journal> records_;
};

struct Researcher {
  std::string researcher_id;
  std::string full_name;
  std::string university_org_id;
  std::string sds_id;

  bool operator==(const Researcher&) const = default;
};

using Roster = std::map<std::string, Researcher, std::less<>>;

struct AuthorRef {
  std::string raw_name;
  std::optional<std::string> researcher_id;
  std::string org_id;

  bool operator==(const AuthorRef&) const = default;
};

struct Publication {
  std::string pub_id;
  int year = 0;
  std::string journal_id;
  std::vector<AuthorRef> authors;
  std::vector<std::string> address_org_ids;  // sorted, distinct

  bool operator==(const Publication&) const = default;
};

/// An address-field name that matched no alias.
struct UnresolvedAddress {
  std::string pub_id;
  std::string raw_name;

  auto operator<=>(const UnresolvedAddress&) const = default;
};

struct Corpus {
  Taxonomy taxonomy;
  OrgRegistry organizations;
  JournalRegistry journals;
  Roster researchers;
  std::vector<Publication> publications;  // sorted by pub_id
  YearWindow window;
  std::size_t excluded_by_window = 0;
  std::vector<UnresolvedAddress> unresolved_addresses;  // sorted

  bool operator==(const Corpus&) const = default;
};

}  // namespace collabmap
