#pragma once

// Organization-name consolidation: a deterministic alias table is the source
// of truth; Jaro-Winkler similarity only produces reviewable suggestions.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collabmap/model.hpp"

namespace collabmap::resolve {

/// Legal-form tokens removed from the end of a name. Tokens are stored in
/// normalized form, so "s.p.a" and "spa" collapse to one entry.
class LegalSuffixes {
 public:
  LegalSuffixes();  // spa, s.p.a, srl, s.r.l, snc, sas, inc, ltd, gmbh
  explicit LegalSuffixes(const std::vector<std::string>& tokens);

  bool contains(std::string_view token) const;
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;  // sorted
};

/// NFC -> casefold -> drop punctuation -> drop trailing legal-form tokens ->
/// collapse whitespace, repeated until the result no longer changes.
std::string normalize_org_name(std::string_view raw, const LegalSuffixes& suffixes = LegalSuffixes());

struct AliasRow {
  std::string alias;
  std::string org_id;
};

class AliasMap {
 public:
  AliasMap() = default;

  /// Registers every canonical name plus the explicit aliases. Throws
  /// AmbiguousAlias when one normalized form would point at two org_ids and
  /// DanglingReference when an alias names an unknown organization.
  static AliasMap build(const OrgRegistry& registry, const std::vector<AliasRow>& aliases,
                        const LegalSuffixes& suffixes = LegalSuffixes());

  const std::map<std::string, std::string>& entries() const { return entries_; }
  const LegalSuffixes& suffixes() const { return suffixes_; }
  const std::string* find(std::string_view normalized) const;

 private:
  std::map<std::string, std::string> entries_;
  LegalSuffixes suffixes_;
};

struct Resolution {
  std::optional<std::string> org_id;  // empty => Unresolved
  std::string raw;

  bool resolved() const { return org_id.has_value(); }
};

Resolution resolve_org(std::string_view raw, const OrgRegistry& registry, const AliasMap& aliases);

struct MatchSuggestion {
  std::string raw_name;
  std::string candidate_org_id;
  double score = 0.0;

  bool operator==(const MatchSuggestion&) const = default;
};

double jaro(std::u32string_view a, std::u32string_view b);
/// Prefix scale 0.1 over at most four leading code points, applied when the
/// Jaro similarity exceeds 0.7.
double jaro_winkler(std::u32string_view a, std::u32string_view b);
double jaro_winkler(std::string_view a_utf8, std::string_view b_utf8);

/// Candidates scoring at least `threshold` against a normalized canonical name
/// or alias, ordered by score descending, org_id ascending, raw_name ascending.
std::vector<MatchSuggestion> suggest_aliases(const std::vector<std::string>& unresolved,
                                             const OrgRegistry& registry, const AliasMap& aliases,
                                             double threshold = 0.9);

std::vector<AliasRow> load_aliases(const std::string& path);
LegalSuffixes load_suffixes(const std::string& path);
std::string suggestions_csv(const std::vector<MatchSuggestion>& suggestions);

}  // namespace collabmap::resolve
