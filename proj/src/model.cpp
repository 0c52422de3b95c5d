#include "collabmap/model.hpp"

#include <cstdlib>
#include <limits>

#include "collabmap/error.hpp"

namespace collabmap {

std::string_view to_string(OrgKind kind) {
  switch (kind) {
    case OrgKind::university: return "university";
    case OrgKind::private_firm: return "private_firm";
    case OrgKind::public_org: return "public_org";
    case OrgKind::consortium: return "consortium";
    case OrgKind::foundation: return "foundation";
    case OrgKind::foreign_org: return "foreign_org";
  }
  return "unknown";
}

std::optional<OrgKind> parse_org_kind(std::string_view s) {
  for (auto k : {OrgKind::university, OrgKind::private_firm, OrgKind::public_org,
                 OrgKind::consortium, OrgKind::foundation, OrgKind::foreign_org}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Taxonomy::Taxonomy(std::map<std::string, SdsEntry> sds) : sds_(std::move(sds)) {
  for (const auto& [id, entry] : sds_) {
    if (entry.uda_id.empty()) fail(ErrorCode::DanglingUda, "sector " + id + " has no area");
    auto [it, inserted] = udas_.emplace(entry.uda_id, entry.uda_name);
    if (!inserted && it->second != entry.uda_name) {
      fail(ErrorCode::DanglingUda, "area " + entry.uda_id + " named both '" + it->second +
                                       "' and '" + entry.uda_name + "'");
    }
  }
}

const SdsEntry* Taxonomy::find(std::string_view sds_id) const {
  auto it = sds_.find(std::string(sds_id));
  return it == sds_.end() ? nullptr : &it->second;
}

void JournalRegistry::add(Journal journal) {
  Key key{journal.journal_id, journal.year};
  if (records_.count(key)) {
    fail(ErrorCode::DuplicateId,
         "journal " + journal.journal_id + " year " + std::to_string(journal.year));
  }
  records_.emplace(std::move(key), std::move(journal));
}

bool JournalRegistry::has_journal(std::string_view journal_id) const {
  auto it = records_.lower_bound(Key{std::string(journal_id), std::numeric_limits<int>::min()});
  return it != records_.end() && it->first.first == journal_id;
}

std::vector<std::string> JournalRegistry::journal_ids() const {
  std::vector<std::string> ids;
  for (const auto& [key, j] : records_) {
    if (ids.empty() || ids.back() != key.first) ids.push_back(key.first);
  }
  return ids;
}

const Journal* JournalRegistry::effective(std::string_view journal_id, int year,
                                          const YearWindow& window) const {
  const Journal* best = nullptr;
  int best_distance = 0;
  auto it = records_.lower_bound(Key{std::string(journal_id), std::numeric_limits<int>::min()});
  for (; it != records_.end() && it->first.first == journal_id; ++it) {
    int y = it->first.second;
    if (y != year && !window.contains(y)) continue;
    int d = std::abs(y - year);
    // ascending year order keeps the earlier record on ties
    if (!best || d < best_distance) {
      best = &it->second;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace collabmap
