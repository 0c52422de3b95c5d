#pragma once

// Institutional signature of each publication and the m x n collaboration
// count between universities and domestic private firms.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "collabmap/model.hpp"

namespace collabmap::collab {

enum class CollabCase { none, one_one, m_one, one_n, m_n };

std::string_view to_string(CollabCase c);
CollabCase case_for(std::size_t m, std::size_t n);

struct CollaborationProfile {
  std::string pub_id;
  std::vector<std::string> universities;    // sorted, |.| = m
  std::vector<std::string> domestic_firms;  // sorted, |.| = n
  std::vector<std::string> other_orgs;      // sorted
  CollabCase collab_case = CollabCase::none;
  std::uint64_t collab_count = 0;

  std::size_t m() const { return universities.size(); }
  std::size_t n() const { return domestic_firms.size(); }
  /// At least two distinct organizations, one of them a university.
  bool extramural() const;

  bool operator==(const CollaborationProfile&) const = default;
};

struct CollabEdge {
  std::string pub_id;
  std::string university_org_id;
  std::string firm_org_id;

  auto operator<=>(const CollabEdge&) const = default;
};

inline constexpr std::string_view kDefaultHomeCountry = "IT";

CollaborationProfile classify_publication(const Publication& pub, const OrgRegistry& registry,
                                          std::string_view home_country = kDefaultHomeCountry);

std::vector<CollaborationProfile> classify_all(const Corpus& corpus,
                                               std::string_view home_country = kDefaultHomeCountry,
                                               unsigned threads = 1);

struct CollabSummary {
  std::uint64_t total_collaborations = 0;
  std::uint64_t industry_articles = 0;
  // indexed by CollabCase: none, one_one, m_one, one_n, m_n
  std::array<std::uint64_t, 5> articles_by_case{};
  std::array<std::uint64_t, 5> collaborations_by_case{};

  bool operator==(const CollabSummary&) const = default;
};

CollabSummary count_collaborations(const std::vector<CollaborationProfile>& profiles);
CollabSummary count_collaborations(const Corpus& corpus,
                                   std::string_view home_country = kDefaultHomeCountry,
                                   unsigned threads = 1);

/// Sorted by (pub_id, university_org_id, firm_org_id).
std::vector<CollabEdge> extract_edges(const std::vector<CollaborationProfile>& profiles);
std::vector<CollabEdge> extract_edges(const Corpus& corpus,
                                      std::string_view home_country = kDefaultHomeCountry);
std::string edges_csv(const std::vector<CollabEdge>& edges);

enum class Selector { all, extramural_collab, industry_coauthored };

/// Accepts "all", "extramural_collab"/"collab", "industry_coauthored"/"industry".
Selector parse_selector(std::string_view name);
std::string_view to_string(Selector s);
bool selects(Selector s, const CollaborationProfile& profile);

std::set<std::string> subset(const Corpus& corpus, Selector selector,
                             std::string_view home_country = kDefaultHomeCountry);
std::set<std::string> subset(const Corpus& corpus, std::string_view selector,
                             std::string_view home_country = kDefaultHomeCountry);

}  // namespace collabmap::collab
