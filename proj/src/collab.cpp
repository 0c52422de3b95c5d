#include "collabmap/collab.hpp"

#include <algorithm>

#include "collabmap/csv.hpp"
#include "collabmap/error.hpp"
#include "collabmap/parallel.hpp"

namespace collabmap::collab {

std::string_view to_string(CollabCase c) {
  switch (c) {
    case CollabCase::none: return "none";
    case CollabCase::one_one: return "one_one";
    case CollabCase::m_one: return "m_one";
    case CollabCase::one_n: return "one_n";
    case CollabCase::m_n: return "m_n";
  }
  return "none";
}

CollabCase case_for(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) return CollabCase::none;
  if (m == 1) return n == 1 ? CollabCase::one_one : CollabCase::one_n;
  return n == 1 ? CollabCase::m_one : CollabCase::m_n;
}

bool CollaborationProfile::extramural() const {
  return m() >= 1 && universities.size() + domestic_firms.size() + other_orgs.size() >= 2;
}

CollaborationProfile classify_publication(const Publication& pub, const OrgRegistry& registry,
                                          std::string_view home_country) {
  CollaborationProfile p;
  p.pub_id = pub.pub_id;
  std::vector<std::string> ids = pub.address_org_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const auto& id : ids) {
    auto it = registry.find(id);
    if (it == registry.end()) fail(ErrorCode::DanglingReference, "organization " + id);
    const Organization& org = it->second;
    if (org.kind == OrgKind::university) {
      p.universities.push_back(id);
    } else if (org.kind == OrgKind::private_firm && org.country == home_country) {
      p.domestic_firms.push_back(id);
    } else {
      p.other_orgs.push_back(id);
    }
  }
  p.collab_case = case_for(p.m(), p.n());
  p.collab_count = p.collab_case == CollabCase::none
                       ? 0
                       : static_cast<std::uint64_t>(p.m()) * static_cast<std::uint64_t>(p.n());
  return p;
}

std::vector<CollaborationProfile> classify_all(const Corpus& corpus, std::string_view home_country,
                                               unsigned threads) {
  std::vector<CollaborationProfile> out(corpus.publications.size());
  parallel_for(out.size(), threads, [&](std::size_t i) {
    out[i] = classify_publication(corpus.publications[i], corpus.organizations, home_country);
  });
  return out;
}

CollabSummary count_collaborations(const std::vector<CollaborationProfile>& profiles) {
  CollabSummary s;
  for (const auto& p : profiles) {
    auto k = static_cast<std::size_t>(p.collab_case);
    s.articles_by_case[k] += 1;
    s.collaborations_by_case[k] += p.collab_count;
    s.total_collaborations += p.collab_count;
    if (p.collab_count > 0) ++s.industry_articles;
  }
  return s;
}

CollabSummary count_collaborations(const Corpus& corpus, std::string_view home_country,
                                   unsigned threads) {
  return count_collaborations(classify_all(corpus, home_country, threads));
}

std::vector<CollabEdge> extract_edges(const std::vector<CollaborationProfile>& profiles) {
  std::vector<CollabEdge> edges;
  for (const auto& p : profiles) {
    for (const auto& u : p.universities) {
      for (const auto& f : p.domestic_firms) edges.push_back({p.pub_id, u, f});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<CollabEdge> extract_edges(const Corpus& corpus, std::string_view home_country) {
  return extract_edges(classify_all(corpus, home_country));
}

std::string edges_csv(const std::vector<CollabEdge>& edges) {
  std::string out = "pub_id,university_org_id,firm_org_id\n";
  for (const auto& e : edges) {
    out += csv::join({e.pub_id, e.university_org_id, e.firm_org_id});
    out.push_back('\n');
  }
  return out;
}

Selector parse_selector(std::string_view name) {
  if (name == "all") return Selector::all;
  if (name == "extramural_collab" || name == "collab") return Selector::extramural_collab;
  if (name == "industry_coauthored" || name == "industry") return Selector::industry_coauthored;
  fail(ErrorCode::UnknownSelector, std::string(name));
}

std::string_view to_string(Selector s) {
  switch (s) {
    case Selector::all: return "all";
    case Selector::extramural_collab: return "extramural_collab";
    case Selector::industry_coauthored: return "industry_coauthored";
  }
  return "all";
}

bool selects(Selector s, const CollaborationProfile& profile) {
  switch (s) {
    case Selector::all: return true;
    case Selector::extramural_collab: return profile.extramural();
    case Selector::industry_coauthored: return profile.collab_count >= 1;
  }
  return false;
}

std::set<std::string> subset(const Corpus& corpus, Selector selector, std::string_view home_country) {
  std::set<std::string> ids;
  for (const auto& pub : corpus.publications) {
    if (selects(selector, classify_publication(pub, corpus.organizations, home_country))) {
      ids.insert(pub.pub_id);
    }
  }
  return ids;
}

std::set<std::string> subset(const Corpus& corpus, std::string_view selector,
                             std::string_view home_country) {
  return subset(corpus, parse_selector(selector), home_country);
}

}  // namespace collabmap::collab
