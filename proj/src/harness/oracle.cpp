#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "collabmap/corpus.hpp"
#include "collabmap/error.hpp"
#include "collabmap/harness.hpp"

namespace collabmap::harness {

OracleCollabCounts oracle_collab_counts(const Corpus& corpus, const std::string& home_country) {
  OracleCollabCounts out;
  for (const Publication& pub : corpus.publications) {
    std::set<std::string> universities, firms;
    for (const std::string& id : pub.address_org_ids) {
      const Organization& org = corpus.organizations.at(id);
      if (org.kind == OrgKind::university) universities.insert(id);
      if (org.kind == OrgKind::private_firm && org.country == home_country) firms.insert(id);
    }
    // enumerate every (university, firm) pair
    std::uint64_t pairs = 0;
    for (const auto& u : universities) {
      for (const auto& f : firms) {
        (void)u;
        (void)f;
        ++pairs;
      }
    }
    int idx = 0;
    if (pairs > 0) {
      const bool many_u = universities.size() > 1, many_f = firms.size() > 1;
      idx = !many_u && !many_f ? 1 : many_u && !many_f ? 2 : !many_u ? 3 : 4;
      ++out.industry_articles;
    }
    out.total += pairs;
    ++out.articles_by_case[idx];
    out.collaborations_by_case[idx] += pairs;
  }
  return out;
}

OracleCollabCounts oracle_collab_counts(const std::string& data_dir, const YearWindow& window,
                                        const std::string& home_country) {
  return oracle_collab_counts(load_corpus(data_dir, window), home_country);
}

std::vector<double> oracle_percentiles(const std::vector<double>& values) {
  if (values.empty()) fail(ErrorCode::EmptySample, "no values to rank");
  std::vector<double> out;
  const double n = static_cast<double>(values.size());
  for (double v : values) {
    double below = 0, equal = 0;
    for (double w : values) {
      if (w < v) below += 1;
      else if (w == v) equal += 1;
    }
    out.push_back(100.0 * (below + 0.5 * equal) / n);
  }
  return out;
}

namespace {

// Journal record used for `year`: exact year, else nearest in window, earlier on a tie.
const Journal* pick_record(const Corpus& corpus, const std::string& journal_id, int year) {
  const Journal* best = nullptr;
  int best_gap = std::numeric_limits<int>::max();
  for (const auto& [key, j] : corpus.journals.records()) {
    if (key.first != journal_id || !corpus.window.contains(key.second)) continue;
    int gap = std::abs(key.second - year);
    if (gap < best_gap || (gap == best_gap && key.second < best->year)) {
      best = &j;
      best_gap = gap;
    }
  }
  return best;
}

}  // namespace

std::map<std::string, double> oracle_article_ifpr(const Corpus& corpus) {
  std::set<std::string> journal_ids;
  for (const auto& [key, j] : corpus.journals.records()) journal_ids.insert(key.first);

  std::map<std::string, double> out;
  for (const Publication& pub : corpus.publications) {
    const Journal* own = pick_record(corpus, pub.journal_id, pub.year);
    if (!own) continue;
    double sum = 0;
    for (const std::string& cat : own->sci_categories) {
      std::vector<double> peers;
      double mine = own->impact_factor;
      for (const auto& jid : journal_ids) {
        const Journal* rec = pick_record(corpus, jid, pub.year);
        if (!rec) continue;
        if (std::find(rec->sci_categories.begin(), rec->sci_categories.end(), cat) ==
            rec->sci_categories.end()) {
          continue;
        }
        peers.push_back(rec->impact_factor);
      }
      double below = 0, equal = 0;
      for (double v : peers) {
        if (v < mine) below += 1;
        else if (v == mine) equal += 1;
      }
      sum += 100.0 * (below + 0.5 * equal) / static_cast<double>(peers.size());
    }
    out[pub.pub_id] = sum / static_cast<double>(own->sci_categories.size());
  }
  return out;
}

namespace {

bool authored_by(const Publication& pub, const std::string& rid) {
  for (const AuthorRef& a : pub.authors) {
    if (a.researcher_id && *a.researcher_id == rid) return true;
  }
  return false;
}

}  // namespace

std::size_t oracle_output(const Corpus& corpus, const std::string& researcher_id) {
  std::size_t n = 0;
  for (const Publication& pub : corpus.publications) n += authored_by(pub, researcher_id);
  return n;
}

double oracle_fss(const Corpus& corpus, const std::string& researcher_id,
                  const std::map<std::string, double>& ifpr) {
  double total = 0;
  for (const Publication& pub : corpus.publications) {
    if (!authored_by(pub, researcher_id)) continue;
    total += ifpr.at(pub.pub_id) / 100.0 / static_cast<double>(pub.authors.size());
  }
  return total;
}

}  // namespace collabmap::harness
