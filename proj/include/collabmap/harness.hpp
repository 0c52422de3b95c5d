#pragma once

// Synthetic corpus generator and brute-force oracles. The oracles share only
// the file loader with the engine; every count and rank is recomputed by
// direct enumeration.
//
// Generator PRNG: std::mt19937_64 seeded with `seed`. Integers in [0, n) use
// rejection sampling on the raw 64-bit output; reals in [0, 1) use the top 53
// bits. Draw order: journals (category count, categories, per-year presence,
// impact factor), researchers (sector), then publications in id order (year,
// journal, university count, universities, industry flag, firm count, firms,
// other-org flag, other org, per-university author count and authors, per-firm
// address spelling). Taxonomy and organizations involve no draws.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "collabmap/model.hpp"

namespace collabmap::harness {

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_pubs = 1000;
  std::size_t n_universities = 10;
  std::size_t n_firms = 20;
  std::size_t n_public_orgs = 6;
  std::size_t n_researchers = 300;
  std::size_t n_journals = 30;
  std::size_t n_sds = 12;
  std::size_t n_udas = 4;
  std::size_t n_categories = 8;
  double industry_rate = 0.05;
  double extramural_rate = 0.4;
  std::size_t max_authors = 4;  // academic authors per university on one byline
  int year_min = 2001;
  int year_max = 2003;
};

/// Throws InvalidConfig.
void validate_config(const SynthConfig& config);

/// Writes taxonomy.csv, organizations.csv, journals.csv, roster.csv,
/// publications.jsonl and aliases.csv into `out_dir` (created if needed).
void generate(const SynthConfig& config, const std::string& out_dir);

/// A corpus whose single publication has `m` universities and `n` domestic
/// firms on its address field, plus one public organization.
void generate_grid(std::size_t m, std::size_t n, const std::string& out_dir);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  double unit();                          // uniform in [0, 1)
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct OracleCollabCounts {
  std::uint64_t total = 0;
  std::uint64_t industry_articles = 0;
  std::array<std::uint64_t, 5> articles_by_case{};  // none, 1x1, mx1, 1xn, mxn
  std::array<std::uint64_t, 5> collaborations_by_case{};
};

OracleCollabCounts oracle_collab_counts(const Corpus& corpus, const std::string& home_country = "IT");
OracleCollabCounts oracle_collab_counts(const std::string& data_dir, const YearWindow& window = {},
                                        const std::string& home_country = "IT");

/// O(n^2) midrank percentiles. Throws EmptySample.
std::vector<double> oracle_percentiles(const std::vector<double>& values);

/// IF_pr of every publication, keyed by pub_id; absent when unrankable.
std::map<std::string, double> oracle_article_ifpr(const Corpus& corpus);

std::size_t oracle_output(const Corpus& corpus, const std::string& researcher_id);
double oracle_fss(const Corpus& corpus, const std::string& researcher_id,
                  const std::map<std::string, double>& ifpr);

}  // namespace collabmap::harness
