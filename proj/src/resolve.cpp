#include "collabmap/resolve.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "collabmap/csv.hpp"
#include "collabmap/error.hpp"
#include "collabmap/text.hpp"

namespace collabmap::resolve {
namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  return *norm;
}

// NFC, casefold, punctuation removal and whitespace tokenization.
std::vector<std::string> tokenize(std::string_view raw) {
  const icu::Normalizer2& nfc = nfc_instance();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  s = nfc.normalize(s, status);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  s = nfc.normalize(s, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");

  std::vector<std::string> tokens;
  icu::UnicodeString current;
  auto flush = [&] {
    if (current.isEmpty()) return;
    std::string utf8;
    current.toUTF8String(utf8);
    tokens.push_back(std::move(utf8));
    current.remove();
  };
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      flush();
    } else if (!u_ispunct(c)) {
      current.append(c);
    }
  }
  flush();
  return tokens;
}

std::string normalize_once(std::string_view raw, const LegalSuffixes& suffixes) {
  std::vector<std::string> tokens = tokenize(raw);
  while (!tokens.empty() && suffixes.contains(tokens.back())) tokens.pop_back();
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  // Removing punctuation can leave a combining mark next to a new base
  // character, so the joined form is re-composed.
  return text::nfc(out);
}

std::vector<std::string> normalize_tokens(const std::vector<std::string>& raw_tokens) {
  std::vector<std::string> out;
  for (const auto& t : raw_tokens) {
    auto parts = tokenize(t);
    if (parts.size() != 1) {
      if (parts.empty()) continue;
      fail(ErrorCode::InvalidRecord, "legal suffix '" + t + "' is not a single token");
    }
    out.push_back(parts.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LegalSuffixes::LegalSuffixes()
    : LegalSuffixes(std::vector<std::string>{"spa", "s.p.a", "srl", "s.r.l", "snc", "sas", "inc",
                                             "ltd", "gmbh"}) {}

LegalSuffixes::LegalSuffixes(const std::vector<std::string>& tokens)
    : tokens_(normalize_tokens(tokens)) {}

bool LegalSuffixes::contains(std::string_view token) const {
  return std::binary_search(tokens_.begin(), tokens_.end(), token);
}

std::string normalize_org_name(std::string_view raw, const LegalSuffixes& suffixes) {
  std::string current = normalize_once(raw, suffixes);
  for (int i = 0; i < 16; ++i) {
    std::string next = normalize_once(current, suffixes);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

AliasMap AliasMap::build(const OrgRegistry& registry, const std::vector<AliasRow>& aliases,
                         const LegalSuffixes& suffixes) {
  AliasMap map;
  map.suffixes_ = suffixes;
  auto add = [&](const std::string& name, const std::string& org_id) {
    std::string key = normalize_org_name(name, suffixes);
    if (key.empty()) return;
    auto [it, inserted] = map.entries_.emplace(key, org_id);
    if (!inserted && it->second != org_id) {
      fail(ErrorCode::AmbiguousAlias,
           "'" + key + "' claimed by " + it->second + " and " + org_id);
    }
  };
  for (const auto& [id, org] : registry) add(org.canonical_name, id);
  for (const auto& row : aliases) {
    if (!registry.count(row.org_id)) {
      fail(ErrorCode::DanglingReference, "alias '" + row.alias + "' -> organization " + row.org_id);
    }
    add(row.alias, row.org_id);
  }
  return map;
}

const std::string* AliasMap::find(std::string_view normalized) const {
  auto it = entries_.find(std::string(normalized));
  return it == entries_.end() ? nullptr : &it->second;
}

Resolution resolve_org(std::string_view raw, const OrgRegistry& registry, const AliasMap& aliases) {
  Resolution r;
  r.raw = std::string(raw);
  const std::string* hit = aliases.find(normalize_org_name(raw, aliases.suffixes()));
  if (hit && registry.count(*hit)) r.org_id = *hit;
  return r;
}

double jaro(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t window = std::max<std::size_t>(std::max(a.size(), b.size()) / 2, 1) - 1;
  std::vector<bool> a_hit(a.size(), false), b_hit(b.size(), false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t lo = i > window ? i - window : 0;
    std::size_t hi = std::min(i + window + 1, b.size());
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_hit[j] || a[i] != b[j]) continue;
      a_hit[i] = b_hit[j] = true;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;
  std::size_t half_transpositions = 0;
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    if (!a_hit[i]) continue;
    while (!b_hit[j]) ++j;
    if (a[i] != b[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions / 2);
  return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) + (m - t) / m) / 3.0;
}

double jaro_winkler(std::u32string_view a, std::u32string_view b) {
  double j = jaro(a, b);
  if (j <= 0.7) return j;
  std::size_t prefix = 0;
  while (prefix < 4 && prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

double jaro_winkler(std::string_view a_utf8, std::string_view b_utf8) {
  return jaro_winkler(text::to_code_points(a_utf8), text::to_code_points(b_utf8));
}

std::vector<MatchSuggestion> suggest_aliases(const std::vector<std::string>& unresolved,
                                             const OrgRegistry& registry, const AliasMap& aliases,
                                             double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "threshold must be in (0, 1]");
  }
  std::vector<std::pair<std::u32string, std::string>> forms;
  for (const auto& [form, org_id] : aliases.entries()) {
    if (registry.count(org_id)) forms.emplace_back(text::to_code_points(form), org_id);
  }

  std::vector<MatchSuggestion> out;
  for (const auto& raw : unresolved) {
    std::u32string name = text::to_code_points(normalize_org_name(raw, aliases.suffixes()));
    if (name.empty()) continue;
    std::map<std::string, double> best;
    for (const auto& [form, org_id] : forms) {
      double score = jaro_winkler(name, form);
      if (score < threshold) continue;
      auto [it, inserted] = best.emplace(org_id, score);
      if (!inserted) it->second = std::max(it->second, score);
    }
    for (const auto& [org_id, score] : best) out.push_back({raw, org_id, score});
  }
  std::sort(out.begin(), out.end(), [](const MatchSuggestion& x, const MatchSuggestion& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.candidate_org_id != y.candidate_org_id) return x.candidate_org_id < y.candidate_org_id;
    return x.raw_name < y.raw_name;
  });
  return out;
}

std::vector<AliasRow> load_aliases(const std::string& path) {
  csv::Table table(csv::read_file(path), {"alias", "org_id"}, path);
  std::vector<AliasRow> rows;
  for (const auto& row : table.rows()) {
    rows.push_back({table.get(row, "alias"), text::trim(table.get(row, "org_id"))});
  }
  return rows;
}

LegalSuffixes load_suffixes(const std::string& path) {
  std::string content = csv::read_file(path);
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = text::trim(std::string_view(content).substr(start, end - start));
    if (!line.empty() && line[0] != '#') tokens.push_back(line);
    start = end + 1;
  }
  return LegalSuffixes(tokens);
}

std::string suggestions_csv(const std::vector<MatchSuggestion>& suggestions) {
  std::string out = "raw_name,candidate_org_id,score\n";
  char buf[32];
  for (const auto& s : suggestions) {
    std::snprintf(buf, sizeof buf, "%.6f", s.score);
    out += csv::join({s.raw_name, s.candidate_org_id, buf});
    out.push_back('\n');
  }
  return out;
}

}  // namespace collabmap::resolve
