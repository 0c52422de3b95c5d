#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <unistd.h>

namespace support {

namespace fs = std::filesystem;

inline std::string fixture_dir() { return COLLABMAP_FIXTURE_DIR "/corpus40"; }
inline std::string fixtures() { return COLLABMAP_FIXTURE_DIR; }
inline std::string golden_dir() { return COLLABMAP_GOLDEN_DIR; }

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("collabmap_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// Copy of the fixture with selected files replaced.
inline void copy_fixture(const TempDir& dir, const std::map<std::string, std::string>& overrides = {}) {
  for (const auto& e : fs::directory_iterator(fixture_dir())) {
    fs::copy_file(e.path(), dir / e.path().filename().string(), fs::copy_options::overwrite_existing);
  }
  for (const auto& [name, text] : overrides) spit(dir / name, text);
}

// Small hand-written corpus: three sectors, two areas. U1 hosts all three
// sectors so one single-university paper can span them.
inline const char* kTinyTaxonomy =
    "sds_id,sds_name,uda_id,uda_name\n"
    "A1,Alpha one,A,Area A\n"
    "A2,Alpha two,A,Area A\n"
    "B1,Beta one,B,Area B\n";
inline const char* kTinyOrgs =
    "org_id,canonical_name,kind,country\n"
    "U1,Univ One,university,IT\n"
    "U2,Univ Two,university,IT\n"
    "F1,Firm One SpA,private_firm,IT\n"
    "P1,Public Lab,public_org,IT\n";
inline const char* kTinyJournals =
    "journal_id,name,year,impact_factor,sci_categories\n"
    "J2,Two cats,2002,1.0,X;Y\n"
    "J4,Four cats,2002,2.0,W;X;Y;Z\n";
inline const char* kTinyRoster =
    "researcher_id,full_name,university_org_id,sds_id\n"
    "a1,R a1,U1,A1\n"
    "a2,R a2,U1,A2\n"
    "a3,R a3,U1,B1\n"
    "b1,R b1,U2,B1\n"
    "b2,R b2,U2,B1\n";

// T1: a1+b1 with a firm (industry); T2: a1 solo; T5: a1+a2+a3 at U1 (three
// sectors, four categories); T6: b2 with a public lab; T3: no linked author.
inline const char* kTinyPublications =
    R"({"pub_id":"T1","year":2002,"journal_id":"J2","authors":[{"raw_name":"a1","researcher_id":"a1","org_id":"U1"},{"raw_name":"b1","researcher_id":"b1","org_id":"U2"},{"raw_name":"f","researcher_id":null,"org_id":"F1"}],"address_org_ids":["U1","U2","F1"]})"
    "\n"
    R"({"pub_id":"T2","year":2002,"journal_id":"J2","authors":[{"raw_name":"a1","researcher_id":"a1","org_id":"U1"}],"address_org_ids":["U1"]})"
    "\n"
    R"({"pub_id":"T3","year":2002,"journal_id":"J2","authors":[{"raw_name":"x","researcher_id":null,"org_id":"U1"}],"address_org_ids":["U1"]})"
    "\n"
    R"({"pub_id":"T5","year":2002,"journal_id":"J4","authors":[{"raw_name":"a1","researcher_id":"a1","org_id":"U1"},{"raw_name":"a2","researcher_id":"a2","org_id":"U1"},{"raw_name":"a3","researcher_id":"a3","org_id":"U1"}],"address_org_ids":["U1"]})"
    "\n"
    R"({"pub_id":"T6","year":2002,"journal_id":"J4","authors":[{"raw_name":"b2","researcher_id":"b2","org_id":"U2"},{"raw_name":"p","researcher_id":null,"org_id":"P1"}],"address_org_ids":["U2","P1"]})"
    "\n";

inline void write_tiny(const TempDir& dir, const std::string& publications = kTinyPublications) {
  spit(dir / "taxonomy.csv", kTinyTaxonomy);
  spit(dir / "organizations.csv", kTinyOrgs);
  spit(dir / "journals.csv", kTinyJournals);
  spit(dir / "roster.csv", kTinyRoster);
  spit(dir / "publications.jsonl", publications);
}

}  // namespace support

#include <optional>

#include "collabmap/error.hpp"

namespace support {

/// Error code thrown by fn, or nullopt when it returns normally.
template <class Fn>
std::optional<collabmap::ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const collabmap::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace support
