#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace collabmap {

enum class ErrorCode {
  ParseError,
  DuplicateId,
  DanglingUda,
  MissingFile,
  DanglingReference,
  EmptyCorpus,
  InvalidRecord,
  AmbiguousAlias,
  UnknownSelector,
  MissingIF,
  UnrankedJournal,
  UnknownResearcher,
  EmptySector,
  EmptySet,
  NoAcademicAuthors,
  EmptySample,
  ZeroVariance,
  LengthMismatch,
  InvalidDf,
  InsufficientSectors,
  UnknownMetric,
  UnknownGrouping,
  UnknownIndicator,
  InvalidConfig,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Usage errors map to CLI exit code 2; everything else is a data error.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace collabmap
