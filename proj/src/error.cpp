#include "collabmap/error.hpp"

namespace collabmap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingUda: return "DanglingUda";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::AmbiguousAlias: return "AmbiguousAlias";
    case ErrorCode::UnknownSelector: return "UnknownSelector";
    case ErrorCode::MissingIF: return "MissingIF";
    case ErrorCode::UnrankedJournal: return "UnrankedJournal";
    case ErrorCode::UnknownResearcher: return "UnknownResearcher";
    case ErrorCode::EmptySector: return "EmptySector";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NoAcademicAuthors: return "NoAcademicAuthors";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidDf: return "InvalidDf";
    case ErrorCode::InsufficientSectors: return "InsufficientSectors";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::UnknownGrouping: return "UnknownGrouping";
    case ErrorCode::UnknownIndicator: return "UnknownIndicator";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSelector:
    case ErrorCode::UnknownMetric:
    case ErrorCode::UnknownGrouping:
    case ErrorCode::UnknownIndicator:
    case ErrorCode::InvalidConfig:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace collabmap
