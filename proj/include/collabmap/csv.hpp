#pragma once

// Minimal RFC-4180 reader and writer.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace collabmap::csv {

struct Row {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// Splits `text` into records. Quoted fields may contain commas, CR/LF and
/// doubled quotes. Blank lines are skipped. Throws ParseError on an
/// unterminated quote or stray characters after a closing quote.
std::vector<Row> parse(std::string_view text);

/// A parsed file whose first record is a mandatory header.
class Table {
 public:
  /// `required` columns must all be present in the header (any order).
  Table(std::string_view text, std::initializer_list<std::string_view> required,
        const std::string& source);

  const std::vector<Row>& rows() const { return rows_; }
  const std::string& get(const Row& row, std::string_view column) const;

 private:
  std::string source_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Row> rows_;
};

std::string quote(std::string_view field);
std::string join(const std::vector<std::string>& fields);

std::string read_file(const std::string& path);

}  // namespace collabmap::csv
