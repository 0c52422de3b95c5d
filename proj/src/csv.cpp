#include "collabmap/csv.hpp"

#include <fstream>
#include <sstream>

#include "collabmap/error.hpp"

namespace collabmap::csv {

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row current;
  std::string field;
  std::size_t line = 1;
  std::size_t i = 0;
  bool record_started = false;
  bool field_quoted = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) rows.push_back(std::move(current));
    current = Row{};
    record_started = false;
  };

  while (i < text.size()) {
    char c = text[i];
    if (!record_started) {
      current.line = line;
      record_started = true;
    }
    if (c == '"' && field.empty() && !field_quoted) {
      field_quoted = true;
      std::size_t start_line = line;
      ++i;
      while (true) {
        if (i >= text.size()) {
          fail(ErrorCode::ParseError, "line " + std::to_string(start_line) + ": unterminated quote");
        }
        char q = text[i];
        if (q == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (q == '\n') ++line;
        field.push_back(q);
        ++i;
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": text after closing quote");
      }
      continue;
    }
    if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      i += 2;
      ++line;
    } else if (c == '\n') {
      end_record();
      ++i;
      ++line;
    } else {
      if (field_quoted) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": text after closing quote");
      }
      field.push_back(c);
      ++i;
    }
  }
  if (record_started) end_record();
  return rows;
}

Table::Table(std::string_view text, std::initializer_list<std::string_view> required,
             const std::string& source)
    : source_(source) {
  auto all = parse(text);
  if (all.empty()) fail(ErrorCode::ParseError, source + ": line 1: missing header");
  const Row& header = all.front();
  for (std::size_t c = 0; c < header.fields.size(); ++c) {
    std::string name = header.fields[c];
    // tolerate a UTF-8 byte order mark on the first column
    if (c == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name.erase(0, 3);
    index_.emplace(name, c);
  }
  for (auto column : required) {
    if (!index_.count(std::string(column))) {
      fail(ErrorCode::ParseError,
           source + ": line 1: missing column '" + std::string(column) + "'");
    }
  }
  for (std::size_t r = 1; r < all.size(); ++r) {
    if (all[r].fields.size() != header.fields.size()) {
      fail(ErrorCode::ParseError, source + ": line " + std::to_string(all[r].line) + ": expected " +
                                      std::to_string(header.fields.size()) + " fields, got " +
                                      std::to_string(all[r].fields.size()));
    }
    rows_.push_back(std::move(all[r]));
  }
}

const std::string& Table::get(const Row& row, std::string_view column) const {
  return row.fields.at(index_.at(std::string(column)));
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += quote(fields[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace collabmap::csv
