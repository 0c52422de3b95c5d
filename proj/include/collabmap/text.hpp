#pragma once

#include <string>
#include <string_view>

namespace collabmap::text {

/// Unicode NFC. Invalid UTF-8 sequences become U+FFFD.
std::string nfc(std::string_view utf8);

std::u32string to_code_points(std::string_view utf8);

std::string trim(std::string_view s);

}  // namespace collabmap::text
