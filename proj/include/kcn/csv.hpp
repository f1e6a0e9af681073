#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kcn {

// RFC 4180 reader. Handles quoted fields, doubled quotes, and embedded
// commas/newlines; accepts both LF and CRLF line ends. A trailing newline
// does not produce an empty record.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

}  // namespace kcn
