#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace egocs {

// Flat `key = value` text: '#' starts a comment, blank lines and [section]
// headers are ignored, surrounding quotes on values are stripped.
using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text);

// "[a, b, c]" or "a, b, c" -> {"a", "b", "c"}.
std::vector<std::string> parse_list(std::string_view value);

} // namespace egocs
