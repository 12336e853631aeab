#include "egocs/config.hpp"

#include "egocs/error.hpp"

namespace egocs {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        s = s.substr(1, s.size() - 2);
    }
    return std::string(s);
}

} // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        // Comments end the line unless inside quotes.
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("missing key", line_no);
        out[std::string(key)] = unquote(trim(line.substr(eq + 1)));
    }
    return out;
}

std::vector<std::string> parse_list(std::string_view value) {
    value = trim(value);
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']') throw ParseError("unterminated list '" + std::string(value) + "'", 0);
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string> out;
    while (!value.empty()) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        if (!item.empty()) out.push_back(unquote(item));
        if (comma == std::string_view::npos) break;
        value = value.substr(comma + 1);
    }
    return out;
}

} // namespace egocs
