#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kcn {

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);

// Splits on any character in `delims`, trims fragments, drops empties.
std::vector<std::string> split_trim(std::string_view s, std::string_view delims);

// Canonical number formatting shared by every report writer so reruns are
// byte-identical. Integral values print without a decimal point.
std::string format_number(double v);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Number of codepoints (non-continuation bytes).
std::size_t utf8_length(std::string_view s);

// Iterates codepoints; undecodable bytes are passed through one at a time
// with their byte value, so iteration is total on arbitrary input.
template <class F>
void for_each_utf8(std::string_view s, F&& f) {
    size_t i = 0;
    while (i < s.size()) {
        unsigned char b = static_cast<unsigned char>(s[i]);
        size_t len = 1;
        char32_t cp = b;
        if (b >= 0xF0) len = 4;
        else if (b >= 0xE0) len = 3;
        else if (b >= 0xC0) len = 2;
        if (len > 1) {
            if (i + len <= s.size()) {
                cp = b & (0xFF >> (len + 1));
                bool ok = true;
                for (size_t k = 1; k < len; ++k) {
                    unsigned char c = static_cast<unsigned char>(s[i + k]);
                    if ((c & 0xC0) != 0x80) { ok = false; break; }
                    cp = (cp << 6) | (c & 0x3F);
                }
                if (!ok) { cp = b; len = 1; }
            } else {
                len = 1;
            }
        }
        f(cp, s.substr(i, len));
        i += len;
    }
}

}  // namespace kcn
