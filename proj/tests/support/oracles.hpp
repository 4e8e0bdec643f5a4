#pragma once

// Reference implementations used only by tests. They are deliberately written
// as plain character walks, separately from the library's state machines.

#include <cstddef>
#include <regex>
#include <string>
#include <string_view>

namespace oracle {

inline bool ws(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

inline bool letter(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline std::size_t count_letters(std::string_view s)
{
    std::size_t n = 0;
    for (char c : s) {
        n += letter(c) ? 1 : 0;
    }
    return n;
}

// Length of a `<Header k>` element at the start of s, or 0.
inline std::size_t header_element_length(std::string_view s)
{
    static const std::regex pattern(R"(^<[Hh][Ee][Aa][Dd][Ee][Rr][ \t\n\r\f]+[0-9]+[ \t\n\r\f]*>)");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(s.begin(), s.end(), m, pattern)) {
        return static_cast<std::size_t>(m.length(0));
    }
    return 0;
}

// Counts letters of tag names and attribute names in a terminated document.
// Attribute values, comments, <!...>, <?...>, header elements and text are
// skipped.
inline std::size_t count_html_sites(std::string_view doc)
{
    std::size_t sites = 0;
    std::size_t i = 0;
    const std::size_t n = doc.size();
    auto skip_to = [&](std::string_view what, std::size_t from) {
        const std::size_t at = doc.find(what, from);
        return at == std::string_view::npos ? n : at + what.size();
    };

    // Parses a tag body starting at j (first char of the name) and returns
    // the index after '>'.
    auto tag_body = [&](std::size_t j) {
        std::size_t name_end = j;
        while (name_end < n && !ws(doc[name_end]) && doc[name_end] != '/' && doc[name_end] != '>') {
            ++name_end;
        }
        sites += count_letters(doc.substr(j, name_end - j));
        j = name_end;
        while (j < n) {
            while (j < n && (ws(doc[j]) || doc[j] == '/')) {
                ++j;
            }
            if (j >= n) {
                break;
            }
            if (doc[j] == '>') {
                return j + 1;
            }
            std::size_t attr_end = j;
            while (attr_end < n && !ws(doc[attr_end]) && doc[attr_end] != '/' &&
                   doc[attr_end] != '=' && doc[attr_end] != '>') {
                ++attr_end;
            }
            sites += count_letters(doc.substr(j, attr_end - j));
            j = attr_end;
            std::size_t k = j;
            while (k < n && ws(doc[k])) {
                ++k;
            }
            if (k < n && doc[k] == '=') {
                j = k + 1;
                while (j < n && ws(doc[j])) {
                    ++j;
                }
                if (j < n && (doc[j] == '"' || doc[j] == '\'')) {
                    const std::size_t close = doc.find(doc[j], j + 1);
                    j = close == std::string_view::npos ? n : close + 1;
                } else if (j < n && doc[j] != '>') {
                    while (j < n && !ws(doc[j]) && doc[j] != '>') {
                        ++j;
                    }
                }
            }
        }
        return n;
    };

    while (i < n) {
        if (doc[i] != '<' || i + 1 >= n) {
            ++i;
            continue;
        }
        if (const std::size_t h = header_element_length(doc.substr(i)); h > 0) {
            i += h;
            continue;
        }
        const std::string_view rest = doc.substr(i);
        const char next = doc[i + 1];
        if (rest.substr(0, 4) == "<!--") {
            // "<!-->" closes immediately only when the dashes do not overlap.
            i = skip_to("-->", i + 4);
        } else if (next == '!' || next == '?') {
            i = skip_to(">", i + 2);
        } else if (next == '/') {
            if (i + 2 < n && letter(doc[i + 2])) {
                i = tag_body(i + 2);
            } else {
                i = skip_to(">", i + 2);
            }
        } else if (letter(next)) {
            i = tag_body(i + 1);
        } else {
            ++i;
        }
    }
    return sites;
}

// Reference for [a-zA-Z_][a-zA-Z0-9_]+.
inline bool identifier_pattern(std::string_view s)
{
    if (s.size() < 2) {
        return false;
    }
    auto head = [](char c) { return letter(c) || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s[0])) {
        return false;
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!tail(s[i])) {
            return false;
        }
    }
    return true;
}

} // namespace oracle
