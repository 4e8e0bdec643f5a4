#pragma once

// Seeded random cover generators for property tests.

#include "casesteg/bitcodec.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

template <std::size_t N>
std::string_view choose(Rng& rng, const std::array<std::string_view, N>& items)
{
    return items[pick(rng, N)];
}

inline std::string random_case(Rng& rng, std::string_view word)
{
    std::string out(word);
    const int style = static_cast<int>(pick(rng, 3));
    for (char& c : out) {
        if (c >= 'a' && c <= 'z' && (style == 1 || (style == 2 && coin(rng)))) {
            c = static_cast<char>(c - 32);
        }
    }
    return out;
}

inline std::string random_word(Rng& rng, std::size_t min_len, std::size_t max_len)
{
    static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    const std::size_t len = min_len + pick(rng, max_len - min_len + 1);
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(kLetters[pick(rng, kLetters.size())]);
    }
    return out;
}

inline casesteg::BitVector random_bits(Rng& rng, std::size_t count)
{
    casesteg::BitVector bits;
    for (std::size_t i = 0; i < count; ++i) {
        bits.push_back(coin(rng));
    }
    return bits;
}

inline std::string random_text(Rng& rng)
{
    static constexpr std::array<std::string_view, 10> kText{
        "Hello world", "a < b and c > d", "caf\xc3\xa9 na\xc3\xafve", "&amp; &lt;tag&gt;",
        "\n  ", "Lorem ipsum dolor", "x=1; y=2", "100% done", "<", "Quoted \"text\" here",
    };
    return std::string(choose(rng, kText));
}

inline std::string random_attribute(Rng& rng)
{
    static constexpr std::array<std::string_view, 10> kNames{
        "class", "id", "href", "align", "style", "data-role", "title", "width", "onclick", "lang",
    };
    std::string out = random_case(rng, choose(rng, kNames));
    switch (pick(rng, 5)) {
    case 0: // boolean attribute
        break;
    case 1:
        out += "=\"" + random_word(rng, 0, 8) + " > " + random_word(rng, 1, 5) + "\"";
        break;
    case 2:
        out += "='" + random_word(rng, 1, 8) + "'";
        break;
    case 3:
        out += "=" + random_word(rng, 1, 8);
        break;
    default:
        out += " = \"" + random_word(rng, 1, 6) + "\"";
        break;
    }
    return out;
}

inline std::string random_tag(Rng& rng)
{
    static constexpr std::array<std::string_view, 16> kTags{
        "html", "head", "body", "div", "span", "p", "a", "h2", "table", "td",
        "ul", "li", "img", "br", "header", "section",
    };
    const std::string name = random_case(rng, choose(rng, kTags));
    if (coin(rng, 0.3)) {
        return "</" + name + ">";
    }
    std::string out = "<" + name;
    const std::size_t attrs = pick(rng, 4);
    for (std::size_t i = 0; i < attrs; ++i) {
        out += std::string(pick(rng, 3) == 0 ? "\n  " : " ") + random_attribute(rng);
    }
    out += coin(rng, 0.15) ? " />" : ">";
    return out;
}

/// Terminated HTML-like tag soup.
inline std::string random_html(Rng& rng, std::size_t pieces)
{
    std::string out;
    if (coin(rng, 0.5)) {
        out += "<!DOCTYPE html>\n";
    }
    for (std::size_t i = 0; i < pieces; ++i) {
        switch (pick(rng, 10)) {
        case 0: out += "<!-- " + random_word(rng, 1, 10) + " <b>inside</b> -->"; break;
        case 1: out += random_text(rng); break;
        case 2: out += "<?xml version=\"1.0\"?>"; break;
        default: out += random_tag(rng); break;
        }
    }
    return out;
}

/// Random Pascal program with keywords, identifiers, strings (including
/// doubled quotes), numbers and both comment styles.
inline std::string random_pascal(Rng& rng, std::size_t statements)
{
    static constexpr std::array<std::string_view, 8> kIdents{
        "counter", "total", "x", "Result", "i", "buffer_size", "Name", "_tmp",
    };
    static constexpr std::array<std::string_view, 6> kStrings{
        "'hello'", "'It''s'", "''", "'BEGIN end'", "'x := 1'", "'{not a comment}'",
    };
    static constexpr std::array<std::string_view, 5> kComments{
        "{ comment begin end }", "(* Block Comment *)", "// line comment IF THEN\n",
        "{}", "(*multi\nline*)",
    };
    auto ident = [&] { return random_case(rng, choose(rng, kIdents)); };
    auto kw = [&](std::string_view w) { return random_case(rng, w); };

    std::string out = kw("program") + " " + ident() + ";\n" + kw("var") + " " + ident() + ", " +
                      ident() + ": integer;\n" + kw("begin") + "\n";
    for (std::size_t i = 0; i < statements; ++i) {
        switch (pick(rng, 6)) {
        case 0:
            out += "  " + ident() + " := " + std::to_string(pick(rng, 1000)) + ";\n";
            break;
        case 1:
            out += "  writeln(" + std::string(choose(rng, kStrings)) + ", " + ident() + ");\n";
            break;
        case 2:
            out += "  " + kw("if") + " " + ident() + " > 3.5e2 " + kw("then") + " " + ident() +
                   " := " + ident() + " " + kw("div") + " 2 " + kw("else") + " " + ident() +
                   " := 0;\n";
            break;
        case 3:
            out += "  " + std::string(choose(rng, kComments)) + "\n";
            break;
        case 4:
            out += "  " + kw("for") + " " + ident() + " := 1 " + kw("to") + " 10 " + kw("do") +
                   " " + ident() + " := " + ident() + " + $FF;\n";
            break;
        default:
            out += "  " + kw("while") + " " + kw("not") + " (" + ident() + " = 1..9) " +
                   kw("do") + " " + kw("begin") + " " + ident() + " := " + ident() + " " +
                   kw("mod") + " 7 " + kw("end") + ";\n";
            break;
        }
    }
    out += kw("end") + ".\n";
    return out;
}

} // namespace gen
