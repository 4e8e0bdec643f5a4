#include "casesteg/html_channel.hpp"

#include "casesteg/case_map.hpp"
#include "casesteg/error.hpp"

#include <algorithm>
#include <limits>

namespace casesteg {

char stego_char(char c, bool bit)
{
    if (!is_letter(c)) {
        throw Error(ErrorCode::NotAlpha, "only ASCII letters can carry a case bit");
    }
    return bit ? to_upper_letter(c) : to_lower_letter(c);
}

} // namespace casesteg

namespace casesteg::html {

namespace {

constexpr bool is_space(char c) noexcept
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

// Matches `<header` WS+ DIGIT+ WS* `>` at pos (name compared case-insensitively).
std::optional<HeaderElement> match_header(std::string_view doc, std::size_t pos)
{
    constexpr std::string_view kName = "header";
    std::size_t i = pos + 1;
    if (doc.size() < i + kName.size()) {
        return std::nullopt;
    }
    for (char expected : kName) {
        if (to_lower_letter(doc[i]) != expected) {
            return std::nullopt;
        }
        ++i;
    }
    const std::size_t ws_begin = i;
    while (i < doc.size() && is_space(doc[i])) {
        ++i;
    }
    if (i == ws_begin) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const std::size_t digits_begin = i;
    bool overflow = false;
    while (i < doc.size() && is_digit(doc[i])) {
        const auto digit = static_cast<std::uint64_t>(doc[i] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
            overflow = true;
        }
        value = value * 10 + digit;
        ++i;
    }
    if (i == digits_begin || overflow) {
        return std::nullopt;
    }
    while (i < doc.size() && is_space(doc[i])) {
        ++i;
    }
    if (i >= doc.size() || doc[i] != '>') {
        return std::nullopt;
    }
    return HeaderElement{pos, i + 1, value};
}

enum class State {
    Text,
    EndTagOpen,
    TagName,
    BeforeAttrName,
    AttrName,
    AfterAttrName,
    BeforeAttrValue,
    ValueDoubleQuoted,
    ValueSingleQuoted,
    ValueUnquoted,
    Comment,
    BogusMarkup,
};

} // namespace

std::string ScanResult::rebuild(std::string_view site_chars) const
{
    std::string out = document;
    const std::size_t n = std::min(site_chars.size(), sites.size());
    for (std::size_t i = 0; i < n; ++i) {
        out[sites[i].offset] = site_chars[i];
    }
    return out;
}

ScanResult scan(std::string_view document)
{
    ScanResult result;
    result.document.assign(document);

    State state = State::Text;
    std::size_t markup_begin = 0;
    TagSpan tag{};

    auto close_tag = [&](std::size_t gt) {
        tag.end = gt + 1;
        result.tags.push_back(tag);
        state = State::Text;
    };

    for (std::size_t i = 0; i < document.size(); ++i) {
        const char c = document[i];
        switch (state) {
        case State::Text: {
            if (c != '<' || i + 1 >= document.size()) {
                break;
            }
            if (auto header = match_header(document, i)) {
                result.headers.push_back(*header);
                i = header->end - 1;
                break;
            }
            const char next = document[i + 1];
            markup_begin = i;
            if (is_letter(next)) {
                tag = TagSpan{i, 0, {}, false};
                state = State::TagName;
            } else if (next == '/') {
                tag = TagSpan{i, 0, {}, true};
                state = State::EndTagOpen;
                ++i;
            } else if (next == '!') {
                if (document.substr(i + 2, 2) == "--") {
                    state = State::Comment;
                    i += 3;
                } else {
                    state = State::BogusMarkup;
                    ++i;
                }
            } else if (next == '?') {
                state = State::BogusMarkup;
                ++i;
            }
            break;
        }
        case State::EndTagOpen:
            if (is_letter(c)) {
                --i;
                state = State::TagName;
            } else if (c == '>') {
                state = State::Text;
            } else {
                state = State::BogusMarkup;
            }
            break;
        case State::TagName:
            if (is_letter(c)) {
                result.sites.push_back({i, c, SiteKind::TagName});
                tag.name.push_back(to_lower_letter(c));
            } else if (is_space(c) || c == '/') {
                state = State::BeforeAttrName;
            } else if (c == '>') {
                close_tag(i);
            } else {
                tag.name.push_back(c);
            }
            break;
        case State::BeforeAttrName:
            if (c == '>') {
                close_tag(i);
            } else if (!is_space(c) && c != '/') {
                --i;
                state = State::AttrName;
            }
            break;
        case State::AttrName:
            if (is_letter(c)) {
                result.sites.push_back({i, c, SiteKind::AttrName});
            } else if (is_space(c)) {
                state = State::AfterAttrName;
            } else if (c == '/') {
                state = State::BeforeAttrName;
            } else if (c == '=') {
                state = State::BeforeAttrValue;
            } else if (c == '>') {
                close_tag(i);
            }
            break;
        case State::AfterAttrName:
            if (c == '=') {
                state = State::BeforeAttrValue;
            } else if (c == '/') {
                state = State::BeforeAttrName;
            } else if (c == '>') {
                close_tag(i);
            } else if (!is_space(c)) {
                --i;
                state = State::AttrName;
            }
            break;
        case State::BeforeAttrValue:
            if (c == '"') {
                state = State::ValueDoubleQuoted;
            } else if (c == '\'') {
                state = State::ValueSingleQuoted;
            } else if (c == '>') {
                close_tag(i);
            } else if (!is_space(c)) {
                state = State::ValueUnquoted;
            }
            break;
        case State::ValueDoubleQuoted:
            if (c == '"') {
                state = State::BeforeAttrName;
            }
            break;
        case State::ValueSingleQuoted:
            if (c == '\'') {
                state = State::BeforeAttrName;
            }
            break;
        case State::ValueUnquoted:
            if (is_space(c)) {
                state = State::BeforeAttrName;
            } else if (c == '>') {
                close_tag(i);
            }
            break;
        case State::Comment:
            if (c == '>' && i >= 2 && document[i - 1] == '-' && document[i - 2] == '-' &&
                i >= markup_begin + 6) {
                state = State::Text;
            }
            break;
        case State::BogusMarkup:
            if (c == '>') {
                state = State::Text;
            }
            break;
        }
    }

    if (state != State::Text) {
        result.unterminated_at = markup_begin;
    }
    return result;
}

std::uint64_t capacity(std::string_view document, LengthMode mode)
{
    const std::uint64_t sites = scan(document).sites.size();
    if (mode == LengthMode::HeaderTag) {
        return sites;
    }
    return sites > kLengthPrefixBits ? sites - kLengthPrefixBits : 0;
}

std::string insert_header(std::string_view document, std::uint64_t bit_count)
{
    const ScanResult scanned = scan(document);
    std::size_t at = 0;
    for (const TagSpan& tag : scanned.tags) {
        if (!tag.closing && tag.name == "head") {
            at = tag.end;
            break;
        }
    }
    std::string out;
    out.reserve(document.size() + 32);
    out.append(document.substr(0, at));
    out.append("<Header ").append(std::to_string(bit_count)).append(">");
    out.append(document.substr(at));
    return out;
}

std::uint64_t read_header(std::string_view document)
{
    const ScanResult scanned = scan(document);
    if (scanned.headers.empty()) {
        throw Error(ErrorCode::NoHeader, "document has no <Header k> element");
    }
    return scanned.headers.front().bit_count;
}

namespace {

ScanResult scan_or_throw(std::string_view document)
{
    ScanResult scanned = scan(document);
    if (scanned.unterminated_at) {
        throw Error(ErrorCode::UnterminatedTag, "document ends inside open markup",
                    scanned.unterminated_at);
    }
    return scanned;
}

BitVector read_sites(const ScanResult& scanned, std::size_t first, std::size_t count)
{
    BitVector bits;
    for (std::size_t i = first; i < first + count; ++i) {
        bits.push_back(decode_case(scanned.document[scanned.sites[i].offset]));
    }
    return bits;
}

} // namespace

std::string embed(std::string_view cover, const BitVector& payload, LengthMode mode,
                  const std::optional<XorKey>& key)
{
    const BitVector bits = key ? xor_transform(payload, *key) : payload;

    std::string document;
    BitVector channel;
    if (mode == LengthMode::InBand) {
        channel = frame(bits);
        document.assign(cover);
    } else {
        const ScanResult cover_scan = scan_or_throw(cover);
        if (!cover_scan.headers.empty()) {
            throw Error(ErrorCode::AmbiguousCover, "cover already contains a <Header k> element",
                        cover_scan.headers.front().begin);
        }
        channel = bits;
        document = insert_header(cover, bits.size());
    }

    const ScanResult scanned = scan_or_throw(document);
    if (channel.size() > scanned.sites.size()) {
        throw Error(ErrorCode::Capacity, "need " + std::to_string(channel.size()) +
                                             " sites, cover has " +
                                             std::to_string(scanned.sites.size()));
    }

    // Sites past the message keep their original case.
    for (std::size_t j = 0; j < channel.size(); ++j) {
        const std::size_t at = scanned.sites[j].offset;
        document[at] = stego_char(document[at], channel[j]);
    }
    return document;
}

BitVector extract_bits(std::string_view stego, LengthMode mode, const std::optional<XorKey>& key)
{
    const ScanResult scanned = scan_or_throw(stego);
    const std::size_t available = scanned.sites.size();

    BitVector bits;
    if (mode == LengthMode::InBand) {
        if (available < kLengthPrefixBits) {
            throw Error(ErrorCode::NoHeader, "fewer than 32 sites; no length prefix present");
        }
        BitVector channel = read_sites(scanned, 0, kLengthPrefixBits);
        const std::uint64_t length = decode_length_prefix(channel);
        if (length > available - kLengthPrefixBits) {
            throw Error(ErrorCode::Truncated, "length prefix declares " + std::to_string(length) +
                                                  " bits, only " +
                                                  std::to_string(available - kLengthPrefixBits) +
                                                  " sites follow");
        }
        channel.append(read_sites(scanned, kLengthPrefixBits, static_cast<std::size_t>(length)));
        bits = unframe(channel);
    } else {
        if (scanned.headers.empty()) {
            throw Error(ErrorCode::NoHeader, "document has no <Header k> element");
        }
        const std::uint64_t length = scanned.headers.front().bit_count;
        if (length > available) {
            throw Error(ErrorCode::Truncated, "header declares " + std::to_string(length) +
                                                  " bits, only " + std::to_string(available) +
                                                  " sites present");
        }
        bits = read_sites(scanned, 0, static_cast<std::size_t>(length));
    }
    return key ? xor_transform(bits, *key) : bits;
}

Bytes extract(std::string_view stego, LengthMode mode, const std::optional<XorKey>& key)
{
    return bits_to_bytes(extract_bits(stego, mode, key));
}

} // namespace casesteg::html
