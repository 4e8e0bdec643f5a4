#pragma once

#include "casesteg/bitcodec.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casesteg::html {

enum class SiteKind { TagName, AttrName };

/// One letter inside a tag that can carry a bit.
struct CandidateSite {
    std::size_t offset;
    char original;
    SiteKind kind;

    friend bool operator==(const CandidateSite&, const CandidateSite&) = default;
};

/// An ordinary start or end tag seen by the scanner.
struct TagSpan {
    std::size_t begin; // offset of '<'
    std::size_t end;   // one past '>'
    std::string name;  // lowercased
    bool closing;
};

/// A `<Header k>` length element.
struct HeaderElement {
    std::size_t begin;
    std::size_t end;
    std::uint64_t bit_count;
};

struct ScanResult {
    std::string document;
    std::vector<CandidateSite> sites;
    std::vector<TagSpan> tags;
    std::vector<HeaderElement> headers;
    /// Offset of the markup construct left open at end of input, if any.
    /// Everything before it is still scanned.
    std::optional<std::size_t> unterminated_at;

    /// Rebuilds the document with site i replaced by site_chars[i]. Sites
    /// past the end of site_chars keep their original byte.
    std::string rebuild(std::string_view site_chars) const;
};

enum class LengthMode { InBand, HeaderTag };

/// Runs the tag scanner DFA. Letters of tag names and attribute names are
/// sites; attribute values, text, comments, `<!...>`, `<?...>` and header
/// elements are not. Never throws; see ScanResult::unterminated_at.
ScanResult scan(std::string_view document);

/// Bits the document can carry for a payload in the given mode.
std::uint64_t capacity(std::string_view document, LengthMode mode);

/// Inserts `<Header k>` right after the first `<head...>` start tag, or at
/// the start of the document when there is none.
std::string insert_header(std::string_view document, std::uint64_t bit_count);

/// Bit count of the first header element. Throws E_NO_HEADER.
std::uint64_t read_header(std::string_view document);

std::string embed(std::string_view cover, const BitVector& payload, LengthMode mode,
                  const std::optional<XorKey>& key = std::nullopt);

BitVector extract_bits(std::string_view stego, LengthMode mode,
                       const std::optional<XorKey>& key = std::nullopt);

/// extract_bits() packed into bytes; throws E_PARTIAL_BYTE for payloads
/// that are not a whole number of bytes.
Bytes extract(std::string_view stego, LengthMode mode,
              const std::optional<XorKey>& key = std::nullopt);

} // namespace casesteg::html
