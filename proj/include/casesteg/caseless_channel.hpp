#pragma once

#include "casesteg/bitcodec.hpp"
#include "casesteg/token.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace casesteg::caseless {

enum class EscapeStyle { Doubled, Backslash, None };

struct StringDelimiter {
    char quote;
    EscapeStyle escape;
};

struct BlockComment {
    std::string open;
    std::string close;
};

/// Lexical description of a case-insensitive language.
///
/// Profiles are plain text, one directive per line; blank lines and lines
/// starting with '#' are ignored:
///
///     name <identifier>
///     keyword <word>
///     comment <open> <close>
///     linecomment <prefix>
///     string <quote-char> [doubled|backslash|none]
///
/// Keywords must be unique under case folding. An alphabetic line-comment
/// prefix such as REM only matches as a whole word, case-insensitively.
class LanguageProfile {
public:
    /// Throws E_BAD_PROFILE with the offending line number in the message.
    static LanguageProfile parse(std::string_view text);
    /// "pascal" or "basic". Throws E_BAD_PROFILE for anything else.
    static LanguageProfile builtin(std::string_view name);
    static std::vector<std::string> builtin_names();

    const std::string& name() const noexcept { return name_; }
    bool is_keyword(std::string_view word) const;
    const std::set<std::string>& keywords() const noexcept { return keywords_; }
    const std::vector<BlockComment>& block_comments() const noexcept { return block_comments_; }
    const std::vector<std::string>& line_comments() const noexcept { return line_comments_; }
    const std::vector<StringDelimiter>& strings() const noexcept { return strings_; }

private:
    std::string name_;
    std::set<std::string> keywords_; // lowercased
    std::vector<BlockComment> block_comments_;
    std::vector<std::string> line_comments_;
    std::vector<StringDelimiter> strings_;
};

enum class Strategy { All, FirstChar, KeywordsOnly, IdentifiersOnly };

struct CandidateSite {
    std::size_t offset;
    char original;
    TokenKind kind; // Keyword or Identifier
};

/// Throws E_UNTERMINATED_STRING / E_UNTERMINATED_COMMENT.
std::vector<Token> tokenize(std::string_view source, const LanguageProfile& profile);

std::vector<CandidateSite> candidate_sites(const std::vector<Token>& tokens, Strategy strategy);

/// Payload bits available after the 32-bit length prefix.
std::uint64_t capacity(std::string_view source, const LanguageProfile& profile, Strategy strategy);

std::string embed(std::string_view source, const BitVector& payload,
                  const LanguageProfile& profile, Strategy strategy,
                  const std::optional<XorKey>& key = std::nullopt);

BitVector extract_bits(std::string_view stego, const LanguageProfile& profile, Strategy strategy,
                       const std::optional<XorKey>& key = std::nullopt);

Bytes extract(std::string_view stego, const LanguageProfile& profile, Strategy strategy,
              const std::optional<XorKey>& key = std::nullopt);

} // namespace casesteg::caseless
