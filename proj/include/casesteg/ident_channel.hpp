#pragma once

#include "casesteg/bitcodec.hpp"
#include "casesteg/token.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Identifier-renaming channel for case-sensitive C-like sources. Candidate
// variables (locals and file-scope statics, in declaration order) carry one
// bit each: 1 appends a trailing '_' to every occurrence, 0 leaves the name
// alone. The payload bit count goes into a first-line `/* stego:k=N */`.
namespace casesteg::ident {

/// Tiles a C-like source: identifiers, keywords, string and char literals
/// (backslash escapes), `//` and `/* */` comments, `#` lines as a single
/// Directive token (backslash-newline continues the line), numbers and
/// punctuation. Throws E_UNTERMINATED_STRING / E_UNTERMINATED_COMMENT.
std::vector<Token> lex(std::string_view source);

/// Strict identifier automaton: [a-zA-Z_][a-zA-Z0-9_]+, so at least two
/// characters. The lexer also accepts one-character names.
bool match_identifier(std::string_view text);

/// Length of the longest identifier at the front of text that the lexer
/// would accept (one character or more), or 0.
std::size_t identifier_prefix_length(std::string_view text);

enum class SymbolKind { LocalVar, StaticVar, FunctionName, Parameter, ExternName, Macro, Other };

std::string_view symbol_kind_name(SymbolKind kind) noexcept;

struct SymbolKey {
    std::string name;
    std::size_t scope_id;

    auto operator<=>(const SymbolKey&) const = default;
};

struct Symbol {
    SymbolKind kind;
    std::size_t declaration_token;
    std::size_t declaration_offset;
    /// Token indices bound to this symbol, declaration included.
    std::vector<std::size_t> occurrences;
    std::optional<std::string> rename;
    /// Declared more than once in the same scope.
    bool redeclared = false;
};

using SymbolTable = std::map<SymbolKey, Symbol>;

struct CandidateVar {
    SymbolKey symbol;
    std::size_t declaration_offset;
    std::size_t ordinal;
};

struct Analysis {
    SymbolTable symbols;
    std::vector<CandidateVar> candidates;
};

/// Heuristic declaration analysis over a lexed C subset. Names that the
/// analysis cannot resolve with confidence are never candidates. Throws
/// E_AMBIGUOUS_COVER when a candidate already ends in '_'.
Analysis find_candidates(const std::vector<Token>& tokens);

/// Candidate count of the source; one payload bit per candidate.
std::uint64_t capacity(std::string_view source);

std::string embed(std::string_view source, const BitVector& payload,
                  const std::optional<XorKey>& key = std::nullopt);

BitVector extract_bits(std::string_view stego, const std::optional<XorKey>& key = std::nullopt);

Bytes extract(std::string_view stego, const std::optional<XorKey>& key = std::nullopt);

struct StegoComment {
    std::uint64_t bit_count;
    /// Bytes taken by the comment line, newline included.
    std::size_t length;
};

std::string format_stego_comment(std::uint64_t bit_count);

/// Parses a leading `/* stego:k=N */` line, if present and well formed.
std::optional<StegoComment> read_stego_comment(std::string_view text);

} // namespace casesteg::ident
