#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace casesteg {

enum class TokenKind {
    Keyword,
    Identifier,
    StringLiteral,
    NumberLiteral,
    Comment,
    Directive,
    Whitespace,
    Punct,
};

std::string_view token_kind_name(TokenKind kind) noexcept;

/// A lexeme. Token lists produced by the lexers tile their input exactly.
struct Token {
    TokenKind kind;
    std::size_t begin;
    std::string text;

    std::size_t end() const noexcept { return begin + text.size(); }
};

/// Concatenated token texts.
std::string join_tokens(const std::vector<Token>& tokens);

} // namespace casesteg
