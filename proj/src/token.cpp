#include "casesteg/token.hpp"

namespace casesteg {

std::string_view token_kind_name(TokenKind kind) noexcept
{
    switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::NumberLiteral: return "NumberLiteral";
    case TokenKind::Comment: return "Comment";
    case TokenKind::Directive: return "Directive";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::Punct: return "Punct";
    }
    return "?";
}

std::string join_tokens(const std::vector<Token>& tokens)
{
    std::string out;
    for (const Token& t : tokens) {
        out += t.text;
    }
    return out;
}

} // namespace casesteg
