#include "casesteg/ident_channel.hpp"

#include "casesteg/case_map.hpp"
#include "casesteg/error.hpp"

#include <array>
#include <set>

namespace casesteg::ident {

namespace {

// Identifier DFA: Start --[letter _]--> Head --[letter digit _]--> Tail,
// Tail loops on [letter digit _]. Tail is the only strict accepting state.
enum DfaState : std::uint8_t { kStart, kHead, kTail, kDead, kStateCount };
enum CharClass : std::uint8_t { kLetter, kDigit, kUnderscore, kOther, kClassCount };

constexpr std::array<std::array<DfaState, kClassCount>, kStateCount> kTransitions{{
    //          letter  digit  underscore  other
    /* Start */ {kHead, kDead, kHead, kDead},
    /* Head  */ {kTail, kTail, kTail, kDead},
    /* Tail  */ {kTail, kTail, kTail, kDead},
    /* Dead  */ {kDead, kDead, kDead, kDead},
}};

constexpr CharClass classify(char c) noexcept
{
    if (is_letter(c)) {
        return kLetter;
    }
    if (is_digit(c)) {
        return kDigit;
    }
    return c == '_' ? kUnderscore : kOther;
}

const std::set<std::string, std::less<>>& c_keywords()
{
    static const std::set<std::string, std::less<>> words{
        "auto",     "break",    "case",          "char",           "const",
        "continue", "default",  "do",            "double",         "else",
        "enum",     "extern",   "float",         "for",            "goto",
        "if",       "inline",   "int",           "long",           "register",
        "restrict", "return",   "short",         "signed",         "sizeof",
        "static",   "struct",   "switch",        "typedef",        "union",
        "unsigned", "void",     "volatile",      "while",          "_Alignas",
        "_Alignof", "_Atomic",  "_Bool",         "_Complex",       "_Generic",
        "_Imaginary", "_Noreturn", "_Static_assert", "_Thread_local",
    };
    return words;
}

constexpr std::array<std::string_view, 24> kOperators{
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "+=",  "-=", "*=", "/=", "%=", "&=", "^=", "|=", "##", "::",
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> tokens;
        while (pos_ < src_.size()) {
            const std::size_t begin = pos_;
            const TokenKind kind = next();
            tokens.push_back({kind, begin, std::string(src_.substr(begin, pos_ - begin))});
        }
        return tokens;
    }

private:
    static constexpr bool is_space(char c) noexcept
    {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    TokenKind next()
    {
        const char c = src_[pos_];
        if (is_space(c)) {
            while (pos_ < src_.size() && is_space(src_[pos_])) {
                if (src_[pos_] == '\n') {
                    line_start_ = true;
                }
                ++pos_;
            }
            return TokenKind::Whitespace;
        }
        const bool at_line_start = line_start_;
        line_start_ = false;

        if (c == '#' && at_line_start) {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size() &&
                    (src_[pos_ + 1] == '\n' || src_[pos_ + 1] == '\r')) {
                    pos_ += src_[pos_ + 1] == '\r' && pos_ + 2 < src_.size() &&
                                    src_[pos_ + 2] == '\n'
                                ? 3
                                : 2;
                    continue;
                }
                ++pos_;
            }
            return TokenKind::Directive;
        }
        if (src_.substr(pos_, 2) == "//") {
            const std::size_t nl = src_.find('\n', pos_);
            pos_ = nl == std::string_view::npos ? src_.size() : nl;
            return TokenKind::Comment;
        }
        if (src_.substr(pos_, 2) == "/*") {
            const std::size_t close = src_.find("*/", pos_ + 2);
            if (close == std::string_view::npos) {
                throw Error(ErrorCode::UnterminatedComment, "block comment never closed", pos_);
            }
            pos_ = close + 2;
            return TokenKind::Comment;
        }
        if (c == '"' || c == '\'') {
            lex_quoted(c);
            return TokenKind::StringLiteral;
        }
        if (const std::size_t n = identifier_prefix_length(src_.substr(pos_)); n > 0) {
            const std::string_view word = src_.substr(pos_, n);
            pos_ += n;
            return c_keywords().contains(word) ? TokenKind::Keyword : TokenKind::Identifier;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            lex_number();
            return TokenKind::NumberLiteral;
        }
        for (std::string_view op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                pos_ += op.size();
                return TokenKind::Punct;
            }
        }
        ++pos_;
        return TokenKind::Punct;
    }

    void lex_quoted(char quote)
    {
        const std::size_t begin = pos_++;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\\') {
                pos_ += 2;
                continue;
            }
            if (c == '\n') {
                break;
            }
            ++pos_;
            if (c == quote) {
                return;
            }
        }
        throw Error(ErrorCode::UnterminatedString, "literal never closed", begin);
    }

    // pp-number: digits, letters, '.', '_', and a sign right after an exponent letter.
    void lex_number()
    {
        ++pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            const char prev = src_[pos_ - 1];
            if (is_letter(c) || is_digit(c) || c == '.' || c == '_') {
                ++pos_;
            } else if ((c == '+' || c == '-') &&
                       (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    bool line_start_ = true;
};

} // namespace

bool match_identifier(std::string_view text)
{
    DfaState state = kStart;
    for (char c : text) {
        state = kTransitions[state][classify(c)];
    }
    return state == kTail;
}

std::size_t identifier_prefix_length(std::string_view text)
{
    DfaState state = kStart;
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        state = kTransitions[state][classify(text[i])];
        if (state == kDead) {
            break;
        }
        accepted = i + 1;
    }
    return accepted;
}

std::vector<Token> lex(std::string_view source)
{
    return Lexer(source).run();
}

} // namespace casesteg::ident
