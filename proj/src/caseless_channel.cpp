#include "casesteg/caseless_channel.hpp"

#include "casesteg/case_map.hpp"
#include "casesteg/error.hpp"

#include "builtin_profiles.hpp"

#include <algorithm>
#include <sstream>

namespace casesteg::caseless {

namespace {

std::string fold(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        c = to_lower_letter(c);
    }
    return out;
}

constexpr bool is_ident_char(char c) noexcept
{
    return is_letter(c) || is_digit(c) || c == '_';
}

constexpr bool is_space(char c) noexcept
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

[[noreturn]] void bad_profile(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::BadProfile, "line " + std::to_string(line) + ": " + what);
}

} // namespace

LanguageProfile LanguageProfile::parse(std::string_view text)
{
    LanguageProfile profile;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string directive;
        if (!(fields >> directive) || directive.front() == '#') {
            continue;
        }
        std::vector<std::string> args;
        for (std::string arg; fields >> arg;) {
            args.push_back(arg);
        }

        if (directive == "name") {
            if (args.size() != 1) {
                bad_profile(line_no, "name takes one argument");
            }
            profile.name_ = args[0];
        } else if (directive == "keyword") {
            if (args.size() != 1) {
                bad_profile(line_no, "keyword takes one argument");
            }
            if (!profile.keywords_.insert(fold(args[0])).second) {
                bad_profile(line_no, "duplicate keyword '" + args[0] + "'");
            }
        } else if (directive == "comment") {
            if (args.size() != 2) {
                bad_profile(line_no, "comment takes an open and a close delimiter");
            }
            profile.block_comments_.push_back({args[0], args[1]});
        } else if (directive == "linecomment") {
            if (args.size() != 1) {
                bad_profile(line_no, "linecomment takes one prefix");
            }
            profile.line_comments_.push_back(args[0]);
        } else if (directive == "string") {
            if (args.empty() || args.size() > 2 || args[0].size() != 1) {
                bad_profile(line_no, "string takes a single quote character and an escape style");
            }
            EscapeStyle escape = EscapeStyle::Doubled;
            if (args.size() == 2) {
                if (args[1] == "doubled") {
                    escape = EscapeStyle::Doubled;
                } else if (args[1] == "backslash") {
                    escape = EscapeStyle::Backslash;
                } else if (args[1] == "none") {
                    escape = EscapeStyle::None;
                } else {
                    bad_profile(line_no, "unknown escape style '" + args[1] + "'");
                }
            }
            profile.strings_.push_back({args[0][0], escape});
        } else {
            bad_profile(line_no, "unknown directive '" + directive + "'");
        }
    }
    return profile;
}

LanguageProfile LanguageProfile::builtin(std::string_view name)
{
    const std::string folded = fold(name);
    if (folded == "pascal") {
        return parse(builtin_profiles::kPascal);
    }
    if (folded == "basic") {
        return parse(builtin_profiles::kBasic);
    }
    throw Error(ErrorCode::BadProfile, "no built-in profile named '" + std::string(name) + "'");
}

std::vector<std::string> LanguageProfile::builtin_names()
{
    return {"pascal", "basic"};
}

bool LanguageProfile::is_keyword(std::string_view word) const
{
    return keywords_.contains(fold(word));
}

namespace {

class Tokenizer {
public:
    Tokenizer(std::string_view src, const LanguageProfile& profile) : src_(src), profile_(profile) {}

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
    bool starts_with_at(std::string_view prefix) const
    {
        return src_.substr(pos_, prefix.size()) == prefix;
    }

    bool line_comment_at(std::string_view prefix) const
    {
        if (prefix.empty() || pos_ + prefix.size() > src_.size()) {
            return false;
        }
        if (!is_letter(prefix.front())) {
            return starts_with_at(prefix);
        }
        if (fold(src_.substr(pos_, prefix.size())) != fold(prefix)) {
            return false;
        }
        const std::size_t after = pos_ + prefix.size();
        return after >= src_.size() || !is_ident_char(src_[after]);
    }

    TokenKind next()
    {
        const char c = src_[pos_];
        if (is_space(c)) {
            while (pos_ < src_.size() && is_space(src_[pos_])) {
                ++pos_;
            }
            return TokenKind::Whitespace;
        }

        // Longest opener wins, so "(*" beats "(" and "//" beats "/".
        const BlockComment* block = nullptr;
        for (const BlockComment& bc : profile_.block_comments()) {
            if (starts_with_at(bc.open) && (!block || bc.open.size() > block->open.size())) {
                block = &bc;
            }
        }
        const std::string* line = nullptr;
        for (const std::string& prefix : profile_.line_comments()) {
            if (line_comment_at(prefix) && (!line || prefix.size() > line->size())) {
                line = &prefix;
            }
        }
        if (block && (!line || block->open.size() >= line->size())) {
            const std::size_t close = src_.find(block->close, pos_ + block->open.size());
            if (close == std::string_view::npos) {
                throw Error(ErrorCode::UnterminatedComment, "comment never closed", pos_);
            }
            pos_ = close + block->close.size();
            return TokenKind::Comment;
        }
        if (line) {
            const std::size_t nl = src_.find('\n', pos_);
            pos_ = nl == std::string_view::npos ? src_.size() : nl;
            return TokenKind::Comment;
        }

        for (const StringDelimiter& sd : profile_.strings()) {
            if (c == sd.quote) {
                lex_string(sd);
                return TokenKind::StringLiteral;
            }
        }

        if (is_letter(c) || c == '_') {
            const std::size_t begin = pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                ++pos_;
            }
            return profile_.is_keyword(src_.substr(begin, pos_ - begin)) ? TokenKind::Keyword
                                                                         : TokenKind::Identifier;
        }

        if (is_digit(c)) {
            lex_number();
            return TokenKind::NumberLiteral;
        }

        ++pos_;
        return TokenKind::Punct;
    }

    void lex_string(const StringDelimiter& sd)
    {
        const std::size_t begin = pos_++;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (sd.escape == EscapeStyle::Backslash && c == '\\') {
                pos_ += 2;
                continue;
            }
            if (c == sd.quote) {
                if (sd.escape == EscapeStyle::Doubled && pos_ + 1 < src_.size() &&
                    src_[pos_ + 1] == sd.quote) {
                    pos_ += 2;
                    continue;
                }
                ++pos_;
                return;
            }
            ++pos_;
        }
        throw Error(ErrorCode::UnterminatedString, "string literal never closed", begin);
    }

    void lex_number()
    {
        auto digits = [&] {
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                ++pos_;
            }
        };
        digits();
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' && is_digit(src_[pos_ + 1])) {
            ++pos_;
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
                ++look;
            }
            if (look < src_.size() && is_digit(src_[look])) {
                pos_ = look;
                digits();
            }
        }
        // Suffix letters (10L, 0FFh) stay inside the literal.
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
            ++pos_;
        }
    }

    std::string_view src_;
    const LanguageProfile& profile_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<Token> tokenize(std::string_view source, const LanguageProfile& profile)
{
    return Tokenizer(source, profile).run();
}

std::vector<CandidateSite> candidate_sites(const std::vector<Token>& tokens, Strategy strategy)
{
    std::vector<CandidateSite> sites;
    for (const Token& token : tokens) {
        const bool word = token.kind == TokenKind::Keyword || token.kind == TokenKind::Identifier;
        if (!word) {
            continue;
        }
        if (strategy == Strategy::KeywordsOnly && token.kind != TokenKind::Keyword) {
            continue;
        }
        if (strategy == Strategy::IdentifiersOnly && token.kind != TokenKind::Identifier) {
            continue;
        }
        for (std::size_t i = 0; i < token.text.size(); ++i) {
            if (!is_letter(token.text[i])) {
                continue;
            }
            sites.push_back({token.begin + i, token.text[i], token.kind});
            if (strategy == Strategy::FirstChar) {
                break;
            }
        }
    }
    return sites;
}

std::uint64_t capacity(std::string_view source, const LanguageProfile& profile, Strategy strategy)
{
    const std::uint64_t sites = candidate_sites(tokenize(source, profile), strategy).size();
    return sites > kLengthPrefixBits ? sites - kLengthPrefixBits : 0;
}

std::string embed(std::string_view source, const BitVector& payload,
                  const LanguageProfile& profile, Strategy strategy,
                  const std::optional<XorKey>& key)
{
    const BitVector channel = frame(key ? xor_transform(payload, *key) : payload);
    const auto sites = candidate_sites(tokenize(source, profile), strategy);
    if (channel.size() > sites.size()) {
        throw Error(ErrorCode::Capacity, "need " + std::to_string(channel.size()) +
                                             " sites, source has " + std::to_string(sites.size()));
    }
    std::string out(source);
    for (std::size_t j = 0; j < channel.size(); ++j) {
        out[sites[j].offset] = stego_char(sites[j].original, channel[j]);
    }
    return out;
}

BitVector extract_bits(std::string_view stego, const LanguageProfile& profile, Strategy strategy,
                       const std::optional<XorKey>& key)
{
    const auto sites = candidate_sites(tokenize(stego, profile), strategy);
    BitVector channel;
    for (const CandidateSite& site : sites) {
        channel.push_back(decode_case(site.original));
    }
    // decode_length_prefix reports E_NO_HEADER for short channels.
    const std::uint64_t declared = decode_length_prefix(channel);
    if (declared > channel.size() - kLengthPrefixBits) {
        throw Error(ErrorCode::Truncated, "length prefix declares " + std::to_string(declared) +
                                              " bits, only " +
                                              std::to_string(channel.size() - kLengthPrefixBits) +
                                              " sites follow");
    }
    const BitVector bits = unframe(channel);
    return key ? xor_transform(bits, *key) : bits;
}

Bytes extract(std::string_view stego, const LanguageProfile& profile, Strategy strategy,
              const std::optional<XorKey>& key)
{
    return bits_to_bytes(extract_bits(stego, profile, strategy, key));
}

} // namespace casesteg::caseless
