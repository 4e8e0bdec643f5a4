#include "casesteg/ident_channel.hpp"

#include "casesteg/case_map.hpp"
#include "casesteg/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace casesteg::ident {

std::string_view symbol_kind_name(SymbolKind kind) noexcept
{
    switch (kind) {
    case SymbolKind::LocalVar: return "LocalVar";
    case SymbolKind::StaticVar: return "StaticVar";
    case SymbolKind::FunctionName: return "FunctionName";
    case SymbolKind::Parameter: return "Parameter";
    case SymbolKind::ExternName: return "ExternName";
    case SymbolKind::Macro: return "Macro";
    case SymbolKind::Other: return "Other";
    }
    return "?";
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Role {
    Use,
    Declaration,
    Member,   // struct/union member name or `.x` / `->x` access
    Tag,      // struct/union/enum tag
    TypeName, // typedef-like name in declaration specifiers
    Label,    // `name:` statement label or goto target
};

const std::set<std::string, std::less<>> kBasicTypes{
    "void", "char", "short", "int", "long", "float", "double", "signed", "unsigned",
    "_Bool", "_Complex", "_Imaginary",
};
const std::set<std::string, std::less<>> kQualifiers{"const", "volatile", "restrict", "_Atomic"};
const std::set<std::string, std::less<>> kStorage{
    "static", "extern", "typedef", "register", "auto", "inline", "_Thread_local", "_Noreturn",
};
const std::set<std::string, std::less<>> kWellKnownTypedefs{
    "FILE", "DIR", "va_list", "jmp_buf", "bool", "wchar_t", "sig_atomic_t",
};

bool is_typedef_like(std::string_view name)
{
    return kWellKnownTypedefs.contains(name) ||
           (name.size() > 2 && name.substr(name.size() - 2) == "_t");
}

struct Specifiers {
    bool saw_type = false;
    bool is_static = false;
    bool is_extern = false;
    bool is_typedef = false;
};

class Analyzer {
public:
    Analyzer(const std::vector<Token>& tokens, bool strip_underscore)
        : tokens_(tokens)
    {
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const Token& t = tokens[i];
            if (t.kind == TokenKind::Directive) {
                collect_directive(t.text);
            }
            if (t.kind == TokenKind::Whitespace || t.kind == TokenKind::Comment ||
                t.kind == TokenKind::Directive) {
                continue;
            }
            sig_.push_back(i);
            std::string name;
            if (t.kind == TokenKind::Identifier) {
                name = t.text;
                if (strip_underscore && name.size() >= 2 && name.back() == '_') {
                    name.pop_back();
                }
            }
            names_.push_back(std::move(name));
        }
        role_.assign(sig_.size(), Role::Use);
        match_brackets();
    }

    Analysis run()
    {
        parse();
        return build();
    }

    const std::set<std::string>& directive_names() const { return directive_names_; }

private:
    // ---- token access ----------------------------------------------------

    std::size_t size() const { return sig_.size(); }

    std::string_view text(std::size_t p) const
    {
        return p < size() ? std::string_view(tokens_[sig_[p]].text) : std::string_view();
    }

    bool is(std::size_t p, std::string_view s) const
    {
        return p < size() && tokens_[sig_[p]].kind != TokenKind::StringLiteral && text(p) == s;
    }

    bool is_ident(std::size_t p) const
    {
        return p < size() && tokens_[sig_[p]].kind == TokenKind::Identifier;
    }

    bool is_keyword(std::size_t p, const std::set<std::string, std::less<>>& set) const
    {
        return p < size() && tokens_[sig_[p]].kind == TokenKind::Keyword && set.contains(text(p));
    }

    void collect_directive(std::string_view directive)
    {
        std::vector<std::string> words;
        for (std::size_t i = 0; i < directive.size();) {
            const std::size_t n = identifier_prefix_length(directive.substr(i));
            if (n == 0) {
                ++i;
                continue;
            }
            // Letters inside a number (0x1F, 10UL) are not names.
            if (i == 0 || !(is_digit(directive[i - 1]) || directive[i - 1] == '.')) {
                words.emplace_back(directive.substr(i, n));
            }
            i += n;
        }
        if (words.empty() || words.front() == "include") {
            return;
        }
        if (words.front() == "define" && words.size() > 1) {
            macro_definitions_.push_back(words[1]);
        }
        directive_names_.insert(words.begin(), words.end());
    }

    void match_brackets()
    {
        match_.assign(size(), npos);
        std::vector<std::size_t> open;
        for (std::size_t p = 0; p < size(); ++p) {
            if (tokens_[sig_[p]].kind != TokenKind::Punct) {
                continue;
            }
            const std::string_view t = text(p);
            if (t == "(" || t == "[" || t == "{") {
                open.push_back(p);
            } else if (t == ")" || t == "]" || t == "}") {
                const char want = t == ")" ? '(' : t == "]" ? '[' : '{';
                // Drop mismatched openers so one stray bracket does not poison the rest.
                while (!open.empty() && text(open.back()).front() != want) {
                    open.pop_back();
                }
                if (!open.empty()) {
                    match_[open.back()] = p;
                    match_[p] = open.back();
                    open.pop_back();
                }
            }
        }
    }

    // ---- scopes ------------------------------------------------------------

    struct Scope {
        std::size_t parent;
        std::size_t begin;
        std::size_t end;
        bool file = false;
    };

    std::size_t open_scope(std::size_t begin)
    {
        const std::size_t id = scopes_.size();
        scopes_.push_back({stack_.empty() ? npos : stack_.back(), begin, npos});
        stack_.push_back(id);
        return id;
    }

    void close_scope(std::size_t end)
    {
        if (stack_.size() <= 1) {
            return;
        }
        scopes_[stack_.back()].end = end;
        stack_.pop_back();
    }

    std::size_t current_scope() const { return stack_.back(); }

    // ---- declarations ------------------------------------------------------

    struct Decl {
        std::string name;
        std::size_t scope;
        SymbolKind kind;
        std::size_t pos;
    };

    void declare(std::size_t pos, SymbolKind kind, std::size_t scope)
    {
        decls_.push_back({names_[pos], scope, kind, pos});
        role_[pos] = Role::Declaration;
    }

    // ---- parser --------------------------------------------------------------

    void parse()
    {
        const std::size_t file = open_scope(0);
        scopes_[file].file = true;
        while (pos_ < size()) {
            if (!(stmt_start_ && try_declaration(false))) {
                step();
            }
            while (!pending_close_.empty() && pending_close_.back().first < pos_) {
                const auto [end, id] = pending_close_.back();
                pending_close_.pop_back();
                scopes_[id].end = end;
                std::erase(stack_, id);
            }
        }
        while (stack_.size() > 1) {
            close_scope(size() == 0 ? 0 : size() - 1);
        }
        scopes_[file].end = size() == 0 ? 0 : size() - 1;
    }

    void step()
    {
        const std::size_t p = pos_;
        const TokenKind kind = tokens_[sig_[p]].kind;
        const std::string_view t = text(p);
        bool next_stmt_start = false;

        if (kind == TokenKind::Punct && t == "{") {
            if (awaiting_body_) {
                awaiting_body_ = false;
            } else {
                open_scope(p);
            }
            next_stmt_start = true;
        } else if (kind == TokenKind::Punct && t == "}") {
            close_scope(p);
            next_stmt_start = true;
        } else if (kind == TokenKind::Punct && (t == ";" || t == ":")) {
            next_stmt_start = true;
        } else if (kind == TokenKind::Keyword && t == "for" && is(p + 1, "(")) {
            begin_for(p);
            return;
        } else if (kind == TokenKind::Keyword && (t == "else" || t == "do")) {
            next_stmt_start = true;
        } else if (kind == TokenKind::Keyword && t == "goto" && is_ident(p + 1)) {
            role_[p + 1] = Role::Label;
            label_names_.insert(names_[p + 1]);
            pos_ = p + 2;
            stmt_start_ = false;
            return;
        } else if (kind == TokenKind::Identifier && stmt_start_ && is(p + 1, ":")) {
            role_[p] = Role::Label;
            label_names_.insert(names_[p]);
        }
        stmt_start_ = next_stmt_start;
        ++pos_;
    }

    // End of the statement starting at p: the next ';' outside any bracket,
    // or the last token.
    std::size_t statement_end(std::size_t p) const
    {
        while (p < size()) {
            if (is(p, ";")) {
                return p;
            }
            if ((is(p, "(") || is(p, "[") || is(p, "{")) && match_[p] != npos) {
                p = match_[p] + 1;
                continue;
            }
            ++p;
        }
        return size() - 1;
    }

    void begin_for(std::size_t p)
    {
        const std::size_t lparen = p + 1;
        const std::size_t rparen = match_[lparen];
        if (rparen == npos) {
            pos_ = p + 1;
            stmt_start_ = false;
            return;
        }
        const std::size_t body = rparen + 1;
        const std::size_t body_end =
            is(body, "{") && match_[body] != npos ? match_[body] : statement_end(body);
        const std::size_t id = open_scope(lparen);
        pending_close_.emplace_back(body_end, id);
        pos_ = lparen + 1;
        stmt_start_ = false;
        if (!try_declaration(true)) {
            stmt_start_ = false;
        }
    }

    bool looks_like_type_name(std::size_t q) const
    {
        std::size_t r = q + 1;
        std::size_t stars = 0;
        while (is(r, "*") || is_keyword(r, kQualifiers)) {
            stars += is(r, "*") ? 1 : 0;
            ++r;
        }
        if (!is_ident(r)) {
            return false;
        }
        if (stars == 0) {
            return true;
        }
        // `a * b;` is also a (useless) expression; only trust it for known types.
        if (is(r + 1, "=") || is(r + 1, "[")) {
            return true;
        }
        return (is(r + 1, ";") || is(r + 1, ",")) && is_typedef_like(names_[q]);
    }

    void parse_aggregate_body(std::size_t lbrace, bool is_enum)
    {
        const std::size_t rbrace = match_[lbrace];
        if (is_enum) {
            for (std::size_t r = lbrace + 1; r < rbrace; ++r) {
                if (is_ident(r) && (is(r + 1, ",") || is(r + 1, "=") || is(r + 1, "}")) &&
                    (is(r - 1, "{") || is(r - 1, ","))) {
                    declare(r, SymbolKind::Other, current_scope());
                }
            }
            return;
        }
        int bracket_depth = 0;
        for (std::size_t r = lbrace + 1; r < rbrace; ++r) {
            if (is(r, "[")) {
                ++bracket_depth;
            } else if (is(r, "]")) {
                --bracket_depth;
            } else if (is_ident(r) && bracket_depth == 0) {
                role_[r] = Role::Member;
            }
        }
    }

    // Parses declaration specifiers starting at q. Returns the position after
    // them; specs.saw_type tells whether a declaration is underway.
    std::size_t parse_specifiers(std::size_t q, Specifiers& specs)
    {
        while (q < size()) {
            if (is_keyword(q, kStorage)) {
                const std::string_view t = text(q);
                specs.is_static |= t == "static";
                specs.is_extern |= t == "extern";
                specs.is_typedef |= t == "typedef";
                ++q;
            } else if (is_keyword(q, kQualifiers)) {
                ++q;
            } else if (is_keyword(q, kBasicTypes)) {
                specs.saw_type = true;
                ++q;
            } else if (is(q, "struct") || is(q, "union") || is(q, "enum")) {
                const bool is_enum = is(q, "enum");
                specs.saw_type = true;
                ++q;
                if (is_ident(q)) {
                    role_[q] = Role::Tag;
                    ++q;
                }
                if (is(q, "{") && match_[q] != npos) {
                    parse_aggregate_body(q, is_enum);
                    q = match_[q] + 1;
                }
            } else if (is_ident(q) && !specs.saw_type &&
                       (typedef_names_.contains(names_[q]) || looks_like_type_name(q))) {
                role_[q] = Role::TypeName;
                specs.saw_type = true;
                ++q;
            } else {
                break;
            }
        }
        return q;
    }

    // Every identifier in a parameter list that is not a tag, an array bound
    // or a member access is treated as a parameter name. Over-declaring only
    // shadows more, so outer names are never bound to the wrong symbol.
    void declare_parameters(std::size_t lparen, std::size_t scope)
    {
        const std::size_t rparen = match_[lparen];
        int bracket_depth = 0;
        for (std::size_t r = lparen + 1; r < rparen; ++r) {
            if (is(r, "[")) {
                ++bracket_depth;
            } else if (is(r, "]")) {
                --bracket_depth;
            } else if (is_ident(r) && bracket_depth == 0 && role_[r] == Role::Use &&
                       !is(r - 1, "struct") && !is(r - 1, "union") && !is(r - 1, "enum")) {
                declare(r, SymbolKind::Parameter, scope);
            } else if (is_ident(r) && (is(r - 1, "struct") || is(r - 1, "union") ||
                                       is(r - 1, "enum"))) {
                role_[r] = Role::Tag;
            }
        }
    }

    void declare_prototype_scope(std::size_t lparen)
    {
        const std::size_t id = scopes_.size();
        scopes_.push_back({current_scope(), lparen, match_[lparen]});
        declare_parameters(lparen, id);
    }

    std::size_t skip_initializer(std::size_t q) const
    {
        while (q < size()) {
            if (is(q, ",") || is(q, ";") || is(q, ")") || is(q, "}")) {
                return q;
            }
            if ((is(q, "(") || is(q, "[") || is(q, "{")) && match_[q] != npos) {
                q = match_[q] + 1;
                continue;
            }
            ++q;
        }
        return q;
    }

    SymbolKind variable_kind(const Specifiers& specs) const
    {
        if (specs.is_typedef) {
            return SymbolKind::Other;
        }
        if (specs.is_extern) {
            return SymbolKind::ExternName;
        }
        if (scopes_[current_scope()].file) {
            return specs.is_static ? SymbolKind::StaticVar : SymbolKind::ExternName;
        }
        return SymbolKind::LocalVar;
    }

    enum class DeclaratorEnd { Continue, FunctionBody };

    DeclaratorEnd parse_declarator(std::size_t& q, const Specifiers& specs)
    {
        while (is(q, "*") || is_keyword(q, kQualifiers)) {
            ++q;
        }
        std::size_t name = npos;
        bool grouped = false;
        if (is(q, "(") && is(q + 1, "*") && match_[q] != npos) {
            std::size_t r = q + 1;
            while (is(r, "*") || is_keyword(r, kQualifiers)) {
                ++r;
            }
            if (is_ident(r)) {
                name = r;
            }
            q = match_[q] + 1;
            grouped = true;
        } else if (is_ident(q)) {
            name = q++;
        } else {
            return DeclaratorEnd::Continue;
        }

        std::size_t params = npos;
        while (q < size()) {
            if (is(q, "[") && match_[q] != npos) {
                q = match_[q] + 1;
            } else if (is(q, "(") && match_[q] != npos) {
                if (!grouped && params == npos) {
                    params = q;
                } else {
                    declare_prototype_scope(q);
                }
                q = match_[q] + 1;
            } else {
                break;
            }
        }
        if (name == npos) {
            return DeclaratorEnd::Continue;
        }

        if (params != npos) {
            declare(name, SymbolKind::FunctionName, current_scope());
            if (is(q, "{") && scopes_[current_scope()].file) {
                const std::size_t body = open_scope(params);
                declare_parameters(params, body);
                awaiting_body_ = true;
                return DeclaratorEnd::FunctionBody;
            }
            declare_prototype_scope(params);
            return DeclaratorEnd::Continue;
        }

        declare(name, variable_kind(specs), current_scope());
        if (specs.is_typedef) {
            typedef_names_.insert(names_[name]);
        }
        if (is(q, "=")) {
            q = skip_initializer(q + 1);
        }
        return DeclaratorEnd::Continue;
    }

    bool try_declaration(bool for_init)
    {
        Specifiers specs;
        std::size_t q = parse_specifiers(pos_, specs);
        if (!specs.saw_type) {
            return false;
        }
        while (q < size()) {
            if (is(q, ";")) {
                pos_ = q + 1;
                stmt_start_ = true;
                return true;
            }
            const std::size_t before = q;
            if (parse_declarator(q, specs) == DeclaratorEnd::FunctionBody) {
                pos_ = q;
                stmt_start_ = false;
                return true;
            }
            if (is(q, ",")) {
                ++q;
                continue;
            }
            if (is(q, ";")) {
                continue;
            }
            // Unrecognized shape: resume at the next statement boundary
            // without swallowing any braces.
            if (q == before) {
                ++q;
            }
            while (q < size() && !is(q, ";") && !is(q, "{") && !is(q, "}")) {
                if ((is(q, "(") || is(q, "[")) && match_[q] != npos) {
                    q = match_[q] + 1;
                } else {
                    ++q;
                }
            }
            if (is(q, ";")) {
                continue;
            }
            pos_ = q;
            stmt_start_ = false;
            return true;
        }
        pos_ = q;
        stmt_start_ = for_init;
        return true;
    }

    // ---- resolution ----------------------------------------------------------

    Analysis build()
    {
        // Innermost scope per token: scopes are created in order of their
        // begin position and nest, so later scopes overwrite outer ones.
        std::vector<std::size_t> scope_of(size(), 0);
        for (std::size_t id = 1; id < scopes_.size(); ++id) {
            const Scope& s = scopes_[id];
            const std::size_t end = s.end == npos ? size() - 1 : s.end;
            for (std::size_t p = s.begin; p <= end && p < size(); ++p) {
                scope_of[p] = id;
            }
        }
        for (std::size_t p = 0; p < size(); ++p) {
            if (is_ident(p) && role_[p] == Role::Use && p > 0 && (is(p - 1, ".") || is(p - 1, "->"))) {
                role_[p] = Role::Member;
            }
            if (is_ident(p) && role_[p] == Role::Use && p > 0 &&
                (is(p - 1, "struct") || is(p - 1, "union") || is(p - 1, "enum"))) {
                role_[p] = Role::Tag;
            }
        }

        Analysis out;
        std::map<std::pair<std::size_t, std::string>, std::vector<const Decl*>> by_scope;
        std::set<std::string> disqualified_names;
        for (const Decl& d : decls_) {
            by_scope[{d.scope, d.name}].push_back(&d);
            const SymbolKey key{d.name, d.scope};
            const std::size_t token = sig_[d.pos];
            auto [it, inserted] =
                out.symbols.try_emplace(key, Symbol{d.kind, token, tokens_[token].begin, {}, {}, false});
            if (!inserted) {
                it->second.redeclared = true;
            }
            it->second.occurrences.push_back(token);
            if (d.kind != SymbolKind::LocalVar && d.kind != SymbolKind::StaticVar &&
                d.kind != SymbolKind::Parameter) {
                disqualified_names.insert(d.name);
            }
        }
        for (const std::string& macro : macro_definitions_) {
            out.symbols.try_emplace(SymbolKey{macro, 0}, Symbol{SymbolKind::Macro, npos, npos, {}, {}, false});
        }

        for (std::size_t p = 0; p < size(); ++p) {
            if (!is_ident(p) || role_[p] != Role::Use) {
                continue;
            }
            for (std::size_t s = scope_of[p]; s != npos; s = scopes_[s].parent) {
                const auto it = by_scope.find({s, names_[p]});
                if (it == by_scope.end()) {
                    continue;
                }
                const Decl* binding = nullptr;
                for (const Decl* d : it->second) {
                    if (d->pos <= p) {
                        binding = d;
                    }
                }
                if (binding) {
                    out.symbols.at(SymbolKey{binding->name, binding->scope})
                        .occurrences.push_back(sig_[p]);
                    break;
                }
            }
        }

        for (auto& [key, symbol] : out.symbols) {
            std::sort(symbol.occurrences.begin(), symbol.occurrences.end());
            const bool variable =
                symbol.kind == SymbolKind::LocalVar || symbol.kind == SymbolKind::StaticVar;
            if (!variable || symbol.redeclared || directive_names_.contains(key.name) ||
                label_names_.contains(key.name) || disqualified_names.contains(key.name)) {
                continue;
            }
            out.candidates.push_back({key, symbol.declaration_offset, 0});
        }
        std::sort(out.candidates.begin(), out.candidates.end(),
                  [](const CandidateVar& a, const CandidateVar& b) {
                      return a.declaration_offset < b.declaration_offset;
                  });
        for (std::size_t i = 0; i < out.candidates.size(); ++i) {
            out.candidates[i].ordinal = i;
        }
        return out;
    }

    const std::vector<Token>& tokens_;
    std::vector<std::size_t> sig_;
    std::vector<std::string> names_;
    std::vector<Role> role_;
    std::vector<std::size_t> match_;

    std::vector<Scope> scopes_;
    std::vector<std::size_t> stack_;
    std::vector<std::pair<std::size_t, std::size_t>> pending_close_; // (last token, scope)
    std::vector<Decl> decls_;
    std::set<std::string> typedef_names_;
    std::set<std::string> label_names_;
    std::set<std::string> directive_names_;
    std::vector<std::string> macro_definitions_;

    std::size_t pos_ = 0;
    bool stmt_start_ = true;
    bool awaiting_body_ = false;
};

Analysis analyze(const std::vector<Token>& tokens, bool strip_underscore,
                 std::set<std::string>* directive_names = nullptr)
{
    Analyzer analyzer(tokens, strip_underscore);
    Analysis result = analyzer.run();
    if (directive_names) {
        *directive_names = analyzer.directive_names();
    }
    return result;
}

void reject_trailing_underscores(const Analysis& analysis)
{
    for (const CandidateVar& c : analysis.candidates) {
        if (c.symbol.name.back() == '_') {
            throw Error(ErrorCode::AmbiguousCover,
                        "candidate variable '" + c.symbol.name +
                            "' already ends in '_'; rename it before embedding",
                        c.declaration_offset);
        }
    }
}

const Token& declaration_token(const std::vector<Token>& tokens, const Analysis& a,
                               const CandidateVar& c)
{
    return tokens[a.symbols.at(c.symbol).declaration_token];
}

} // namespace

Analysis find_candidates(const std::vector<Token>& tokens)
{
    Analysis result = analyze(tokens, false);
    reject_trailing_underscores(result);
    return result;
}

std::uint64_t capacity(std::string_view source)
{
    return find_candidates(lex(source)).candidates.size();
}

std::string format_stego_comment(std::uint64_t bit_count)
{
    return "/* stego:k=" + std::to_string(bit_count) + " */\n";
}

std::optional<StegoComment> read_stego_comment(std::string_view text)
{
    constexpr std::string_view kPrefix = "/* stego:k=";
    constexpr std::string_view kSuffix = " */\n";
    if (text.substr(0, kPrefix.size()) != kPrefix) {
        return std::nullopt;
    }
    std::size_t i = kPrefix.size();
    std::uint64_t value = 0;
    const std::size_t digits = i;
    while (i < text.size() && is_digit(text[i])) {
        const auto digit = static_cast<std::uint64_t>(text[i] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
            return std::nullopt;
        }
        value = value * 10 + digit;
        ++i;
    }
    if (i == digits || text.substr(i, kSuffix.size()) != kSuffix) {
        return std::nullopt;
    }
    return StegoComment{value, i + kSuffix.size()};
}

std::string embed(std::string_view source, const BitVector& payload, const std::optional<XorKey>& key)
{
    if (source.substr(0, 11) == "/* stego:k=") {
        throw Error(ErrorCode::AmbiguousCover, "source already starts with a stego comment", 0);
    }
    std::vector<Token> tokens = lex(source);
    std::set<std::string> directive_names;
    Analysis analysis = analyze(tokens, false, &directive_names);
    reject_trailing_underscores(analysis);

    const BitVector bits = key ? xor_transform(payload, *key) : payload;
    if (bits.size() > analysis.candidates.size()) {
        throw Error(ErrorCode::Capacity, "need " + std::to_string(bits.size()) +
                                             " candidate variables, source has " +
                                             std::to_string(analysis.candidates.size()));
    }

    std::set<std::string> names = directive_names;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::Identifier) {
            names.insert(t.text);
        }
    }
    for (const CandidateVar& c : analysis.candidates) {
        if (names.contains(c.symbol.name + "_")) {
            throw Error(ErrorCode::Collision,
                        "renaming '" + c.symbol.name + "' would collide with an existing '" +
                            c.symbol.name + "_'",
                        c.declaration_offset);
        }
    }

    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (!bits[j]) {
            continue;
        }
        Symbol& symbol = analysis.symbols.at(analysis.candidates[j].symbol);
        symbol.rename = analysis.candidates[j].symbol.name + "_";
        for (std::size_t token : symbol.occurrences) {
            tokens[token].text = *symbol.rename;
        }
    }

    std::string out = format_stego_comment(bits.size()) + join_tokens(tokens);

    // The extractor re-derives candidates from the stego text; refuse covers
    // where that would not see the same variables.
    if (extract_bits(out) != bits) {
        throw Error(ErrorCode::AmbiguousCover,
                    "cover does not re-analyse to the same candidate variables after renaming");
    }
    return out;
}

BitVector extract_bits(std::string_view stego, const std::optional<XorKey>& key)
{
    const auto header = read_stego_comment(stego);
    if (!header) {
        throw Error(ErrorCode::NoHeader, "missing or malformed leading /* stego:k=N */ comment");
    }
    const std::vector<Token> tokens = lex(stego.substr(header->length));
    const Analysis analysis = analyze(tokens, true);
    if (header->bit_count > analysis.candidates.size()) {
        throw Error(ErrorCode::Truncated, "stego comment declares " +
                                              std::to_string(header->bit_count) + " bits, only " +
                                              std::to_string(analysis.candidates.size()) +
                                              " candidate variables present");
    }
    BitVector bits;
    for (std::size_t j = 0; j < header->bit_count; ++j) {
        const Token& decl = declaration_token(tokens, analysis, analysis.candidates[j]);
        bits.push_back(decl.text.back() == '_');
    }
    return key ? xor_transform(bits, *key) : bits;
}

Bytes extract(std::string_view stego, const std::optional<XorKey>& key)
{
    return bits_to_bytes(extract_bits(stego, key));
}

} // namespace casesteg::ident
