#include "casesteg/ident_channel.hpp"

#include "support/errors.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace casesteg;
using namespace casesteg::ident;
using support::error_of;

namespace {

std::vector<std::string> candidate_names(std::string_view source)
{
    const Analysis a = find_candidates(lex(source));
    std::vector<std::string> out;
    for (const auto& c : a.candidates) {
        out.push_back(c.symbol.name);
    }
    return out;
}

std::vector<TokenKind> kinds(std::string_view source)
{
    std::vector<TokenKind> out;
    for (const Token& t : lex(source)) {
        if (t.kind != TokenKind::Whitespace) {
            out.push_back(t.kind);
        }
    }
    return out;
}

using V = std::vector<std::string>;
using K = TokenKind;

} // namespace

TEST_CASE("lexer basics")
{
    CHECK(kinds("int var;") == std::vector<K>{K::Keyword, K::Identifier, K::Punct});
    const auto t = lex("_x9");
    REQUIRE(t.size() == 1);
    CHECK(t[0].kind == K::Identifier);
    const auto d = lex("#define MAX 10\nint y;");
    CHECK(d[0].kind == K::Directive);
    CHECK(d[0].text.starts_with("#define MAX 10"));
    CHECK(lex("#define A \\\n  1\nx")[0].text.find("1") != std::string::npos);
    CHECK(kinds("a->b <<= 2") == std::vector<K>{K::Identifier, K::Punct, K::Identifier,
                                                 K::Punct, K::NumberLiteral});
    CHECK(kinds("\"a\\\"b\" 'c' /* x */ // y") ==
          std::vector<K>{K::StringLiteral, K::StringLiteral, K::Comment, K::Comment});
    CHECK(join_tokens(lex("int  a = 0x1F; /* c */\n")) == "int  a = 0x1F; /* c */\n");
}

TEST_CASE("lexer errors")
{
    CHECK(error_of([] { lex("\"open"); }) == ErrorCode::UnterminatedString);
    CHECK(error_of([] { lex("\"a\nb\""); }) == ErrorCode::UnterminatedString);
    CHECK(error_of([] { lex("/* open"); }) == ErrorCode::UnterminatedComment);
}

TEST_CASE("identifier automaton")
{
    CHECK(match_identifier("var"));
    CHECK(match_identifier("_x9"));
    CHECK_FALSE(match_identifier("9x"));
    CHECK_FALSE(match_identifier("_"));
    CHECK_FALSE(match_identifier("a"));
    CHECK_FALSE(match_identifier("a-b"));
    CHECK(identifier_prefix_length("_") == 1);
    CHECK(identifier_prefix_length("ab-c") == 2);
    CHECK(identifier_prefix_length("9a") == 0);
    CHECK(lex("_")[0].kind == K::Identifier);
}

TEST_CASE("candidate selection")
{
    CHECK(candidate_names("int main(){ int var; var=1; }") == V{"var"});
    CHECK(candidate_names("extern int g; static int s;") == V{"s"});
    CHECK(candidate_names("int g; int main(){ return g; }").empty());
    CHECK(candidate_names("int f(int p){ return p; }").empty());
    CHECK(candidate_names("#define N 3\nint main(){ int N2 = N; int q = N2; }") ==
          V{"N2", "q"});
    CHECK(candidate_names("int main(){ int m; \n#ifdef m\n#endif\n }").empty());
    CHECK(candidate_names("int main(){ int a; a: goto a; }").empty());
    CHECK(candidate_names("int main(){ int a; int a; }").empty());
    CHECK(candidate_names("int main(){ for (int i = 0; i < 3; i++) {} }") == V{"i"});
    CHECK(candidate_names("typedef int T; int main(){ T t1; }") == V{"t1"});
    CHECK(candidate_names("struct s { int m; }; int main(){ struct s v; v.m = 1; }") == V{"v"});
}

TEST_CASE("shadowed names are separate symbols")
{
    const Analysis a = find_candidates(lex("int main(){ int x; { int x; x = 1; } x = 2; }"));
    REQUIRE(a.candidates.size() == 2);
    CHECK(a.candidates[0].symbol.scope_id != a.candidates[1].symbol.scope_id);
    for (const auto& c : a.candidates) {
        CHECK(a.symbols.at(c.symbol).occurrences.size() == 2);
    }
}

TEST_CASE("worked example")
{
    const std::string cover = "int main(){ int var; var=1; }";
    const std::string stego = embed(cover, BitVector{1});
    CHECK(stego == format_stego_comment(1) + "int main(){ int var_; var_=1; }");
    CHECK(extract_bits(stego) == BitVector{1});
    CHECK(embed(cover, BitVector{0}) == format_stego_comment(1) + cover);
}

TEST_CASE("stego comment")
{
    CHECK(format_stego_comment(12) == "/* stego:k=12 */\n");
    const auto c = read_stego_comment("/* stego:k=12 */\nint x;");
    REQUIRE(c.has_value());
    CHECK(c->bit_count == 12);
    CHECK(c->length == 17);
    CHECK_FALSE(read_stego_comment("/* other */\n").has_value());
    CHECK(error_of([] { extract_bits("int main(){ int v; }"); }) == ErrorCode::NoHeader);
}

TEST_CASE("ident errors")
{
    CHECK(error_of([] { embed("int main(){ int v_; v_=0; }", BitVector{}); }) ==
          ErrorCode::AmbiguousCover);
    CHECK(error_of([] { embed("int main(){ int v; }", BitVector{1, 1}); }) ==
          ErrorCode::Capacity);
    CHECK(error_of([] { embed("int v_x(void); int main(){ int v; v = v_(); }", BitVector{1}); }) ==
          ErrorCode::Collision);
    CHECK(error_of([] {
              embed(format_stego_comment(1) + "int main(){ int v; }", BitVector{1});
          }) == ErrorCode::AmbiguousCover);
}

TEST_CASE("key obfuscates the renaming pattern")
{
    const std::string cover = "int main(){ int aa; int bb; aa = bb; }";
    const XorKey key(Bytes{0xFF});
    const std::string stego = embed(cover, BitVector{0, 0}, key);
    CHECK(stego.find("aa_") != std::string::npos);
    CHECK(stego.find("bb_") != std::string::npos);
    CHECK(extract_bits(stego, key) == BitVector{0, 0});
}
