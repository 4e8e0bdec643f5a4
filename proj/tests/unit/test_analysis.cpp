#include "casesteg/analysis.hpp"
#include "casesteg/html_channel.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <numeric>

using namespace casesteg;
using namespace casesteg::analysis;

TEST_CASE("histogram counts sum to length")
{
    const Histogram h = histogram("Hello");
    CHECK(h['l'] == 2);
    CHECK(h['H'] == 1);
    CHECK(std::accumulate(h.begin(), h.end(), std::uint64_t{0}) == 5);
}

TEST_CASE("case change keeps folded letter counts")
{
    const auto cmp = compare_histograms(histogram("<head>"), histogram("<HeAD>"));
    CHECK(cmp.case_only());
    CHECK(cmp.deltas['h'] == -1);
    CHECK(cmp.deltas['H'] == 1);
    CHECK(cmp.letters['h' - 'a'].cover_folded == 1);
    CHECK(cmp.letters['h' - 'a'].stego_folded == 1);

    const auto bad = compare_histograms(histogram("abc"), histogram("abd"));
    CHECK_FALSE(bad.case_only());
    CHECK(bad.changed_pairs == std::vector<char>{'c', 'd'});
}

TEST_CASE("report format")
{
    const std::string report =
        format_report(compare_histograms(histogram("ab"), histogram("aB")));
    CHECK(report.find("97\t1\t1\t0\n") != std::string::npos);
    CHECK(report.find("66\t0\t1\t1\n") != std::string::npos);
    CHECK(report.find("98\t1\t0\t-1\n") != std::string::npos);
    CHECK(report.find("# case-only\tyes") != std::string::npos);
}

TEST_CASE("invariance checks per channel")
{
    CHECK(verify_invariance("<head>", "<HeAD>", Channel::Html).invariant);
    const auto r = verify_invariance("<head>", "<hexd>", Channel::Html);
    CHECK_FALSE(r.invariant);
    CHECK(r.first_divergence == std::optional<std::size_t>(3));
    CHECK(verify_invariance("<head>", "<HeAD><Header 4>", Channel::Html,
                            html::LengthMode::HeaderTag)
              .invariant);
    CHECK(verify_invariance("begin x end", "BEGIN X end", Channel::Caseless).invariant);
    CHECK(verify_invariance("int main(){ int v; v=1; }",
                            "/* stego:k=1 */\nint main(){ int v_; v_=1; }", Channel::Ident)
              .invariant);
    CHECK_FALSE(verify_invariance("int main(){ int v; v=1; }",
                                  "/* stego:k=1 */\nint main(){ int w; w=1; }", Channel::Ident)
                    .invariant);
}

TEST_CASE("html stego conserves folded letter histograms")
{
    gen::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string cover = gen::random_html(rng, 60);
        const auto cap = html::capacity(cover, html::LengthMode::InBand);
        const auto stego = html::embed(cover, gen::random_bits(rng, cap), html::LengthMode::InBand);
        CHECK(compare_histograms(histogram(cover), histogram(stego)).case_only());
        CHECK(verify_invariance(cover, stego, Channel::Html).invariant);
    }
}
