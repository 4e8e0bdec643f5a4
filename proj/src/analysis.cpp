#include "casesteg/analysis.hpp"

#include "casesteg/case_map.hpp"
#include "casesteg/error.hpp"
#include "casesteg/ident_channel.hpp"

#include <algorithm>
#include <sstream>

namespace casesteg::analysis {

Histogram histogram(std::string_view document)
{
    Histogram counts{};
    for (char c : document) {
        ++counts[static_cast<unsigned char>(c)];
    }
    return counts;
}

HistogramComparison compare_histograms(const Histogram& cover, const Histogram& stego)
{
    HistogramComparison out;
    out.cover = cover;
    out.stego = stego;
    for (std::size_t b = 0; b < 256; ++b) {
        out.deltas[b] = static_cast<std::int64_t>(stego[b]) - static_cast<std::int64_t>(cover[b]);
    }
    for (int i = 0; i < 26; ++i) {
        const auto lower = static_cast<unsigned char>('a' + i);
        const auto upper = static_cast<unsigned char>('A' + i);
        LetterPair& pair = out.letters[static_cast<std::size_t>(i)];
        pair.letter = static_cast<char>(lower);
        pair.cover_folded = cover[lower] + cover[upper];
        pair.stego_folded = stego[lower] + stego[upper];
        if (pair.cover_folded != pair.stego_folded) {
            out.changed_pairs.push_back(pair.letter);
        }
    }
    return out;
}

std::string format_report(const HistogramComparison& comparison)
{
    std::ostringstream out;
    std::uint64_t cover_total = 0;
    std::uint64_t stego_total = 0;
    std::uint64_t changed_bytes = 0;
    for (std::size_t b = 0; b < 256; ++b) {
        cover_total += comparison.cover[b];
        stego_total += comparison.stego[b];
        if (comparison.cover[b] == 0 && comparison.stego[b] == 0) {
            continue;
        }
        if (comparison.deltas[b] != 0) {
            ++changed_bytes;
        }
        out << b << '\t' << comparison.cover[b] << '\t' << comparison.stego[b] << '\t'
            << comparison.deltas[b] << '\n';
    }
    out << "# total\t" << cover_total << '\t' << stego_total << '\t'
        << static_cast<std::int64_t>(stego_total) - static_cast<std::int64_t>(cover_total) << '\n';
    out << "# byte values changed\t" << changed_bytes << '\n';
    out << "# letter pairs changed\t" << comparison.changed_pairs.size();
    for (char c : comparison.changed_pairs) {
        out << '\t' << c;
    }
    out << '\n';
    out << "# case-only\t" << (comparison.case_only() ? "yes" : "no") << '\n';
    return out.str();
}

namespace {

InvarianceReport fold_compare(std::string_view cover, std::string_view stego)
{
    const std::size_t n = std::min(cover.size(), stego.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (to_lower_letter(cover[i]) != to_lower_letter(stego[i])) {
            return {false, i, "case-folded bytes differ"};
        }
    }
    if (cover.size() != stego.size()) {
        return {false, n, "lengths differ"};
    }
    return {true, std::nullopt, "identical after case folding"};
}

InvarianceReport ident_compare(std::string_view cover, std::string_view stego)
{
    if (const auto comment = ident::read_stego_comment(stego)) {
        stego.remove_prefix(comment->length);
    }
    std::vector<Token> a;
    std::vector<Token> b;
    try {
        a = ident::lex(cover);
        b = ident::lex(stego);
    } catch (const Error& e) {
        return {false, e.offset(), e.what()};
    }
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].kind != b[i].kind) {
            return {false, a[i].begin, "token kinds differ"};
        }
        if (a[i].text == b[i].text) {
            continue;
        }
        if (a[i].kind != TokenKind::Identifier || b[i].text != a[i].text + "_") {
            return {false, a[i].begin, "token '" + a[i].text + "' became '" + b[i].text + "'"};
        }
    }
    if (a.size() != b.size()) {
        return {false, n < a.size() ? a[n].begin : cover.size(), "token counts differ"};
    }
    return {true, std::nullopt, "only identifier underscores differ"};
}

} // namespace

InvarianceReport verify_invariance(std::string_view cover, std::string_view stego,
                                   Channel channel, html::LengthMode mode)
{
    switch (channel) {
    case Channel::Html:
        if (mode == html::LengthMode::HeaderTag) {
            const html::ScanResult scanned = html::scan(stego);
            if (scanned.headers.empty()) {
                return {false, std::nullopt, "stego has no <Header k> element"};
            }
            const html::HeaderElement& h = scanned.headers.front();
            std::string without(stego.substr(0, h.begin));
            without.append(stego.substr(h.end));
            return fold_compare(cover, without);
        }
        return fold_compare(cover, stego);
    case Channel::Caseless:
        return fold_compare(cover, stego);
    case Channel::Ident:
        return ident_compare(cover, stego);
    }
    return {false, std::nullopt, "unknown channel"};
}

} // namespace casesteg::analysis
