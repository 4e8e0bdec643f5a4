#pragma once

#include "casesteg/html_channel.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casesteg::analysis {

/// Byte-value frequencies; counts sum to the document length.
using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(std::string_view document);

struct LetterPair {
    char letter; // lowercase form
    std::uint64_t cover_folded;
    std::uint64_t stego_folded;
};

struct HistogramComparison {
    Histogram cover{};
    Histogram stego{};
    std::array<std::int64_t, 256> deltas{};
    std::array<LetterPair, 26> letters{};
    /// Letters whose upper+lower count changed: a non-case edit happened.
    std::vector<char> changed_pairs;

    bool case_only() const noexcept { return changed_pairs.empty(); }
};

HistogramComparison compare_histograms(const Histogram& cover, const Histogram& stego);

/// `byte<TAB>cover<TAB>stego<TAB>delta` for every byte value present in
/// either document, then `#`-prefixed summary lines.
std::string format_report(const HistogramComparison& comparison);

enum class Channel { Html, Caseless, Ident };

struct InvarianceReport {
    bool invariant;
    /// First differing offset in the cover, when not invariant.
    std::optional<std::size_t> first_divergence;
    std::string detail;
};

/// Checks that stego differs from cover only in the channel's carrier:
/// letter case for html/caseless (the `<Header k>` element is removed first
/// in header-tag mode), trailing '_' on identifiers for ident (the stego
/// comment is removed first).
InvarianceReport verify_invariance(std::string_view cover, std::string_view stego,
                                   Channel channel,
                                   html::LengthMode mode = html::LengthMode::InBand);

} // namespace casesteg::analysis
