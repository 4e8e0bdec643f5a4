#include "casesteg/casesteg.h"

#include "casesteg/analysis.hpp"
#include "casesteg/caseless_channel.hpp"
#include "casesteg/error.hpp"
#include "casesteg/html_channel.hpp"
#include "casesteg/ident_channel.hpp"

#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

using namespace casesteg;

struct cs_options {
    cs_channel channel = CS_CHANNEL_HTML;
    html::LengthMode mode = html::LengthMode::InBand;
    caseless::Strategy strategy = caseless::Strategy::All;
    caseless::LanguageProfile profile = caseless::LanguageProfile::builtin("pascal");
    std::optional<XorKey> key;
};

struct cs_buffer {
    std::vector<std::uint8_t> bytes;
};

namespace {

thread_local std::string last_error;

cs_status to_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::PartialByte: return CS_E_PARTIAL_BYTE;
    case ErrorCode::TooLong: return CS_E_TOO_LONG;
    case ErrorCode::Truncated: return CS_E_TRUNCATED;
    case ErrorCode::NoHeader: return CS_E_NO_HEADER;
    case ErrorCode::UnterminatedTag: return CS_E_UNTERMINATED_TAG;
    case ErrorCode::Capacity: return CS_E_CAPACITY;
    case ErrorCode::NotAlpha: return CS_E_NOT_ALPHA;
    case ErrorCode::UnterminatedString: return CS_E_UNTERMINATED_STRING;
    case ErrorCode::UnterminatedComment: return CS_E_UNTERMINATED_COMMENT;
    case ErrorCode::AmbiguousCover: return CS_E_AMBIGUOUS_COVER;
    case ErrorCode::Collision: return CS_E_COLLISION;
    case ErrorCode::BadProfile: return CS_E_BAD_PROFILE;
    }
    return CS_E_INTERNAL;
}

cs_status fail(cs_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Runs body, mapping exceptions onto status codes.
template <typename Body>
cs_status guarded(Body&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CS_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CS_E_INTERNAL, e.what());
    }
}

std::string_view view(const char* data, std::size_t length)
{
    return length == 0 ? std::string_view() : std::string_view(data, length);
}

cs_buffer* make_buffer(std::string_view bytes)
{
    auto* buffer = new cs_buffer;
    buffer->bytes.assign(bytes.begin(), bytes.end());
    return buffer;
}

cs_buffer* make_buffer(const BitVector& bits)
{
    auto* buffer = new cs_buffer;
    buffer->bytes.assign(bits.symbols().begin(), bits.symbols().end());
    return buffer;
}

std::uint64_t channel_capacity(const cs_options& o, std::string_view doc)
{
    switch (o.channel) {
    case CS_CHANNEL_HTML: return html::capacity(doc, o.mode);
    case CS_CHANNEL_CASELESS: return caseless::capacity(doc, o.profile, o.strategy);
    case CS_CHANNEL_IDENT: return ident::capacity(doc);
    }
    return 0;
}

std::string channel_embed(const cs_options& o, std::string_view cover, const BitVector& payload)
{
    switch (o.channel) {
    case CS_CHANNEL_HTML: return html::embed(cover, payload, o.mode, o.key);
    case CS_CHANNEL_CASELESS: return caseless::embed(cover, payload, o.profile, o.strategy, o.key);
    case CS_CHANNEL_IDENT: return ident::embed(cover, payload, o.key);
    }
    return {};
}

BitVector channel_extract(const cs_options& o, std::string_view stego)
{
    switch (o.channel) {
    case CS_CHANNEL_HTML: return html::extract_bits(stego, o.mode, o.key);
    case CS_CHANNEL_CASELESS: return caseless::extract_bits(stego, o.profile, o.strategy, o.key);
    case CS_CHANNEL_IDENT: return ident::extract_bits(stego, o.key);
    }
    return {};
}

cs_status embed_impl(const cs_options* options, const char* cover, std::size_t cover_length,
                     const BitVector& payload, cs_buffer** stego, cs_embed_stats* stats)
{
    std::string_view doc = view(cover, cover_length);
    std::string out = channel_embed(*options, doc, payload);
    if (stats) {
        stats->payload_bits = payload.size();
        stats->capacity_bits = channel_capacity(*options, doc);
    }
    *stego = make_buffer(out);
    return CS_OK;
}

bool valid_channel(cs_channel channel)
{
    return channel == CS_CHANNEL_HTML || channel == CS_CHANNEL_CASELESS ||
           channel == CS_CHANNEL_IDENT;
}

} // namespace

extern "C" {

const char* cs_status_name(cs_status status)
{
    switch (status) {
    case CS_OK: return "OK";
    case CS_E_INVALID_ARGUMENT: return "E_INVALID_ARGUMENT";
    case CS_E_INTERNAL: return "E_INTERNAL";
    default: break;
    }
    for (int c = 0; c <= static_cast<int>(ErrorCode::BadProfile); ++c) {
        const auto code = static_cast<ErrorCode>(c);
        if (to_status(code) == status) {
            return error_name(code).data();
        }
    }
    return "E_UNKNOWN";
}

const char* cs_last_error(void)
{
    return last_error.c_str();
}

cs_status cs_options_create(cs_channel channel, cs_options** out)
{
    if (!out || !valid_channel(channel)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_options_create: bad channel or null output");
    }
    return guarded([&] {
        *out = new cs_options;
        (*out)->channel = channel;
        return CS_OK;
    });
}

void cs_options_destroy(cs_options* options)
{
    delete options;
}

cs_status cs_options_set_mode(cs_options* options, cs_length_mode mode)
{
    if (!options || options->channel != CS_CHANNEL_HTML) {
        return fail(CS_E_INVALID_ARGUMENT, "length mode applies to the html channel only");
    }
    if (mode != CS_MODE_INBAND && mode != CS_MODE_HEADER_TAG) {
        return fail(CS_E_INVALID_ARGUMENT, "unknown length mode");
    }
    options->mode = mode == CS_MODE_INBAND ? html::LengthMode::InBand : html::LengthMode::HeaderTag;
    return CS_OK;
}

cs_status cs_options_set_strategy(cs_options* options, cs_strategy strategy)
{
    if (!options || options->channel != CS_CHANNEL_CASELESS) {
        return fail(CS_E_INVALID_ARGUMENT, "strategy applies to the caseless channel only");
    }
    switch (strategy) {
    case CS_STRATEGY_ALL: options->strategy = caseless::Strategy::All; break;
    case CS_STRATEGY_FIRST_CHAR: options->strategy = caseless::Strategy::FirstChar; break;
    case CS_STRATEGY_KEYWORDS: options->strategy = caseless::Strategy::KeywordsOnly; break;
    case CS_STRATEGY_IDENTIFIERS: options->strategy = caseless::Strategy::IdentifiersOnly; break;
    default: return fail(CS_E_INVALID_ARGUMENT, "unknown strategy");
    }
    return CS_OK;
}

cs_status cs_options_set_profile_builtin(cs_options* options, const char* name)
{
    if (!options || !name || options->channel != CS_CHANNEL_CASELESS) {
        return fail(CS_E_INVALID_ARGUMENT, "profiles apply to the caseless channel only");
    }
    return guarded([&] {
        options->profile = caseless::LanguageProfile::builtin(name);
        return CS_OK;
    });
}

cs_status cs_options_set_profile_text(cs_options* options, const char* text, size_t length)
{
    if (!options || (!text && length) || options->channel != CS_CHANNEL_CASELESS) {
        return fail(CS_E_INVALID_ARGUMENT, "profiles apply to the caseless channel only");
    }
    return guarded([&] {
        options->profile = caseless::LanguageProfile::parse(view(text, length));
        return CS_OK;
    });
}

cs_status cs_options_set_key(cs_options* options, const uint8_t* key, size_t length)
{
    if (!options || (!key && length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_options_set_key: null argument");
    }
    return guarded([&] {
        if (length == 0) {
            options->key.reset();
        } else {
            options->key.emplace(Bytes(key, key + length));
        }
        return CS_OK;
    });
}

cs_status cs_capacity(const cs_options* options, const char* document, size_t length,
                      uint64_t* capacity_bits)
{
    if (!options || !capacity_bits || (!document && length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_capacity: null argument");
    }
    return guarded([&] {
        *capacity_bits = channel_capacity(*options, view(document, length));
        return CS_OK;
    });
}

cs_status cs_embed(const cs_options* options, const char* cover, size_t cover_length,
                   const uint8_t* payload, size_t payload_length, cs_buffer** stego,
                   cs_embed_stats* stats)
{
    if (!options || !stego || (!cover && cover_length) || (!payload && payload_length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_embed: null argument");
    }
    return guarded([&] {
        const BitVector bits =
            bytes_to_bits(std::span<const std::uint8_t>(payload, payload_length));
        return embed_impl(options, cover, cover_length, bits, stego, stats);
    });
}

cs_status cs_embed_bits(const cs_options* options, const char* cover, size_t cover_length,
                        const uint8_t* bits, size_t bit_count, cs_buffer** stego,
                        cs_embed_stats* stats)
{
    if (!options || !stego || (!cover && cover_length) || (!bits && bit_count)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_embed_bits: null argument");
    }
    return guarded([&] {
        BitVector payload;
        for (std::size_t i = 0; i < bit_count; ++i) {
            if (bits[i] > 1) {
                return fail(CS_E_INVALID_ARGUMENT, "bit values must be 0 or 1");
            }
            payload.push_back(bits[i] == 1);
        }
        return embed_impl(options, cover, cover_length, payload, stego, stats);
    });
}

cs_status cs_extract(const cs_options* options, const char* stego, size_t length,
                     cs_buffer** payload)
{
    if (!options || !payload || (!stego && length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_extract: null argument");
    }
    return guarded([&] {
        const Bytes bytes = bits_to_bytes(channel_extract(*options, view(stego, length)));
        auto* buffer = new cs_buffer{bytes};
        *payload = buffer;
        return CS_OK;
    });
}

cs_status cs_extract_bits(const cs_options* options, const char* stego, size_t length,
                          cs_buffer** bits)
{
    if (!options || !bits || (!stego && length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_extract_bits: null argument");
    }
    return guarded([&] {
        *bits = make_buffer(channel_extract(*options, view(stego, length)));
        return CS_OK;
    });
}

cs_status cs_analyze(const cs_options* options, const char* cover, size_t cover_length,
                     const char* stego, size_t stego_length, cs_buffer** report, int* invariant)
{
    if (!options || !report || (!cover && cover_length) || (!stego && stego_length)) {
        return fail(CS_E_INVALID_ARGUMENT, "cs_analyze: null argument");
    }
    return guarded([&] {
        const std::string_view c = view(cover, cover_length);
        const std::string_view s = view(stego, stego_length);
        const auto comparison =
            analysis::compare_histograms(analysis::histogram(c), analysis::histogram(s));
        const analysis::Channel channel = options->channel == CS_CHANNEL_HTML
                                              ? analysis::Channel::Html
                                          : options->channel == CS_CHANNEL_CASELESS
                                              ? analysis::Channel::Caseless
                                              : analysis::Channel::Ident;
        const auto check = analysis::verify_invariance(c, s, channel, options->mode);

        std::string text = analysis::format_report(comparison);
        text += "# invariant\t";
        text += check.invariant ? "yes" : "no";
        if (check.first_divergence) {
            text += "\t" + std::to_string(*check.first_divergence);
        }
        text += "\t" + check.detail + "\n";
        if (invariant) {
            *invariant = check.invariant ? 1 : 0;
        }
        *report = make_buffer(text);
        return CS_OK;
    });
}

const uint8_t* cs_buffer_data(const cs_buffer* buffer)
{
    return buffer ? buffer->bytes.data() : nullptr;
}

size_t cs_buffer_size(const cs_buffer* buffer)
{
    return buffer ? buffer->bytes.size() : 0;
}

void cs_buffer_destroy(cs_buffer* buffer)
{
    delete buffer;
}

} // extern "C"
