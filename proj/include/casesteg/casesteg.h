/*
 * casesteg C API.
 *
 * Every function returns a cs_status; on failure cs_last_error() holds a
 * message for the calling thread. Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function.
 */
#ifndef CASESTEG_H
#define CASESTEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CASESTEG_BUILDING)
#    define CASESTEG_API __declspec(dllexport)
#  else
#    define CASESTEG_API __declspec(dllimport)
#  endif
#else
#  define CASESTEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
    CS_OK = 0,
    CS_E_PARTIAL_BYTE = 1,
    CS_E_TOO_LONG = 2,
    CS_E_TRUNCATED = 3,
    CS_E_NO_HEADER = 4,
    CS_E_UNTERMINATED_TAG = 5,
    CS_E_CAPACITY = 6,
    CS_E_NOT_ALPHA = 7,
    CS_E_UNTERMINATED_STRING = 8,
    CS_E_UNTERMINATED_COMMENT = 9,
    CS_E_AMBIGUOUS_COVER = 10,
    CS_E_COLLISION = 11,
    CS_E_BAD_PROFILE = 12,
    CS_E_INVALID_ARGUMENT = 100,
    CS_E_INTERNAL = 101
} cs_status;

typedef enum cs_channel {
    CS_CHANNEL_HTML = 0,
    CS_CHANNEL_CASELESS = 1,
    CS_CHANNEL_IDENT = 2
} cs_channel;

typedef enum cs_length_mode {
    CS_MODE_INBAND = 0,
    CS_MODE_HEADER_TAG = 1
} cs_length_mode;

typedef enum cs_strategy {
    CS_STRATEGY_ALL = 0,
    CS_STRATEGY_FIRST_CHAR = 1,
    CS_STRATEGY_KEYWORDS = 2,
    CS_STRATEGY_IDENTIFIERS = 3
} cs_strategy;

/* Channel selection plus its parameters (mode, strategy, profile, key). */
typedef struct cs_options cs_options;

/* Owned byte buffer returned by embed/extract/analyze. */
typedef struct cs_buffer cs_buffer;

typedef struct cs_embed_stats {
    uint64_t payload_bits;  /* bits of payload carried */
    uint64_t capacity_bits; /* payload bits the cover could carry */
} cs_embed_stats;

/* "E_CAPACITY" etc.; "OK" for CS_OK. Never NULL. */
CASESTEG_API const char* cs_status_name(cs_status status);

/* Message for the last failing call on this thread; "" if none. */
CASESTEG_API const char* cs_last_error(void);

CASESTEG_API cs_status cs_options_create(cs_channel channel, cs_options** out);
CASESTEG_API void cs_options_destroy(cs_options* options);

/* html only; CS_E_INVALID_ARGUMENT on other channels. Default: in-band. */
CASESTEG_API cs_status cs_options_set_mode(cs_options* options, cs_length_mode mode);

/* caseless only. Default: CS_STRATEGY_ALL. */
CASESTEG_API cs_status cs_options_set_strategy(cs_options* options, cs_strategy strategy);

/* caseless only. Default: the built-in "pascal" profile. */
CASESTEG_API cs_status cs_options_set_profile_builtin(cs_options* options, const char* name);
CASESTEG_API cs_status cs_options_set_profile_text(cs_options* options, const char* text,
                                                   size_t length);

/* Toy XOR obfuscation key; length 0 clears it. Not encryption. */
CASESTEG_API cs_status cs_options_set_key(cs_options* options, const uint8_t* key, size_t length);

CASESTEG_API cs_status cs_capacity(const cs_options* options, const char* document, size_t length,
                                   uint64_t* capacity_bits);

/* Payload given as bytes, MSB-first. stats may be NULL. */
CASESTEG_API cs_status cs_embed(const cs_options* options, const char* cover, size_t cover_length,
                                const uint8_t* payload, size_t payload_length,
                                cs_buffer** stego, cs_embed_stats* stats);

/* Payload given as one 0/1 value per byte, for bit counts that are not a
 * multiple of eight. */
CASESTEG_API cs_status cs_embed_bits(const cs_options* options, const char* cover,
                                     size_t cover_length, const uint8_t* bits, size_t bit_count,
                                     cs_buffer** stego, cs_embed_stats* stats);

CASESTEG_API cs_status cs_extract(const cs_options* options, const char* stego, size_t length,
                                  cs_buffer** payload);

/* Recovered bits, one 0/1 value per byte. */
CASESTEG_API cs_status cs_extract_bits(const cs_options* options, const char* stego,
                                       size_t length, cs_buffer** bits);

/* Tab-separated histogram report of cover vs stego plus invariance
 * summary. invariant may be NULL. */
CASESTEG_API cs_status cs_analyze(const cs_options* options, const char* cover,
                                  size_t cover_length, const char* stego, size_t stego_length,
                                  cs_buffer** report, int* invariant);

CASESTEG_API const uint8_t* cs_buffer_data(const cs_buffer* buffer);
CASESTEG_API size_t cs_buffer_size(const cs_buffer* buffer);
CASESTEG_API void cs_buffer_destroy(cs_buffer* buffer);

#ifdef __cplusplus
}
#endif

#endif /* CASESTEG_H */
