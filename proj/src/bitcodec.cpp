#include "casesteg/bitcodec.hpp"

#include "casesteg/error.hpp"

#include <limits>
#include <string>

namespace casesteg {

BitVector::BitVector(std::initializer_list<int> bits)
{
    bits_.reserve(bits.size());
    for (int b : bits) {
        push_back(b != 0);
    }
}

BitVector BitVector::zeros(std::size_t count)
{
    BitVector out;
    out.bits_.assign(count, 0);
    return out;
}

void BitVector::append(const BitVector& other)
{
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const
{
    BitVector out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(first),
                     bits_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return out;
}

XorKey::XorKey(Bytes key_bytes) : bytes_(std::move(key_bytes))
{
    if (bytes_.empty()) {
        throw std::invalid_argument("xor key must contain at least one byte");
    }
}

BitVector bytes_to_bits(std::span<const std::uint8_t> payload)
{
    BitVector out;
    for (std::uint8_t byte : payload) {
        for (int shift = 7; shift >= 0; --shift) {
            out.push_back(((byte >> shift) & 1u) != 0);
        }
    }
    return out;
}

Bytes bits_to_bytes(const BitVector& bits)
{
    if (bits.size() % 8 != 0) {
        throw Error(ErrorCode::PartialByte,
                    std::to_string(bits.size()) + " bits do not form whole bytes");
    }
    Bytes out(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
        }
    }
    return out;
}

void require_frameable(std::uint64_t bit_count)
{
    if (bit_count > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::TooLong, "payload of " + std::to_string(bit_count) +
                                            " bits does not fit a 32-bit length prefix");
    }
}

BitVector frame(const BitVector& payload)
{
    const std::uint64_t length = payload.size();
    require_frameable(length);
    BitVector out;
    for (int shift = 31; shift >= 0; --shift) {
        out.push_back(((length >> shift) & 1u) != 0);
    }
    out.append(payload);
    return out;
}

std::uint64_t decode_length_prefix(const BitVector& bits)
{
    if (bits.size() < kLengthPrefixBits) {
        throw Error(ErrorCode::NoHeader, "need 32 bits for the length prefix, have " +
                                             std::to_string(bits.size()));
    }
    std::uint64_t length = 0;
    for (std::size_t i = 0; i < kLengthPrefixBits; ++i) {
        length = (length << 1) | (bits[i] ? 1u : 0u);
    }
    return length;
}

BitVector unframe(const BitVector& bits)
{
    const std::uint64_t length = decode_length_prefix(bits);
    const std::size_t available = bits.size() - kLengthPrefixBits;
    if (length > available) {
        throw Error(ErrorCode::Truncated, "length prefix declares " + std::to_string(length) +
                                              " bits but only " + std::to_string(available) +
                                              " follow");
    }
    return bits.slice(kLengthPrefixBits, static_cast<std::size_t>(length));
}

BitVector xor_transform(const BitVector& bits, const XorKey& key)
{
    const Bytes& k = key.bytes();
    BitVector out = bits;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::uint8_t byte = k[(i / 8) % k.size()];
        const bool key_bit = ((byte >> (7 - i % 8)) & 1u) != 0;
        out.set(i, bits[i] != key_bit);
    }
    return out;
}

} // namespace casesteg
