#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace casesteg {

using Bytes = std::vector<std::uint8_t>;

/// Ordered payload bits b_1..b_k. Each stored symbol is 0 or 1.
class BitVector {
public:
    BitVector() = default;
    BitVector(std::initializer_list<int> bits);

    static BitVector zeros(std::size_t count);

    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
    void append(const BitVector& other);

    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool bit) { bits_[i] = bit ? 1 : 0; }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// Copy of bits [first, first + count).
    BitVector slice(std::size_t first, std::size_t count) const;

    std::span<const std::uint8_t> symbols() const noexcept { return bits_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Bits of the length prefix written by frame().
inline constexpr std::size_t kLengthPrefixBits = 32;

/// Repeating key for xor_transform. Never empty.
class XorKey {
public:
    explicit XorKey(Bytes key_bytes);
    const Bytes& bytes() const noexcept { return bytes_; }

private:
    Bytes bytes_;
};

/// MSB-first within each byte, bytes in input order.
BitVector bytes_to_bits(std::span<const std::uint8_t> payload);

/// Throws E_PARTIAL_BYTE unless bits.size() is a multiple of 8.
Bytes bits_to_bytes(const BitVector& bits);

/// Throws E_TOO_LONG when a payload of this many bits cannot be framed.
void require_frameable(std::uint64_t bit_count);

/// 32-bit big-endian bit count followed by the payload itself.
BitVector frame(const BitVector& payload);

/// Value of the 32-bit prefix at the front of bits. Throws E_NO_HEADER when
/// fewer than 32 bits are present.
std::uint64_t decode_length_prefix(const BitVector& bits);

/// Inverse of frame(). Trailing bits past the declared length are ignored.
BitVector unframe(const BitVector& bits);

/// XOR with the key expanded to a repeating MSB-first bitstream. Its own
/// inverse. This is obfuscation, not encryption.
BitVector xor_transform(const BitVector& bits, const XorKey& key);

} // namespace casesteg
