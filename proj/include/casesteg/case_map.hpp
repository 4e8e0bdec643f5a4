#pragma once

namespace casesteg {

/// Code distance between an ASCII lowercase letter and its uppercase form.
inline constexpr int kCaseOffset = 'a' - 'A';

constexpr bool is_lower_letter(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_upper_letter(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_letter(char c) noexcept { return is_lower_letter(c) || is_upper_letter(c); }
constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

/// l(c): lowercases 'A'..'Z', identity elsewhere.
constexpr char to_lower_letter(char c) noexcept
{
    return is_upper_letter(c) ? static_cast<char>(c + kCaseOffset) : c;
}

/// u(c): uppercases 'a'..'z', identity elsewhere.
constexpr char to_upper_letter(char c) noexcept
{
    return is_lower_letter(c) ? static_cast<char>(c - kCaseOffset) : c;
}

/// The case channel: l(c) carries 0, u(c) carries 1. Throws E_NOT_ALPHA
/// unless c is an ASCII letter.
char stego_char(char c, bool bit);

/// Decodes a carrier letter: lowercase is 0, uppercase is 1.
constexpr bool decode_case(char c) noexcept { return is_upper_letter(c); }

} // namespace casesteg
