#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace casesteg {

enum class ErrorCode {
    PartialByte,
    TooLong,
    Truncated,
    NoHeader,
    UnterminatedTag,
    Capacity,
    NotAlpha,
    UnterminatedString,
    UnterminatedComment,
    AmbiguousCover,
    Collision,
    BadProfile,
};

/// Stable name used in diagnostics, e.g. "E_CAPACITY".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> offset = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Byte offset in the input the error refers to, when there is one.
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> offset_;
};

} // namespace casesteg
