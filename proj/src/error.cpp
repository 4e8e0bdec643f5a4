#include "casesteg/error.hpp"

namespace casesteg {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::PartialByte: return "E_PARTIAL_BYTE";
    case ErrorCode::TooLong: return "E_TOO_LONG";
    case ErrorCode::Truncated: return "E_TRUNCATED";
    case ErrorCode::NoHeader: return "E_NO_HEADER";
    case ErrorCode::UnterminatedTag: return "E_UNTERMINATED_TAG";
    case ErrorCode::Capacity: return "E_CAPACITY";
    case ErrorCode::NotAlpha: return "E_NOT_ALPHA";
    case ErrorCode::UnterminatedString: return "E_UNTERMINATED_STRING";
    case ErrorCode::UnterminatedComment: return "E_UNTERMINATED_COMMENT";
    case ErrorCode::AmbiguousCover: return "E_AMBIGUOUS_COVER";
    case ErrorCode::Collision: return "E_COLLISION";
    case ErrorCode::BadProfile: return "E_BAD_PROFILE";
    }
    return "E_UNKNOWN";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<std::size_t> offset)
{
    std::string out(error_name(code));
    out += ": ";
    out += message;
    if (offset) {
        out += " (at offset " + std::to_string(*offset) + ")";
    }
    return out;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> offset)
    : std::runtime_error(decorate(code, message, offset)), code_(code), offset_(offset)
{
}

} // namespace casesteg
