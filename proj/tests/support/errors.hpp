#pragma once

#include "casesteg/error.hpp"

#include <optional>

namespace support {

// Code of the casesteg::Error thrown by fn, or nullopt if it returned.
template <typename Fn>
std::optional<casesteg::ErrorCode> error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const casesteg::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace support
