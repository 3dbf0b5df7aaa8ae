#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace stylo::utf8 {

struct Decoded {
    char32_t code_point;
    std::size_t length;  // bytes consumed
};

/// Decodes the code point starting at `pos`; nullopt on a malformed sequence.
std::optional<Decoded> decode(std::string_view bytes, std::size_t pos);

void append(std::string& out, char32_t code_point);

std::u32string to_u32(std::string_view bytes);
std::string from_u32(std::u32string_view code_points);

}  // namespace stylo::utf8
