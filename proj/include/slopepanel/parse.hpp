#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace slopepanel::detail {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

// Throws Error(ParseError) on anything but an optionally signed decimal.
std::int64_t parse_int(std::string_view s);
std::vector<std::int64_t> parse_int_list(std::string_view s);

}  // namespace slopepanel::detail
