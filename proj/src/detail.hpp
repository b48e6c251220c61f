#ifndef JSONSTATS_SRC_DETAIL_HPP
#define JSONSTATS_SRC_DETAIL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "jsonstats/document.hpp"

namespace jsonstats::detail {

// Length of the well-formed UTF-8 sequence starting at text[i], or 0.
std::size_t utf8_sequence_length(std::string_view text, std::size_t i) noexcept;

bool is_valid_utf8(std::string_view text) noexcept;

// Applies last-value-wins to repeated object keys in place.
void collapse_duplicate_keys(std::vector<std::string>& keys, std::vector<Value>& children);

} // namespace jsonstats::detail

#endif
