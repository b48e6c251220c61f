#ifndef JSONSTATS_VERSION_HPP
#define JSONSTATS_VERSION_HPP

namespace jsonstats {

inline constexpr const char* version = "1.0.0";

} // namespace jsonstats

#endif
