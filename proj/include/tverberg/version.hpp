#ifndef TVERBERG_VERSION_HPP
#define TVERBERG_VERSION_HPP

namespace tverberg {

inline constexpr const char* version = "1.0.0";

} // namespace tverberg

#endif
