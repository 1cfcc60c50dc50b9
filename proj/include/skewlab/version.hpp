#ifndef SKEWLAB_VERSION_HPP
#define SKEWLAB_VERSION_HPP

namespace skewlab {

inline constexpr const char* kVersion = "0.1.0";

} // namespace skewlab

#endif
