#ifndef ARRIVAL_VERSION_HPP
#define ARRIVAL_VERSION_HPP

namespace arrival {
inline constexpr const char* kToolVersion = "1.0.0";
}

#endif
