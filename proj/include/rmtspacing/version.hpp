#ifndef RMTSPACING_VERSION_HPP_
#define RMTSPACING_VERSION_HPP_

#include <string_view>

#ifndef RMTSPACING_VERSION
#define RMTSPACING_VERSION "1.0.0"
#endif

namespace rmtspacing {

inline constexpr std::string_view kVersion = RMTSPACING_VERSION;

}  // namespace rmtspacing

#endif  // RMTSPACING_VERSION_HPP_
