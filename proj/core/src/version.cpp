#include "awtk/version.hpp"

#ifndef AWTK_VERSION
#define AWTK_VERSION "unknown"
#endif

namespace awtk {

std::string_view version() noexcept { return AWTK_VERSION; }

}  // namespace awtk
