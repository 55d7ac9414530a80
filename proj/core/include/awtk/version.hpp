#pragma once

#include <string_view>

namespace awtk {

std::string_view version() noexcept;

}  // namespace awtk
