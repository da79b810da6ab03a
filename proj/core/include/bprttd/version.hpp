#pragma once

namespace bprttd {
inline constexpr const char* version = "0.1.0";
}
