#pragma once

#include <string_view>

namespace rd::embedded {

extern const std::string_view k_catalog;
extern const std::string_view k_hex_catalog;
extern const std::string_view k_fig5;
extern const std::string_view k_fig6a;
extern const std::string_view k_fig6b;
extern const std::string_view k_cap;

}  // namespace rd::embedded
