#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dckl {

enum class Side { Left, Right, TwoSided };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two_sided";
  }
  return "?";
}

inline std::optional<Side> parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two_sided" || s == "two-sided") return Side::TwoSided;
  return std::nullopt;
}

}  // namespace dckl
