#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace weld {

// "Plus" kinds create crossings, "Minus" kinds remove them.
enum class MoveKind : std::uint8_t {
  CR1Plus,
  CR1Minus,
  CR2Plus,
  CR2Minus,
  CR3,
  VR1Plus,
  VR1Minus,
  VR2Plus,
  VR2Minus,
  VR3,
  MR3,  // virtual strand slides across a classical crossing
  WOC,  // over-arc slides across a virtual crossing
};

inline constexpr std::array<MoveKind, 12> kAllMoveKinds = {
    MoveKind::CR1Plus,  MoveKind::CR1Minus, MoveKind::CR2Plus, MoveKind::CR2Minus,
    MoveKind::CR3,      MoveKind::VR1Plus,  MoveKind::VR1Minus, MoveKind::VR2Plus,
    MoveKind::VR2Minus, MoveKind::VR3,      MoveKind::MR3,      MoveKind::WOC};

std::string_view to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(std::string_view s);

MoveKind inverse(MoveKind k);

/// Change in crossing count caused by one application.
int crossing_delta(MoveKind k);

bool is_virtual_r1(MoveKind k);

}  // namespace weld
