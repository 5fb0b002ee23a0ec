#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/move_kind.hpp"

namespace weld {

struct MovieEvent {
  MoveKind kind = MoveKind::CR1Plus;
  std::optional<std::vector<int>> site;  // location hint, matched against MoveInstance::site
};

/// Frames and the events joining them: diagrams.size() == events.size() + 1.
struct Movie {
  std::string name;
  std::vector<PlanarDiagram> diagrams;
  std::vector<MovieEvent> events;

  std::size_t length() const { return events.size(); }
};

}  // namespace weld
