#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/movie.hpp"
#include "weldkit/moves.hpp"

namespace weld {

struct SearchLimits {
  int max_depth = 8;
  std::size_t max_nodes = 200'000;
  int max_crossings = 12;  // states with more crossings are not visited
};

struct MovePath {
  std::string start_code;
  std::vector<MoveInstance> moves;
  std::string end_code;

  std::size_t length() const { return moves.size(); }
};

enum class SearchStatus { Found, Exhausted, Distinguished };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<MovePath> path;     // when Found
  std::optional<Witness> witness;   // when Distinguished
  std::size_t visited = 0;
};

/// Tries the invariant distinguisher first, then breadth-first search from a
/// toward b with states deduplicated by canonical code. Exhausted means the
/// limits ran out, not that the diagrams are inequivalent.
SearchResult bfs_path(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                      const SearchLimits& lim = {},
                      const std::vector<FiniteGroupTable>& panel = default_group_panel());

/// Same search without the distinguisher.
SearchResult bfs_path_only(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                           const SearchLimits& lim = {});

/// Canonical codes reachable within the limits, each with its least depth.
std::map<std::string, int> reachable_set(const PlanarDiagram& d, const MoveSet& s,
                                         const SearchLimits& lim = {});

/// Replays the path from `start` into a movie with located events.
Movie path_to_movie(const PlanarDiagram& start, const MovePath& path, std::string name);

}  // namespace weld
