#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/movie.hpp"
#include "weldkit/moves.hpp"

namespace weld {

enum class Stratum { OffDiagram, RegularPoint, ClassicalCrossing, VirtualCrossing };
enum class FiberSection { Empty, SingleCircle, NestedPair, DisjointPair };

std::string_view to_string(Stratum s);
std::string_view to_string(FiberSection f);

/// Nested fiber circles over a classical crossing; the inner one belongs to
/// the under strand.
struct NestedPair {
  int crossing = 0;
  std::size_t inner_pass = 0;
};

struct StratumCount {
  Stratum stratum;
  FiberSection section;
  int count = 0;  // cells of the stratum: faces, edges, or crossings
};

struct FiberCensus {
  std::array<StratumCount, 4> strata;
  std::vector<NestedPair> nested;

  int count(FiberSection f) const;
};

FiberCensus fiber_census(const PlanarDiagram& d);

enum class ViolationReason { MoveNotLegal, KindNotInTheory };

std::string_view to_string(ViolationReason r);  // "move-not-legal-between-frames", ...

struct MovieViolation {
  std::size_t frame = 0;  // index of the event's source frame
  ViolationReason reason = ViolationReason::MoveNotLegal;
};

struct Verdict {
  bool accepted = true;
  std::optional<MovieViolation> first_violation;
};

/// Accepts iff every event's kind belongs to `s` and the adjacent frames are
/// joined by a move of that kind (at the hinted site, if one is given).
Verdict check_movie(const Movie& m, const MoveSet& s);

/// Decided by virtual crossing parity; answers the nonorientable variant too.
bool weak_fiberwise_equivalent(const PlanarDiagram& a, const PlanarDiagram& b);

}  // namespace weld
