#pragma once

#include <bitset>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/move_kind.hpp"

namespace weld {

enum class Theory { Classical, Virtual, Welded, RotationalWelded };

std::string_view to_string(Theory t);
std::optional<Theory> theory_from_string(std::string_view s);

class MoveSet {
 public:
  explicit MoveSet(Theory t);

  static MoveSet classical() { return MoveSet(Theory::Classical); }
  static MoveSet virtual_moves() { return MoveSet(Theory::Virtual); }
  static MoveSet welded() { return MoveSet(Theory::Welded); }
  static MoveSet rotational_welded() { return MoveSet(Theory::RotationalWelded); }

  Theory theory() const { return theory_; }
  bool contains(MoveKind k) const { return kinds_.test(static_cast<std::size_t>(k)); }
  std::vector<MoveKind> kinds() const;

 private:
  Theory theory_;
  std::bitset<kAllMoveKinds.size()> kinds_;
};

/// A located move. The site encodes the construction completely:
///   R1-       {crossing id}
///   R1+       {edge, rotation type, over-first (1/0, -1 for virtual)}
///   R2-       {crossing id, crossing id} ascending
///   R2+       {edge i, edge j, tail order, first strand over (1/0/-1), sign c, sign d}
///   R3 family {edge, edge, edge} ascending, the sides of a triangular face
struct MoveInstance {
  MoveKind kind = MoveKind::CR1Plus;
  std::vector<int> site;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
  friend auto operator<=>(const MoveInstance&, const MoveInstance&) = default;
};

/// Raised when an instance does not match the diagram it is applied to.
class StaleMoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Neighbor {
  MoveInstance move;
  PlanarDiagram result;
  std::string code;  // canonical_code(result)
};

/// All distinct moves of the set applicable to d, ordered by (kind, site).
/// Instances of one kind producing the same canonical diagram are merged,
/// keeping the least site.
std::vector<Neighbor> neighbors(const PlanarDiagram& d, const MoveSet& s);

std::vector<MoveInstance> find_moves(const PlanarDiagram& d, const MoveSet& s);

/// Moves of a single kind, regardless of theory.
std::vector<Neighbor> neighbors_of_kind(const PlanarDiagram& d, MoveKind k);

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveInstance& m);

std::optional<MoveInstance> verify_transition(const PlanarDiagram& from,
                                              const PlanarDiagram& to, MoveKind k);

}  // namespace weld
