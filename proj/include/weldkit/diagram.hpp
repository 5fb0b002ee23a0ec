#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weld {

enum class Role : std::uint8_t { Over, Under, Virtual };

/// One pass of the circuit through a crossing.
///
/// For classical passes `sign` is the writhe of the crossing. For virtual
/// passes it is the local rotation type relative to pass order: +1 when the
/// later strand crosses the earlier one from right to left.
struct Pass {
  Role role = Role::Virtual;
  int crossing = 0;
  int sign = 1;

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// Oriented virtual 1-knot diagram stored as a signed extended Gauss code.
///
/// The word is read along the circuit from the basepoint. The empty word is
/// the embedded round circle. Construction does not validate; call
/// `validate` (or go through the codec) before trusting a diagram.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  explicit PlanarDiagram(std::vector<Pass> word);

  const std::vector<Pass>& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  /// Number of edges of the map; the round circle has one edge and no vertex.
  std::size_t edge_count() const { return word_.empty() ? 1 : word_.size(); }

  int crossing_count() const { return static_cast<int>(word_.size() / 2); }
  int classical_count() const;
  int virtual_count() const;
  int max_crossing_id() const;

  /// Index of the other pass through the same crossing, or npos if the word
  /// is structurally malformed at `pass`.
  std::size_t partner(std::size_t pass) const { return partner_[pass]; }

  /// Local rotation type (+1/-1) of the crossing through `pass`, relative to
  /// the pass order of the crossing's two passes.
  int rotation_type(std::size_t pass) const;

  bool is_classical(std::size_t pass) const { return word_[pass].role != Role::Virtual; }

  /// Pass index of the earlier of the crossing's two passes.
  std::size_t first_pass(std::size_t pass) const {
    return std::min(pass, partner_[pass]);
  }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.word_ == b.word_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Pass> word_;
  std::vector<std::size_t> partner_;
};

/// Classical-only word, compared up to cyclic rotation.
struct GaussCode {
  std::vector<Pass> word;
};

bool same_up_to_rotation(const GaussCode& a, const GaussCode& b);

struct Violation {
  std::string invariant;
  std::string detail;
  std::size_t position = 0;  // pass index the violation was found at
};

/// Checks token multiplicity, roles, signs, and planarity. Returns the first
/// violated invariant, or nothing when the diagram is valid.
std::optional<Violation> validate(const PlanarDiagram& d);

/// Structural checks only (everything except planarity).
std::optional<Violation> validate_structure(const PlanarDiagram& d);

// Half-edges of the map: pass i owns 2*i ("in") and 2*i+1 ("out").
struct FaceStep {
  std::size_t edge = 0;  // edge i runs from pass i to pass i+1
  bool forward = true;

  friend bool operator==(const FaceStep&, const FaceStep&) = default;
};
using Face = std::vector<FaceStep>;

/// Boundary walks of all faces, each walk keeping its face on the right.
std::vector<Face> trace_faces(const PlanarDiagram& d);

/// Face index on each side of every edge: [edge][0] right, [edge][1] left.
std::vector<std::array<std::size_t, 2>> edge_faces(const PlanarDiagram& d,
                                                   const std::vector<Face>& faces);

int traced_genus(const PlanarDiagram& d);

struct EulerCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler() const { return vertices - edges + faces; }
};
EulerCounts euler_counts(const PlanarDiagram& d);

/// Reorders passes (new position k holds old pass order[k]) keeping the
/// geometry: virtual signs flip for crossings whose pass order flips.
PlanarDiagram permute_passes(const PlanarDiagram& d, const std::vector<std::size_t>& order);

/// Moves the basepoint forward by `shift` passes.
PlanarDiagram rotate_basepoint(const PlanarDiagram& d, std::size_t shift);

/// Renumbers crossings 1..k in order of first appearance.
PlanarDiagram relabel(const PlanarDiagram& d);

/// Crossing change: O and U swapped, classical writhes negated. Virtual
/// crossings are untouched so the underlying flat curve is unchanged.
PlanarDiagram mirror(const PlanarDiagram& d);

/// Opposite orientation of the circuit.
PlanarDiagram reverse(const PlanarDiagram& d);

GaussCode underlying_gauss_code(const PlanarDiagram& d);

/// Realizes any Gauss code as a planar diagram by inserting virtual
/// crossings; no attempt is made to minimize them.
PlanarDiagram realize_gauss_code(const GaussCode& gc);

/// Sentinel canonical code of the round circle.
inline constexpr const char* kRoundCircleCode = "()";

/// Lexicographically least serialized word over all basepoints, with
/// crossings relabelled by first appearance.
std::string canonical_code(const PlanarDiagram& d);

std::string to_word(const PlanarDiagram& d);
std::string to_word(const std::vector<Pass>& passes);

}  // namespace weld
