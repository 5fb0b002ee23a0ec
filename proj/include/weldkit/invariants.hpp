#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/group_table.hpp"
#include "weldkit/laurent.hpp"
#include "weldkit/moves.hpp"

namespace weld {

struct ParityProfile {
  int virtual_parity = 0;
  int classical_parity = 0;
  int mixed_parity = 0;

  friend bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

ParityProfile parity_profile(const PlanarDiagram& d);

/// Rotation number of the underlying flat curve (virtual crossings count as
/// double points), with the face right of the basepoint taken as outer.
/// The counterclockwise round circle has degree +1.
int whitney_degree(const PlanarDiagram& d);

/// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using GroupWord = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<GroupWord> relators;
};

/// Freely and cyclically reduces a word.
GroupWord reduce(GroupWord w);

/// Arcs break only at classical undercrossings; one conjugation relator per
/// classical crossing, x_out = x_over^e x_in x_over^-e with e the writhe.
GroupPresentation wirtinger_presentation(const PlanarDiagram& d);

std::string to_string(const GroupPresentation& p);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultHomBudget = 50'000'000;

/// Number of homomorphisms from the presented group to G, by backtracking
/// with relator propagation. Throws BudgetExceeded when more than `budget`
/// search nodes would be visited.
std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroupTable& g,
                        std::uint64_t budget = kDefaultHomBudget);

/// Generator of the smallest principal ideal containing the first elementary
/// ideal of the Fox Jacobian, normalized (lowest degree 0, positive leading).
LaurentPolynomial alexander_polynomial(const PlanarDiagram& d);
LaurentPolynomial alexander_polynomial(const GroupPresentation& p);

struct Witness {
  std::string invariant;  // e.g. "virtual_parity", "hom_count[s3]", "alexander"
  std::string value_a;
  std::string value_b;
};

struct Distinction {
  std::optional<Witness> witness;
  std::vector<std::string> inconclusive;  // invariants whose budget ran out
};

/// First invariant valid for the theory whose values differ. No witness means
/// "not distinguished", never "equivalent".
Distinction distinguish(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                        const std::vector<FiniteGroupTable>& panel = default_group_panel());

}  // namespace weld
