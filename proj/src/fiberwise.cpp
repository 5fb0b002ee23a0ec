#include "weldkit/fiberwise.hpp"

#include "weldkit/invariants.hpp"

namespace weld {

std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::OffDiagram: return "off-diagram";
    case Stratum::RegularPoint: return "regular-point";
    case Stratum::ClassicalCrossing: return "classical-crossing";
    case Stratum::VirtualCrossing: return "virtual-crossing";
  }
  return "?";
}

std::string_view to_string(FiberSection f) {
  switch (f) {
    case FiberSection::Empty: return "empty";
    case FiberSection::SingleCircle: return "single-circle";
    case FiberSection::NestedPair: return "nested-pair";
    case FiberSection::DisjointPair: return "disjoint-pair";
  }
  return "?";
}

std::string_view to_string(ViolationReason r) {
  return r == ViolationReason::MoveNotLegal ? "move-not-legal-between-frames"
                                            : "move-kind-not-in-theory";
}

int FiberCensus::count(FiberSection f) const {
  for (const auto& s : strata)
    if (s.section == f) return s.count;
  return 0;
}

FiberCensus fiber_census(const PlanarDiagram& d) {
  const auto counts = euler_counts(d);
  FiberCensus c;
  c.strata = {{
      {Stratum::OffDiagram, FiberSection::Empty, counts.faces},
      {Stratum::RegularPoint, FiberSection::SingleCircle, counts.edges},
      {Stratum::ClassicalCrossing, FiberSection::NestedPair, d.classical_count()},
      {Stratum::VirtualCrossing, FiberSection::DisjointPair, d.virtual_count()},
  }};
  for (std::size_t p = 0; p < d.size(); ++p)
    if (d.word()[p].role == Role::Under) c.nested.push_back({d.word()[p].crossing, p});
  return c;
}

namespace {

bool legal_step(const PlanarDiagram& from, const PlanarDiagram& to, const MovieEvent& e) {
  if (!e.site) return verify_transition(from, to, e.kind).has_value();
  try {
    return canonical_code(apply_move(from, {e.kind, *e.site})) == canonical_code(to);
  } catch (const StaleMoveError&) {
    return false;
  }
}

}  // namespace

Verdict check_movie(const Movie& m, const MoveSet& s) {
  for (std::size_t i = 0; i < m.events.size(); ++i) {
    std::optional<ViolationReason> reason;
    if (!s.contains(m.events[i].kind))
      reason = ViolationReason::KindNotInTheory;
    else if (!legal_step(m.diagrams[i], m.diagrams[i + 1], m.events[i]))
      reason = ViolationReason::MoveNotLegal;
    if (reason) return {false, MovieViolation{i, *reason}};
  }
  return {};
}

bool weak_fiberwise_equivalent(const PlanarDiagram& a, const PlanarDiagram& b) {
  return parity_profile(a).virtual_parity == parity_profile(b).virtual_parity;
}

}  // namespace weld
