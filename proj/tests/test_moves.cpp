#include <doctest.h>

#include <set>

#include "support.hpp"
#include "weldkit/moves.hpp"

using namespace weld;
using weld::test::word;

TEST_SUITE("moves") {
  TEST_CASE("theory containment") {
    const MoveSet c = MoveSet::classical(), v = MoveSet::virtual_moves(), w = MoveSet::welded(),
                  rw = MoveSet::rotational_welded();
    for (MoveKind k : kAllMoveKinds) {
      CAPTURE(to_string(k));
      if (c.contains(k)) CHECK(v.contains(k));
      if (v.contains(k)) CHECK(w.contains(k));
      CHECK(rw.contains(k) == (w.contains(k) && !is_virtual_r1(k)));
    }
    CHECK(c.kinds().size() == 5);
    CHECK(v.kinds().size() == 11);
    CHECK(w.kinds().size() == 12);
    CHECK(rw.kinds().size() == 10);
    CHECK_FALSE(v.contains(MoveKind::WOC));
    CHECK(w.contains(MoveKind::WOC));
  }

  TEST_CASE("names, inverses and deltas") {
    for (MoveKind k : kAllMoveKinds) {
      CHECK(move_kind_from_string(to_string(k)) == k);
      CHECK(inverse(inverse(k)) == k);
      CHECK(crossing_delta(inverse(k)) == -crossing_delta(k));
    }
    CHECK(crossing_delta(MoveKind::CR2Plus) == 2);
    CHECK(crossing_delta(MoveKind::VR1Minus) == -1);
    CHECK(crossing_delta(MoveKind::WOC) == 0);
    CHECK_FALSE(move_kind_from_string("R4").has_value());
    for (Theory t : {Theory::Classical, Theory::Virtual, Theory::Welded, Theory::RotationalWelded})
      CHECK(theory_from_string(to_string(t)) == t);
  }

  TEST_CASE("curls on the round circle") {
    std::set<std::string> codes;
    for (const auto& nb : neighbors_of_kind(PlanarDiagram(), MoveKind::VR1Plus)) codes.insert(nb.code);
    // Moving the basepoint across the crossing turns V1+ V1+ into V1- V1-.
    CHECK(codes == std::set<std::string>{"V1- V1-"});
    CHECK(canonical_code(word("V1+ V1+")) == "V1- V1-");
    const auto r1 = neighbors_of_kind(word("V1+ V1+"), MoveKind::VR1Minus);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].result.empty());
    CHECK(r1[0].move.site == std::vector<int>{1});
  }

  TEST_CASE("results are valid and change the crossing count by the delta") {
    for (const auto& d : test::sample_diagrams(15, 5)) {
      for (const auto& nb : neighbors(d, MoveSet::welded())) {
        CAPTURE(to_word(d));
        CAPTURE(to_string(nb.move.kind));
        CHECK_FALSE(validate(nb.result).has_value());
        CHECK(nb.result.crossing_count() - d.crossing_count() == crossing_delta(nb.move.kind));
        CHECK(nb.code == canonical_code(nb.result));
        CHECK(apply_move(d, nb.move) == nb.result);
      }
    }
  }

  TEST_CASE("every move is undone by its inverse kind") {
    for (const auto& d : test::sample_diagrams(6, 4)) {
      const std::string home = canonical_code(d);
      for (const auto& nb : neighbors(d, MoveSet::welded())) {
        bool back = false;
        for (const auto& nb2 : neighbors_of_kind(nb.result, inverse(nb.move.kind)))
          back = back || nb2.code == home;
        CAPTURE(to_word(d));
        CAPTURE(to_string(nb.move.kind));
        CHECK(back);
      }
    }
  }

  TEST_CASE("neighbors respect the theory") {
    for (const auto& d : test::sample_diagrams(10, 5))
      for (Theory t : {Theory::Classical, Theory::Virtual, Theory::Welded, Theory::RotationalWelded}) {
        const MoveSet s(t);
        for (const auto& m : find_moves(d, s)) CHECK(s.contains(m.kind));
      }
  }

  TEST_CASE("stale instances are refused") {
    const PlanarDiagram d = word("O1+ U1+");
    CHECK_THROWS_AS(apply_move(d, {MoveKind::VR1Minus, {1}}), StaleMoveError);
    CHECK_THROWS_AS(apply_move(d, {MoveKind::CR1Minus, {7}}), StaleMoveError);
    CHECK_THROWS_AS(apply_move(d, {MoveKind::CR3, {0, 1, 2}}), StaleMoveError);
    CHECK(apply_move(d, {MoveKind::CR1Minus, {1}}).empty());
  }

  TEST_CASE("transitions are recognized up to basepoint") {
    const PlanarDiagram d = test::corpus().entry("trefoil").diagram;
    for (const auto& nb : neighbors(d, MoveSet::welded())) {
      const PlanarDiagram moved = relabel(rotate_basepoint(nb.result, nb.result.size() / 2));
      CHECK(verify_transition(d, moved, nb.move.kind).has_value());
    }
    CHECK_FALSE(verify_transition(d, PlanarDiagram(), MoveKind::CR1Minus).has_value());
  }
}
