#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "weldkit/diagram.hpp"

using namespace weld;
using weld::test::word;

namespace {

// Slow reference: least (label, role, sign) key sequence over all
// relabelled basepoint rotations.
std::string canonical_oracle(const PlanarDiagram& d) {
  if (d.empty()) return kRoundCircleCode;
  std::vector<std::tuple<int, int, int>> best;
  PlanarDiagram arg;
  for (std::size_t s = 0; s < d.size(); ++s) {
    const PlanarDiagram r = relabel(rotate_basepoint(d, s));
    std::vector<std::tuple<int, int, int>> key;
    for (const Pass& p : r.word()) key.emplace_back(p.crossing, static_cast<int>(p.role), p.sign);
    if (best.empty() || key < best) {
      best = key;
      arg = r;
    }
  }
  return to_word(arg);
}

GaussCode random_gauss_code(std::mt19937_64& rng, int crossings) {
  std::vector<int> slots;
  for (int c = 1; c <= crossings; ++c) slots.insert(slots.end(), {c, c});
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> sign(crossings + 1), over_first(crossings + 1);
  for (int c = 1; c <= crossings; ++c) {
    sign[c] = rng() % 2 ? 1 : -1;
    over_first[c] = static_cast<int>(rng() % 2);
  }
  GaussCode gc;
  std::vector<int> seen(crossings + 1, 0);
  for (int c : slots) {
    const bool over = (seen[c]++ == 0) == (over_first[c] == 1);
    gc.word.push_back({over ? Role::Over : Role::Under, c, sign[c]});
  }
  return gc;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("canonical code matches the slow reference") {
    for (const auto& d : test::sample_diagrams(60, 6)) {
      CAPTURE(to_word(d));
      CHECK(canonical_code(d) == canonical_oracle(d));
    }
  }

  TEST_CASE("canonical code ignores basepoint and labels") {
    for (const auto& d : test::sample_diagrams(40, 6)) {
      const std::string code = canonical_code(d);
      for (std::size_t s = 0; s < d.size(); ++s) {
        CHECK(canonical_code(rotate_basepoint(d, s)) == code);
        CHECK(canonical_code(relabel(rotate_basepoint(d, s))) == code);
      }
      CHECK_FALSE(validate(parse_word(code)).has_value());
    }
  }

  TEST_CASE("basepoint rotation keeps the map") {
    for (const auto& d : test::sample_diagrams(30, 6)) {
      if (d.empty()) continue;
      const EulerCounts c = euler_counts(d);
      for (std::size_t s = 0; s < d.size(); ++s) {
        const PlanarDiagram r = rotate_basepoint(d, s);
        CHECK_FALSE(validate(r).has_value());
        CHECK(euler_counts(r).faces == c.faces);
      }
      CHECK(rotate_basepoint(d, d.size()) == d);
    }
  }

  TEST_CASE("mirror and reverse are involutions") {
    for (const auto& d : test::sample_diagrams(30, 6)) {
      CHECK(mirror(mirror(d)) == d);
      CHECK(reverse(reverse(d)) == d);
      CHECK_FALSE(validate(mirror(d)).has_value());
      CHECK_FALSE(validate(reverse(d)).has_value());
      CHECK(mirror(d).virtual_count() == d.virtual_count());
    }
  }

  TEST_CASE("face counts") {
    CHECK(euler_counts(PlanarDiagram()).euler() == 2);
    CHECK(euler_counts(word("O1+ U1+")).faces == 3);
    CHECK(euler_counts(word("V1+ V1+")).faces == 3);
    const EulerCounts t = euler_counts(test::corpus().entry("trefoil").diagram);
    CHECK(t.vertices == 3);
    CHECK(t.edges == 6);
    CHECK(t.faces == 5);
    for (const auto& d : test::sample_diagrams(40, 6)) CHECK(traced_genus(d) == 0);
  }

  TEST_CASE("rotation type") {
    const PlanarDiagram d = word("O1+ U1+");
    CHECK(d.rotation_type(0) == 1);
    CHECK(d.rotation_type(1) == 1);
    CHECK(word("U1+ O1+").rotation_type(0) == -1);
    CHECK(word("V1- V1-").rotation_type(1) == -1);
  }

  TEST_CASE("same up to rotation") {
    const GaussCode a{word("O1+ U2+ O3+ U1+ O2+ U3+").word()};
    const GaussCode b{word("U3+ O7+ U1+ O3+ U7+ O1+").word()};
    CHECK(same_up_to_rotation(a, b));
    const GaussCode c{word("O1- U2- O3- U1- O2- U3-").word()};
    CHECK_FALSE(same_up_to_rotation(a, c));
  }

  TEST_CASE("realized gauss codes are planar and keep their classical word") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const GaussCode gc = random_gauss_code(rng, 1 + trial % 5);
      const PlanarDiagram d = realize_gauss_code(gc);
      CAPTURE(to_word(gc.word));
      CHECK_FALSE(validate(d).has_value());
      CHECK(same_up_to_rotation(underlying_gauss_code(d), gc));
    }
    CHECK(realize_gauss_code(parse_gauss_code("O1+ O2+ U1+ U2+")).virtual_count() >= 1);
  }
}
