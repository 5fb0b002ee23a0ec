#include <doctest.h>

#include "support.hpp"
#include "weldkit/surface.hpp"

using namespace weld;
using weld::test::word;

TEST_SUITE("surface") {
  TEST_CASE("small cases") {
    const SurfaceCurve circle = representing_surface(PlanarDiagram());
    CHECK(surface_genus(circle) == 0);
    const SurfaceCounts c = surface_counts(circle);
    CHECK(c.vertices - c.edges + c.faces == 2);

    const SurfaceCurve tref = representing_surface(test::corpus().entry("trefoil").diagram);
    const SurfaceCounts t = surface_counts(tref);
    CHECK(surface_genus(tref) == 0);
    CHECK(t.vertices == 3);
    CHECK(t.edges == 6);
    CHECK(t.faces == 5);
    CHECK(tref.curve_vertices == 3);

    const SurfaceCurve vk = representing_surface(word("V1+ V1+"));
    CHECK(vk.genus == 1);
    CHECK(surface_genus(vk) == 1);
    CHECK(vk.curve_vertices == 0);
    CHECK(vk.curve_code.word.empty());
  }

  TEST_CASE("genus equals the virtual crossing count") {
    for (const auto& d : test::sample_diagrams(150, 7)) {
      const SurfaceCurve sc = representing_surface(d);
      const SurfaceCounts n = surface_counts(sc);
      CAPTURE(to_word(d));
      CHECK(surface_genus(sc) == d.virtual_count());
      CHECK(n.vertices - n.edges + n.faces == 2 - 2 * d.virtual_count());
      CHECK(same_up_to_rotation(sc.curve_code, underlying_gauss_code(d)));
    }
  }

  TEST_CASE("map is a valid combinatorial map") {
    for (const auto& d : test::sample_diagrams(30, 6)) {
      const SurfaceMap& m = representing_surface(d).map;
      const std::size_t darts = m.alpha.size();
      REQUIRE(m.sigma.size() == darts);
      for (std::size_t x = 0; x < darts; ++x) {
        CHECK(m.alpha[x] != x);
        CHECK(m.alpha[m.alpha[x]] == x);
        CHECK(m.vertex_of[m.sigma[x]] == m.vertex_of[x]);
      }
    }
  }
}
