#pragma once

#include <string_view>
#include <vector>

#include "weldkit/codec.hpp"
#include "weldkit/corpus.hpp"

namespace weld::test {

inline PlanarDiagram word(std::string_view w) { return parse_word(w); }

inline const Corpus& corpus() {
  static const Corpus c = load_corpus();
  return c;
}

// Seeded welded-trivial diagrams plus every corpus entry.
inline std::vector<PlanarDiagram> sample_diagrams(int count, int budget) {
  std::vector<PlanarDiagram> out;
  for (const auto& e : corpus().entries) out.push_back(e.diagram);
  for (int s = 0; s < count; ++s) out.push_back(random_diagram(1000 + s, budget));
  return out;
}

}  // namespace weld::test
