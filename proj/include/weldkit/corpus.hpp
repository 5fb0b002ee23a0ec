#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/movie.hpp"
#include "weldkit/moves.hpp"

namespace weld {

struct Expectation {
  std::string invariant;  // e.g. "virtual_parity", "hom_count[s3]", "verdict[welded]"
  std::string expected;
  std::string source;     // figure, definition, oracle, reconstruction, ...
};

struct CorpusEntry {
  std::string name;
  PlanarDiagram diagram;
  std::string provenance;  // "figure", "generator" or "reconstruction", plus a note
  std::vector<Expectation> expected;
};

struct CorpusMovie {
  Movie movie;
  std::string provenance;
  std::vector<Expectation> expected;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusMovie> movies;

  const CorpusEntry& entry(std::string_view name) const;
  const CorpusMovie& movie(std::string_view name) const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::filesystem::path bundled_corpus_dir();

/// Loads every *.txt diagram file and *.movie file of the directory plus
/// expectations.tsv. Any malformed entry fails the whole load.
Corpus load_corpus(const std::filesystem::path& dir = bundled_corpus_dir());

/// Value of a named invariant as it appears in the expectations table.
std::string evaluate(const PlanarDiagram& d, std::string_view invariant);
std::string evaluate(const Movie& m, std::string_view invariant);

/// Diagram built from the round circle by random crossing-creating welded
/// moves (mixed with triangle moves) until no creating move fits the budget.
/// Welded-trivial by construction. Deterministic for a seed.
PlanarDiagram random_diagram(std::uint64_t seed, int crossing_budget);

/// Random walk of `steps` moves from s, never exceeding `max_crossings`.
/// Returns the visited diagrams including the start and the moves taken.
struct Walk {
  std::vector<PlanarDiagram> diagrams;
  std::vector<MoveInstance> moves;
};
Walk random_walk(const PlanarDiagram& start, const MoveSet& s, std::mt19937_64& rng, int steps,
                 int max_crossings);

}  // namespace weld
