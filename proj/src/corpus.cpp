#include "weldkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "weldkit/codec.hpp"
#include "weldkit/fiberwise.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/surface.hpp"

namespace weld {
namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw CorpusError("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// First "# provenance=..." comment of a file.
std::string provenance_of(const std::string& text, const std::filesystem::path& p) {
  std::istringstream in(text);
  std::string line;
  const std::string key = "# provenance=";
  while (std::getline(in, line))
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
  throw CorpusError(p.string() + ": missing provenance line");
}

std::vector<std::filesystem::path> files_with(const std::filesystem::path& dir,
                                              std::string_view ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> bracket_arg(std::string_view invariant, std::string_view head) {
  if (invariant.size() < head.size() + 2 || invariant.substr(0, head.size()) != head ||
      invariant[head.size()] != '[' || invariant.back() != ']')
    return std::nullopt;
  return std::string(invariant.substr(head.size() + 1, invariant.size() - head.size() - 2));
}

const FiniteGroupTable& panel_group(const std::string& name) {
  for (const auto& g : default_group_panel())
    if (g.name() == name) return g;
  throw CorpusError("unknown group " + name);
}

}  // namespace

std::filesystem::path bundled_corpus_dir() {
  return std::filesystem::path(WELDKIT_DATA_DIR) / "corpus";
}

const CorpusEntry& Corpus::entry(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw CorpusError("no corpus entry " + std::string(name));
}

const CorpusMovie& Corpus::movie(std::string_view name) const {
  for (const auto& m : movies)
    if (m.movie.name == name) return m;
  throw CorpusError("no corpus movie " + std::string(name));
}

Corpus load_corpus(const std::filesystem::path& dir) {
  Corpus c;
  try {
    for (const auto& p : files_with(dir, ".txt")) {
      const std::string text = read_file(p);
      const std::string prov = provenance_of(text, p);
      for (auto& nd : parse_diagram_file(text))
        c.entries.push_back({std::move(nd.name), std::move(nd.diagram), prov, {}});
    }
    for (const auto& p : files_with(dir, ".movie")) {
      const std::string text = read_file(p);
      c.movies.push_back({parse_movie(text), provenance_of(text, p), {}});
    }
  } catch (const ParseError& e) {
    throw CorpusError(std::string("corpus: ") + e.what());
  }

  std::istringstream table(read_file(dir / "expectations.tsv"));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(table, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream row(line);
    for (std::string col; std::getline(row, col, '\t');) cols.push_back(col);
    if (cols.size() != 4)
      throw CorpusError("expectations.tsv line " + std::to_string(line_no) + ": need 4 columns");
    Expectation ex{cols[1], cols[2], cols[3]};
    auto e = std::find_if(c.entries.begin(), c.entries.end(),
                          [&](const CorpusEntry& x) { return x.name == cols[0]; });
    if (e != c.entries.end()) {
      e->expected.push_back(std::move(ex));
      continue;
    }
    auto m = std::find_if(c.movies.begin(), c.movies.end(),
                          [&](const CorpusMovie& x) { return x.movie.name == cols[0]; });
    if (m == c.movies.end())
      throw CorpusError("expectations.tsv line " + std::to_string(line_no) + ": unknown entry " +
                        cols[0]);
    m->expected.push_back(std::move(ex));
  }
  return c;
}

std::string evaluate(const PlanarDiagram& d, std::string_view invariant) {
  const auto parity = parity_profile(d);
  if (invariant == "virtual_parity") return std::to_string(parity.virtual_parity);
  if (invariant == "classical_parity") return std::to_string(parity.classical_parity);
  if (invariant == "mixed_parity") return std::to_string(parity.mixed_parity);
  if (invariant == "classical_crossings") return std::to_string(d.classical_count());
  if (invariant == "virtual_crossings") return std::to_string(d.virtual_count());
  if (invariant == "whitney_degree") return std::to_string(whitney_degree(d));
  if (invariant == "genus") return std::to_string(surface_genus(representing_surface(d)));
  if (invariant == "alexander") return alexander_polynomial(d).to_string();
  if (invariant == "mirror_alexander") return alexander_polynomial(mirror(d)).to_string();
  if (invariant == "nested_pairs")
    return std::to_string(fiber_census(d).count(FiberSection::NestedPair));
  if (invariant == "disjoint_pairs")
    return std::to_string(fiber_census(d).count(FiberSection::DisjointPair));
  if (invariant == "canonical_code") return canonical_code(d);
  if (auto g = bracket_arg(invariant, "hom_count"))
    return std::to_string(hom_count(wirtinger_presentation(d), panel_group(*g)));
  if (auto g = bracket_arg(invariant, "mirror_hom_count"))
    return std::to_string(hom_count(wirtinger_presentation(mirror(d)), panel_group(*g)));
  throw CorpusError("unknown invariant " + std::string(invariant));
}

std::string evaluate(const Movie& m, std::string_view invariant) {
  if (invariant == "length") return std::to_string(m.length());
  if (auto t = bracket_arg(invariant, "verdict")) {
    const auto theory = theory_from_string(*t);
    if (!theory) throw CorpusError("unknown theory " + *t);
    const Verdict v = check_movie(m, MoveSet(*theory));
    if (v.accepted) return "ACCEPT";
    return "REJECT frame=" + std::to_string(v.first_violation->frame) +
           " reason=" + std::string(to_string(v.first_violation->reason));
  }
  throw CorpusError("unknown movie invariant " + std::string(invariant));
}

PlanarDiagram random_diagram(std::uint64_t seed, int crossing_budget) {
  std::mt19937_64 rng(seed);
  constexpr MoveKind creating[] = {MoveKind::CR1Plus, MoveKind::VR1Plus, MoveKind::CR2Plus,
                                   MoveKind::VR2Plus};
  constexpr MoveKind shuffling[] = {MoveKind::CR3, MoveKind::VR3, MoveKind::MR3, MoveKind::WOC};
  PlanarDiagram d;
  while (true) {
    if (rng() % 2 == 0) {
      std::vector<Neighbor> options;
      for (MoveKind k : shuffling) {
        auto part = neighbors_of_kind(d, k);
        std::move(part.begin(), part.end(), std::back_inserter(options));
      }
      if (!options.empty()) {
        d = options[rng() % options.size()].result;
        continue;
      }
    }
    std::vector<MoveKind> kinds;
    for (MoveKind k : creating)
      if (d.crossing_count() + crossing_delta(k) <= crossing_budget) kinds.push_back(k);
    if (kinds.empty()) return d;
    const auto options = neighbors_of_kind(d, kinds[rng() % kinds.size()]);
    if (!options.empty()) d = options[rng() % options.size()].result;
  }
}

Walk random_walk(const PlanarDiagram& start, const MoveSet& s, std::mt19937_64& rng, int steps,
                 int max_crossings) {
  Walk w;
  w.diagrams.push_back(start);
  for (int i = 0; i < steps; ++i) {
    std::vector<Neighbor> options;
    for (auto& nb : neighbors(w.diagrams.back(), s))
      if (nb.result.crossing_count() <= max_crossings) options.push_back(std::move(nb));
    if (options.empty()) break;
    auto& pick = options[rng() % options.size()];
    w.moves.push_back(pick.move);
    w.diagrams.push_back(std::move(pick.result));
  }
  return w;
}

}  // namespace weld
