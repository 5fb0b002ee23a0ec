// Acceptance criteria 1-10. One PASS/FAIL line per criterion; the exit status
// is nonzero if any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "weldkit/cli.hpp"
#include "weldkit/codec.hpp"
#include "weldkit/corpus.hpp"
#include "weldkit/fiberwise.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/search.hpp"
#include "weldkit/surface.hpp"

using namespace weld;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Corpus& corpus() {
  static const Corpus c = load_corpus();
  return c;
}

const FiniteGroupTable& group(const std::string& name) {
  for (const auto& g : default_group_panel())
    if (g.name() == name) return g;
  throw std::runtime_error("no group " + name);
}

// Diagrams for the property suites: random welded-trivial diagrams of mixed
// budgets, followed by walks away from the nontrivial corpus knots.
std::vector<PlanarDiagram> random_pool(std::uint64_t seed, int count, const MoveSet& s) {
  std::mt19937_64 rng(seed);
  const char* starts[] = {"trefoil", "trefoil_mirror", "figure_eight", "virtual_trefoil", "reef"};
  std::vector<PlanarDiagram> out;
  for (int k = 0; k < count; ++k) {
    if (k % 2 == 0) {
      out.push_back(random_diagram(seed * 1000 + k, k % 8));
    } else {
      const PlanarDiagram& start = corpus().entry(starts[(k / 2) % 5]).diagram;
      out.push_back(random_walk(start, s, rng, 1 + k % 4, 10).diagrams.back());
    }
  }
  return out;
}

// Uniform over the applicable kinds, then over the sites of that kind, so
// sparse kinds are not drowned out by the many R2+ sites.
Neighbor random_neighbor(const std::vector<Neighbor>& nbs, std::mt19937_64& rng) {
  std::map<MoveKind, std::vector<const Neighbor*>> by_kind;
  for (const auto& nb : nbs) by_kind[nb.move.kind].push_back(&nb);
  auto it = by_kind.begin();
  std::advance(it, rng() % by_kind.size());
  return *it->second[rng() % it->second.size()];
}

std::uint64_t brute_force_homs(const GroupPresentation& p, const FiniteGroupTable& g) {
  std::vector<int> img(p.generators, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = g.identity();
      for (int letter : r) {
        const int x = img[std::abs(letter) - 1];
        acc = g.mul(acc, letter > 0 ? x : g.inv(x));
      }
      ok = ok && acc == g.identity();
    }
    count += ok ? 1 : 0;
    int pos = 0;
    while (pos < p.generators && ++img[pos] == g.order()) img[pos++] = 0;
    if (pos == p.generators) return count;
  }
}

Outcome genus_law() {
  std::vector<PlanarDiagram> ds;
  for (const auto& e : corpus().entries) ds.push_back(e.diagram);
  for (int s = 0; s < 500; ++s) ds.push_back(random_diagram(10'000 + s, s % 9));
  int bad = 0, virtuals = 0;
  for (const auto& d : ds) {
    const SurfaceCurve sc = representing_surface(d);
    const SurfaceCounts n = surface_counts(sc);
    const int g = surface_genus(sc);
    virtuals += d.virtual_count();
    if (g != d.virtual_count() || n.vertices - n.edges + n.faces != 2 - 2 * g) ++bad;
  }
  return {bad == 0, std::to_string(ds.size()) + " diagrams, " + std::to_string(virtuals) +
                        " virtual crossings, " + std::to_string(bad) + " exceptions"};
}

Outcome parity_invariance() {
  const MoveSet rw = MoveSet::rotational_welded();
  int bad = 0, applications = 0, vr1 = 0;
  for (int s = 0; s < 200; ++s) {
    const PlanarDiagram d = random_diagram(20'000 + s, 1 + s % 7);
    const int before = parity_profile(d).virtual_parity;
    for (const auto& nb : neighbors(d, MoveSet::welded())) {
      ++applications;
      const bool flipped = parity_profile(nb.result).virtual_parity != before;
      if (is_virtual_r1(nb.move.kind)) {
        ++vr1;
        bad += flipped ? 0 : 1;
      } else if (rw.contains(nb.move.kind)) {
        bad += flipped ? 1 : 0;
      }
    }
  }
  return {bad == 0 && vr1 > 0, std::to_string(applications) + " applications (" +
                                   std::to_string(vr1) + " vR1), " + std::to_string(bad) +
                                   " exceptions"};
}

Outcome welded_group_invariance() {
  const MoveSet w = MoveSet::welded();
  std::mt19937_64 rng(3);
  const auto pool = random_pool(3, 100, w);
  int bad = 0, nontrivial = 0;
  std::set<MoveKind> kinds;
  for (const auto& d : pool) {
    const auto nbs = neighbors(d, w);
    const Neighbor nb = random_neighbor(nbs, rng);
    kinds.insert(nb.move.kind);
    const auto p = wirtinger_presentation(d), q = wirtinger_presentation(nb.result);
    const auto s3 = hom_count(p, group("s3"));
    nontrivial += s3 != 6 ? 1 : 0;
    if (s3 != hom_count(q, group("s3")) || hom_count(p, group("s4")) != hom_count(q, group("s4")) ||
        alexander_polynomial(p) != alexander_polynomial(q))
      ++bad;
  }
  return {bad == 0 && nontrivial > 0,
          std::to_string(pool.size()) + " applications over " + std::to_string(kinds.size()) +
              " move kinds, " + std::to_string(nontrivial) + " with nontrivial S3 count, " +
              std::to_string(bad) + " exceptions"};
}

Outcome curl_removal() {
  const PlanarDiagram vk = corpus().entry("vkink").diagram, u;
  const SearchResult w = bfs_path(vk, u, MoveSet::welded());
  const bool found = w.status == SearchStatus::Found && w.path->length() == 1 &&
                     w.path->moves[0].kind == MoveKind::VR1Minus;
  const SearchResult rw = bfs_path(vk, u, MoveSet::rotational_welded());
  const bool split = rw.status == SearchStatus::Distinguished &&
                     rw.witness->invariant == "virtual_parity";
  return {found && split, std::string("welded path ") + (found ? "[vR1-]" : "missing") +
                              ", rotational-welded witness " +
                              (rw.witness ? rw.witness->invariant : std::string("none"))};
}

Outcome trefoil_nontrivial() {
  const PlanarDiagram t = corpus().entry("trefoil").diagram, u;
  const auto& s3 = group("s3");
  const auto pt = wirtinger_presentation(t), pu = wirtinger_presentation(u);
  const auto ht = hom_count(pt, s3), hu = hom_count(pu, s3);
  const auto bt = brute_force_homs(pt, s3), bu = brute_force_homs(pu, s3);
  const Distinction d = distinguish(t, u, MoveSet::welded());
  const bool ok = ht == 12 && hu == 6 && bt == ht && bu == hu && d.witness &&
                  d.witness->invariant == "hom_count[s3]";
  return {ok, "S3 counts " + std::to_string(ht) + " vs " + std::to_string(hu) +
                  " (brute force " + std::to_string(bt) + " vs " + std::to_string(bu) +
                  "), witness " + (d.witness ? d.witness->invariant : std::string("none"))};
}

Outcome weak_fiberwise() {
  const auto& es = corpus().entries;
  int bad = 0, pairs = 0;
  for (const auto& a : es)
    for (const auto& b : es) {
      ++pairs;
      const bool same = parity_profile(a.diagram).virtual_parity ==
                        parity_profile(b.diagram).virtual_parity;
      bad += weak_fiberwise_equivalent(a.diagram, b.diagram) == same ? 0 : 1;
    }
  const PlanarDiagram u, vk = corpus().entry("vkink").diagram,
                         child = corpus().entry("unknot_vr2").diagram;
  bool is_child = false;
  for (const auto& nb : neighbors_of_kind(u, MoveKind::VR2Plus))
    is_child = is_child || nb.code == canonical_code(child);
  const bool named = !weak_fiberwise_equivalent(vk, u) && weak_fiberwise_equivalent(child, u);
  return {bad == 0 && named && is_child,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) +
              " disagreements; (vkink, unknot) " + (named ? "false" : "WRONG") +
              ", (vR2+ child, unknot) " + (named ? "true" : "WRONG")};
}

Outcome movie_calculus() {
  const Movie& vk = corpus().movie("vkink_unknot").movie;
  const bool welded_ok = check_movie(vk, MoveSet::welded()).accepted;
  const Verdict rw = check_movie(vk, MoveSet::rotational_welded());
  const bool rw_reject = !rw.accepted && rw.first_violation->frame == 0 &&
                         rw.first_violation->reason == ViolationReason::KindNotInTheory;

  const MoveSet s = MoveSet::rotational_welded();
  std::mt19937_64 rng(7);
  const auto pool = random_pool(7, 50, s);
  int accepted = 0, parity_kept = 0, events = 0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const Walk w = random_walk(pool[k], s, rng, 4 + static_cast<int>(k % 5), 10);
    Movie m{"rw" + std::to_string(k), w.diagrams, {}};
    for (const auto& mv : w.moves) m.events.push_back({mv.kind, mv.site});
    events += static_cast<int>(m.length());
    const Movie reread = parse_movie(serialize_movie(m));
    accepted += check_movie(reread, s).accepted ? 1 : 0;
    parity_kept += parity_profile(reread.diagrams.front()).virtual_parity ==
                           parity_profile(reread.diagrams.back()).virtual_parity
                       ? 1
                       : 0;
  }
  return {welded_ok && rw_reject && accepted == 50 && parity_kept == 50,
          std::string("vR1 movie ") + (welded_ok ? "ACCEPT" : "REJECT") + "/" +
              (rw_reject ? "REJECT move-kind-not-in-theory" : "unexpected") + "; " +
              std::to_string(accepted) + "/50 generated movies accepted (" +
              std::to_string(events) + " events), parity kept in " +
              std::to_string(parity_kept)};
}

Outcome parity_coupling() {
  int bad_rw = 0, bad_w = 0;
  std::map<MoveKind, int> seen;
  auto whitney_flip = [](const PlanarDiagram& a, const PlanarDiagram& b) {
    return (whitney_degree(a) - whitney_degree(b)) % 2 != 0;
  };
  for (int round = 0; round < 2; ++round) {
    const MoveSet s = round == 0 ? MoveSet::rotational_welded() : MoveSet::welded();
    std::mt19937_64 rng(100 + round);
    const auto pool = random_pool(100 + round, 500, s);
    for (const auto& d : pool) {
      const Neighbor nb = random_neighbor(neighbors(d, s), rng);
      ++seen[nb.move.kind];
      const ParityProfile a = parity_profile(d), b = parity_profile(nb.result);
      const bool w = whitney_flip(d, nb.result);
      if (round == 0)
        bad_rw += (a.classical_parity != b.classical_parity) == w ? 0 : 1;
      else
        bad_w += (a.mixed_parity != b.mixed_parity) == w ? 0 : 1;
    }
  }
  return {bad_rw == 0 && bad_w == 0 && seen.size() == kAllMoveKinds.size(),
          "500 rotational-welded applications, " + std::to_string(bad_rw) +
              " exceptions; 500 welded applications, " + std::to_string(bad_w) +
              " exceptions; " + std::to_string(seen.size()) + " move kinds exercised"};
}

Outcome reef_suite() {
  const PlanarDiagram reef = corpus().entry("reef").diagram;
  const PlanarDiagram mir = mirror(reef);
  const auto p = wirtinger_presentation(reef), q = wirtinger_presentation(mir);
  bool all_order = true;
  std::string upper, lower, separating;
  for (const auto& g : default_group_panel()) {
    const auto a = hom_count(p, g), b = hom_count(q, g);
    all_order = all_order && a == static_cast<std::uint64_t>(g.order());
    upper += " " + g.name() + "=" + std::to_string(a);
    lower += " " + g.name() + "=" + std::to_string(b);
    if (a != b) separating += " hom_count[" + g.name() + "]";
  }
  const auto da = alexander_polynomial(p), db = alexander_polynomial(q);
  if (da != db) separating += " alexander";
  return {all_order && !separating.empty(),
          "reconstructed reef (" + std::to_string(reef.classical_count()) + " classical, " +
              std::to_string(reef.virtual_count()) + " virtual); counts" + upper +
              ", Delta=" + da.to_string() + "; mirror" + lower + ", Delta=" + db.to_string() +
              "; separated by" + (separating.empty() ? " nothing" : separating)};
}

int movie_check_via_cli(const Movie& m, Theory t) {
  const std::string path = "acceptance_certificate.movie";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) return -1;
    const std::string text = serialize_movie(m);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  RunConfig c;
  c.subcommand = Subcommand::MovieCheck;
  c.inputs = {path};
  c.theory = t;
  std::ostringstream out, err;
  const int status = run(c, out, err);
  std::remove(path.c_str());
  return status;
}

Outcome certificates() {
  struct Case {
    std::string from, to;
    PlanarDiagram a, b;
    Theory theory;
    SearchLimits lim;
  };
  const auto& c = corpus();
  const PlanarDiagram u;
  std::vector<Case> cases = {
      {"vkink", "unknot", c.entry("vkink").diagram, u, Theory::Welded, {}},
      {"unknot_vr2", "unknot", c.entry("unknot_vr2").diagram, u, Theory::RotationalWelded, {}},
      {"cream_a", "cream_b", c.entry("cream_a").diagram, c.entry("cream_b").diagram,
       Theory::RotationalWelded, {3, 200'000, 6}},
      {"trefoil", "trefoil rotated", c.entry("trefoil").diagram,
       relabel(rotate_basepoint(c.entry("trefoil").diagram, 3)), Theory::Classical, {}},
  };
  std::mt19937_64 rng(5);
  for (int k = 0; k < 6; ++k) {
    const Theory t = k % 2 ? Theory::Welded : Theory::RotationalWelded;
    const PlanarDiagram start = c.entry(k < 3 ? "trefoil" : "figure_eight").diagram;
    const Walk w = random_walk(start, MoveSet(t), rng, 2, 6);
    cases.push_back({"walk" + std::to_string(k), "start", w.diagrams.back(), start, t,
                     {3, 200'000, 7}});
  }
  for (int k = 0; k < 4; ++k)
    cases.push_back({"random" + std::to_string(k), "unknot", random_diagram(30 + k, 2), u,
                     Theory::Welded, {4, 200'000, 4}});

  int found = 0, verified = 0;
  std::string misses;
  for (const auto& cs : cases) {
    const SearchResult r = bfs_path(cs.a, cs.b, MoveSet(cs.theory), cs.lim);
    if (r.status != SearchStatus::Found) {
      misses += " " + cs.from;
      continue;
    }
    ++found;
    const Movie m = path_to_movie(cs.a, *r.path, cs.from);
    verified += movie_check_via_cli(m, cs.theory) == kExitOk ? 1 : 0;
  }
  return {found == verified && found == static_cast<int>(cases.size()),
          std::to_string(cases.size()) + " seeded searches, " + std::to_string(found) +
              " paths emitted, " + std::to_string(verified) + " re-verified with exit 0" +
              (misses.empty() ? "" : "; not found:" + misses)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "genus law", 10, genus_law},
      {2, "parity invariance", 30, parity_invariance},
      {3, "welded group invariance", 120, welded_group_invariance},
      {4, "virtual curl: welded path, rotational-welded witness", 1, curl_removal},
      {5, "trefoil welded-nontrivial", 5, trefoil_nontrivial},
      {6, "weak fiberwise equivalence = virtual parity", 1, weak_fiberwise},
      {7, "movie calculus", 30, movie_calculus},
      {8, "parity coupling with Whitney degree", 60, parity_coupling},
      {9, "reef knot suite", 120, reef_suite},
      {10, "search certificates re-check", 30, certificates},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_s);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " [" << c.name
              << "] " << o.detail << " (" << timing << (in_time ? "" : ", OVER LIMIT") << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
