#include "weldkit/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weld {

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::CR1Plus: return "cR1+";
    case MoveKind::CR1Minus: return "cR1-";
    case MoveKind::CR2Plus: return "cR2+";
    case MoveKind::CR2Minus: return "cR2-";
    case MoveKind::CR3: return "cR3";
    case MoveKind::VR1Plus: return "vR1+";
    case MoveKind::VR1Minus: return "vR1-";
    case MoveKind::VR2Plus: return "vR2+";
    case MoveKind::VR2Minus: return "vR2-";
    case MoveKind::VR3: return "vR3";
    case MoveKind::MR3: return "mR3";
    case MoveKind::WOC: return "wOC";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view s) {
  for (MoveKind k : kAllMoveKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

MoveKind inverse(MoveKind k) {
  switch (k) {
    case MoveKind::CR1Plus: return MoveKind::CR1Minus;
    case MoveKind::CR1Minus: return MoveKind::CR1Plus;
    case MoveKind::CR2Plus: return MoveKind::CR2Minus;
    case MoveKind::CR2Minus: return MoveKind::CR2Plus;
    case MoveKind::VR1Plus: return MoveKind::VR1Minus;
    case MoveKind::VR1Minus: return MoveKind::VR1Plus;
    case MoveKind::VR2Plus: return MoveKind::VR2Minus;
    case MoveKind::VR2Minus: return MoveKind::VR2Plus;
    default: return k;
  }
}

int crossing_delta(MoveKind k) {
  switch (k) {
    case MoveKind::CR1Plus:
    case MoveKind::VR1Plus: return 1;
    case MoveKind::CR1Minus:
    case MoveKind::VR1Minus: return -1;
    case MoveKind::CR2Plus:
    case MoveKind::VR2Plus: return 2;
    case MoveKind::CR2Minus:
    case MoveKind::VR2Minus: return -2;
    default: return 0;
  }
}

bool is_virtual_r1(MoveKind k) { return k == MoveKind::VR1Plus || k == MoveKind::VR1Minus; }

std::string_view to_string(Theory t) {
  switch (t) {
    case Theory::Classical: return "classical";
    case Theory::Virtual: return "virtual";
    case Theory::Welded: return "welded";
    case Theory::RotationalWelded: return "rotational-welded";
  }
  return "?";
}

std::optional<Theory> theory_from_string(std::string_view s) {
  for (Theory t : {Theory::Classical, Theory::Virtual, Theory::Welded, Theory::RotationalWelded})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

MoveSet::MoveSet(Theory t) : theory_(t) {
  auto add = [this](MoveKind k) { kinds_.set(static_cast<std::size_t>(k)); };
  for (MoveKind k : {MoveKind::CR1Plus, MoveKind::CR1Minus, MoveKind::CR2Plus,
                     MoveKind::CR2Minus, MoveKind::CR3})
    add(k);
  if (t == Theory::Classical) return;
  for (MoveKind k : {MoveKind::VR1Plus, MoveKind::VR1Minus, MoveKind::VR2Plus,
                     MoveKind::VR2Minus, MoveKind::VR3, MoveKind::MR3})
    add(k);
  if (t == Theory::Virtual) return;
  add(MoveKind::WOC);
  if (t == Theory::RotationalWelded) {
    kinds_.reset(static_cast<std::size_t>(MoveKind::VR1Plus));
    kinds_.reset(static_cast<std::size_t>(MoveKind::VR1Minus));
  }
}

std::vector<MoveKind> MoveSet::kinds() const {
  std::vector<MoveKind> out;
  for (MoveKind k : kAllMoveKinds)
    if (contains(k)) out.push_back(k);
  return out;
}

namespace {

struct Context {
  const PlanarDiagram& d;
  std::vector<Face> faces;

  explicit Context(const PlanarDiagram& diagram) : d(diagram), faces(trace_faces(diagram)) {}

  std::size_t n() const { return d.size(); }
  int crossing_at(std::size_t pass) const { return d.word()[pass % n()].crossing; }
  // Crossings at the two ends of edge e.
  std::pair<int, int> ends(std::size_t e) const {
    return {crossing_at(e), crossing_at((e + 1) % n())};
  }
};

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); }

std::optional<PlanarDiagram> checked(PlanarDiagram d) {
  if (validate(d)) return std::nullopt;
  return d;
}

// Inserts `seq_i` on edge i and `seq_j` on edge j (i <= j; on one edge seq_i
// comes first). Reports the positions of the first inserted pass of each.
PlanarDiagram insert_on_edges(const PlanarDiagram& d, std::size_t i, const std::vector<Pass>& seq_i,
                              std::size_t j, const std::vector<Pass>& seq_j, std::size_t* pos_i,
                              std::size_t* pos_j) {
  const auto& w = d.word();
  std::vector<Pass> out;
  out.reserve(w.size() + seq_i.size() + seq_j.size());
  auto emit = [&](const std::vector<Pass>& seq, std::size_t* pos) {
    if (seq.empty()) return;
    if (pos) *pos = out.size();
    out.insert(out.end(), seq.begin(), seq.end());
  };
  if (w.empty()) {
    emit(seq_i, pos_i);
    emit(seq_j, pos_j);
  } else {
    for (std::size_t k = 0; k < w.size(); ++k) {
      out.push_back(w[k]);
      if (k == i) emit(seq_i, pos_i);
      if (k == j) emit(seq_j, pos_j);
    }
  }
  return PlanarDiagram(std::move(out));
}

PlanarDiagram remove_crossings(const PlanarDiagram& d, std::set<int> ids) {
  std::vector<Pass> out;
  for (const Pass& p : d.word())
    if (!ids.count(p.crossing)) out.push_back(p);
  return PlanarDiagram(std::move(out));
}

// --- R1 -------------------------------------------------------------------

std::optional<PlanarDiagram> build_r1_remove(const Context& c, MoveKind k, const std::vector<int>& site) {
  if (site.size() != 1) return std::nullopt;
  const auto& w = c.d.word();
  const std::size_t n = w.size();
  std::vector<std::size_t> at;
  for (std::size_t p = 0; p < n; ++p)
    if (w[p].crossing == site[0]) at.push_back(p);
  if (at.size() != 2) return std::nullopt;
  const bool adjacent = at[1] == at[0] + 1 || (at[0] == 0 && at[1] == n - 1);
  if (!adjacent) return std::nullopt;
  const bool virt = w[at[0]].role == Role::Virtual;
  if (virt != (k == MoveKind::VR1Minus)) return std::nullopt;
  return checked(remove_crossings(c.d, {site[0]}));
}

std::optional<PlanarDiagram> build_r1_create(const Context& c, MoveKind k, const std::vector<int>& site) {
  if (site.size() != 3) return std::nullopt;
  const int edge = site[0], type = site[1], over_first = site[2];
  if (edge < 0 || static_cast<std::size_t>(edge) >= c.d.edge_count()) return std::nullopt;
  if (type != 1 && type != -1) return std::nullopt;
  const int id = c.d.max_crossing_id() + 1;
  std::vector<Pass> seq;
  if (k == MoveKind::VR1Plus) {
    if (over_first != -1) return std::nullopt;
    seq = {{Role::Virtual, id, type}, {Role::Virtual, id, type}};
  } else {
    if (over_first != 0 && over_first != 1) return std::nullopt;
    const int writhe = over_first ? type : -type;
    const Role first = over_first ? Role::Over : Role::Under;
    const Role second = over_first ? Role::Under : Role::Over;
    seq = {{first, id, writhe}, {second, id, writhe}};
  }
  return checked(insert_on_edges(c.d, static_cast<std::size_t>(edge), seq,
                                 static_cast<std::size_t>(edge), {}, nullptr, nullptr));
}

// --- R2 -------------------------------------------------------------------

bool bigon_pattern_ok(const PlanarDiagram& d, std::size_t e1, MoveKind k) {
  const auto& w = d.word();
  const std::size_t n = w.size();
  const Pass& a = w[e1];
  const Pass& b = w[(e1 + 1) % n];
  if (k == MoveKind::VR2Minus || k == MoveKind::VR2Plus)
    return a.role == Role::Virtual && b.role == Role::Virtual;
  return a.role != Role::Virtual && b.role != Role::Virtual && a.role == b.role;
}

std::optional<PlanarDiagram> build_r2_remove(const Context& c, MoveKind k, const std::vector<int>& site) {
  if (site.size() != 2 || site[0] >= site[1]) return std::nullopt;
  for (const Face& f : c.faces) {
    if (f.size() != 2 || f[0].edge == f[1].edge) continue;
    auto [a0, a1] = c.ends(f[0].edge);
    auto [b0, b1] = c.ends(f[1].edge);
    if (a0 == a1 || ordered(a0, a1) != ordered(b0, b1)) continue;
    if (ordered(a0, a1) != std::pair<int, int>(site[0], site[1])) continue;
    if (!bigon_pattern_ok(c.d, f[0].edge, k)) continue;
    return checked(remove_crossings(c.d, {site[0], site[1]}));
  }
  return std::nullopt;
}

bool has_bigon(const PlanarDiagram& d, std::size_t e1, std::size_t e2) {
  for (const Face& f : trace_faces(d)) {
    if (f.size() != 2) continue;
    if ((f[0].edge == e1 && f[1].edge == e2) || (f[0].edge == e2 && f[1].edge == e1)) return true;
  }
  return false;
}

std::optional<PlanarDiagram> build_r2_create(const Context& c, MoveKind k, const std::vector<int>& site) {
  if (site.size() != 6) return std::nullopt;
  const int i = site[0], j = site[1], order = site[2], over = site[3], sc = site[4], sd = site[5];
  const int edges = static_cast<int>(c.d.edge_count());
  if (i < 0 || j < i || j >= edges || (order != 0 && order != 1)) return std::nullopt;
  if ((sc != 1 && sc != -1) || (sd != 1 && sd != -1)) return std::nullopt;
  const bool virt = k == MoveKind::VR2Plus;
  if (virt ? over != -1 : (over != 0 && over != 1)) return std::nullopt;
  const int cid = c.d.max_crossing_id() + 1, did = cid + 1;
  const Role first_role = virt ? Role::Virtual : over ? Role::Over : Role::Under;
  const Role second_role = virt ? Role::Virtual : over ? Role::Under : Role::Over;
  const std::vector<Pass> seq_i = {{first_role, cid, sc}, {first_role, did, sd}};
  std::vector<Pass> seq_j = {{second_role, cid, sc}, {second_role, did, sd}};
  if (order == 1) std::swap(seq_j[0], seq_j[1]);
  std::size_t pi = 0, pj = 0;
  PlanarDiagram out = insert_on_edges(c.d, static_cast<std::size_t>(i), seq_i,
                                      static_cast<std::size_t>(j), seq_j, &pi, &pj);
  if (validate(out)) return std::nullopt;
  if (!has_bigon(out, pi, pj)) return std::nullopt;
  return out;
}

// --- R3 family ------------------------------------------------------------

struct Triangle {
  std::array<std::size_t, 3> edges;  // ascending
};

std::vector<Triangle> triangles(const Context& c) {
  std::vector<Triangle> out;
  if (c.n() < 6) return out;
  for (const Face& f : c.faces) {
    if (f.size() != 3) continue;
    std::set<std::size_t> es;
    std::set<int> xs;
    bool ok = true;
    for (const FaceStep& s : f) {
      es.insert(s.edge);
      auto [x0, x1] = c.ends(s.edge);
      ok = ok && x0 != x1;
      xs.insert(x0);
      xs.insert(x1);
    }
    if (!ok || es.size() != 3 || xs.size() != 3) continue;
    Triangle t;
    std::copy(es.begin(), es.end(), t.edges.begin());
    out.push_back(t);
  }
  return out;
}

std::optional<MoveKind> classify_triangle(const Context& c, const Triangle& t) {
  const auto& w = c.d.word();
  const std::size_t n = c.n();
  std::set<int> virtuals;
  for (std::size_t e : t.edges)
    for (std::size_t p : {e, (e + 1) % n})
      if (w[p].role == Role::Virtual) virtuals.insert(w[p].crossing);
  auto roles = [&](std::size_t e) { return std::pair(w[e].role, w[(e + 1) % n].role); };
  switch (virtuals.size()) {
    case 0: {
      bool top = false, bottom = false;
      for (std::size_t e : t.edges) {
        auto [a, b] = roles(e);
        top = top || (a == Role::Over && b == Role::Over);
        bottom = bottom || (a == Role::Under && b == Role::Under);
      }
      if (top && bottom) return MoveKind::CR3;
      return std::nullopt;
    }
    case 1:
      for (std::size_t e : t.edges) {
        auto [a, b] = roles(e);
        if (a == Role::Virtual || b == Role::Virtual) continue;
        // Only the over-arc version is legal; under-arc is the forbidden move.
        if (a == Role::Over && b == Role::Over) return MoveKind::WOC;
        return std::nullopt;
      }
      return std::nullopt;
    case 2: return MoveKind::MR3;
    default: return MoveKind::VR3;
  }
}

std::optional<PlanarDiagram> build_triangle(const Context& c, MoveKind k, const std::vector<int>& site) {
  if (site.size() != 3) return std::nullopt;
  for (const Triangle& t : triangles(c)) {
    if (static_cast<int>(t.edges[0]) != site[0] || static_cast<int>(t.edges[1]) != site[1] ||
        static_cast<int>(t.edges[2]) != site[2])
      continue;
    if (classify_triangle(c, t) != k) return std::nullopt;
    const std::size_t n = c.n();
    std::vector<std::size_t> order(n);
    for (std::size_t p = 0; p < n; ++p) order[p] = p;
    for (std::size_t e : t.edges) std::swap(order[e], order[(e + 1) % n]);
    return checked(permute_passes(c.d, order));
  }
  return std::nullopt;
}

std::optional<PlanarDiagram> build(const Context& c, MoveKind k, const std::vector<int>& site) {
  switch (k) {
    case MoveKind::CR1Minus:
    case MoveKind::VR1Minus: return build_r1_remove(c, k, site);
    case MoveKind::CR1Plus:
    case MoveKind::VR1Plus: return build_r1_create(c, k, site);
    case MoveKind::CR2Minus:
    case MoveKind::VR2Minus: return build_r2_remove(c, k, site);
    case MoveKind::CR2Plus:
    case MoveKind::VR2Plus: return build_r2_create(c, k, site);
    default: return build_triangle(c, k, site);
  }
}

std::vector<std::vector<int>> candidate_sites(const Context& c, MoveKind k) {
  std::vector<std::vector<int>> sites;
  const int edges = static_cast<int>(c.d.edge_count());
  switch (k) {
    case MoveKind::CR1Minus:
    case MoveKind::VR1Minus: {
      std::set<int> ids;
      for (const Pass& p : c.d.word()) ids.insert(p.crossing);
      for (int id : ids) sites.push_back({id});
      break;
    }
    case MoveKind::CR1Plus:
    case MoveKind::VR1Plus:
      for (int e = 0; e < edges; ++e)
        for (int type : {-1, 1}) {
          if (k == MoveKind::VR1Plus) {
            sites.push_back({e, type, -1});
          } else {
            sites.push_back({e, type, 0});
            sites.push_back({e, type, 1});
          }
        }
      break;
    case MoveKind::CR2Minus:
    case MoveKind::VR2Minus: {
      std::set<std::pair<int, int>> pairs;
      for (const Face& f : c.faces) {
        if (f.size() != 2) continue;
        auto [a0, a1] = c.ends(f[0].edge);
        if (a0 != a1) pairs.insert(ordered(a0, a1));
      }
      for (auto [a, b] : pairs) sites.push_back({a, b});
      break;
    }
    case MoveKind::CR2Plus:
    case MoveKind::VR2Plus: {
      const std::vector<int> overs = k == MoveKind::VR2Plus ? std::vector<int>{-1}
                                                            : std::vector<int>{0, 1};
      // The new bigon lies inside a face, so both edges must border it.
      std::set<std::pair<int, int>> pairs;
      for (const Face& f : c.faces)
        for (const FaceStep& a : f)
          for (const FaceStep& b : f)
            if (a.edge <= b.edge)
              pairs.insert({static_cast<int>(a.edge), static_cast<int>(b.edge)});
      if (c.d.empty()) pairs.insert({0, 0});
      for (auto [i, j] : pairs)
        for (int order : {0, 1})
          for (int over : overs)
            for (int sc : {-1, 1})
              for (int sd : {-1, 1}) sites.push_back({i, j, order, over, sc, sd});
      break;
    }
    default:
      for (const Triangle& t : triangles(c))
        sites.push_back({static_cast<int>(t.edges[0]), static_cast<int>(t.edges[1]),
                         static_cast<int>(t.edges[2])});
      break;
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<Neighbor> neighbors_in_context(const Context& c, MoveKind k) {
  std::vector<Neighbor> out;
  std::set<std::string> seen;
  for (auto& site : candidate_sites(c, k)) {
    auto result = build(c, k, site);
    if (!result) continue;
    std::string code = canonical_code(*result);
    if (!seen.insert(code).second) continue;
    out.push_back({MoveInstance{k, std::move(site)}, std::move(*result), std::move(code)});
  }
  return out;
}

}  // namespace

std::vector<Neighbor> neighbors_of_kind(const PlanarDiagram& d, MoveKind k) {
  const Context c(d);
  return neighbors_in_context(c, k);
}

std::vector<Neighbor> neighbors(const PlanarDiagram& d, const MoveSet& s) {
  const Context c(d);
  std::vector<Neighbor> out;
  for (MoveKind k : s.kinds()) {
    auto part = neighbors_in_context(c, k);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<MoveInstance> find_moves(const PlanarDiagram& d, const MoveSet& s) {
  std::vector<MoveInstance> out;
  for (auto& nb : neighbors(d, s)) out.push_back(std::move(nb.move));
  return out;
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveInstance& m) {
  const Context c(d);
  auto result = build(c, m.kind, m.site);
  if (!result)
    throw StaleMoveError(std::string("move ") + std::string(to_string(m.kind)) +
                         " does not match the diagram at the given site");
  return std::move(*result);
}

std::optional<MoveInstance> verify_transition(const PlanarDiagram& from, const PlanarDiagram& to,
                                              MoveKind k) {
  if (from.crossing_count() + crossing_delta(k) != to.crossing_count()) return std::nullopt;
  const std::string target = canonical_code(to);
  for (auto& nb : neighbors_of_kind(from, k))
    if (nb.code == target) return std::move(nb.move);
  return std::nullopt;
}

}  // namespace weld
