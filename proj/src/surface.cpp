#include "weldkit/surface.hpp"


namespace weld {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class MapBuilder {
 public:
  std::size_t dart() {
    map_.alpha.push_back(kNone);
    map_.sigma.push_back(kNone);
    map_.vertex_of.push_back(-1);
    return map_.alpha.size() - 1;
  }

  void edge(std::size_t a, std::size_t b) {
    map_.alpha[a] = b;
    map_.alpha[b] = a;
  }

  void vertex(const std::vector<std::size_t>& ccw) {
    const int v = map_.vertex_count++;
    for (std::size_t k = 0; k < ccw.size(); ++k) {
      map_.sigma[ccw[k]] = ccw[(k + 1) % ccw.size()];
      map_.vertex_of[ccw[k]] = v;
    }
  }

  SurfaceMap take() { return std::move(map_); }

 private:
  SurfaceMap map_;
};

// Where the circuit meets a map vertex: the dart it arrives on and the dart
// it leaves on.
struct Event {
  std::size_t in;
  std::size_t out;
};

}  // namespace

SurfaceCurve representing_surface(const PlanarDiagram& d) {
  SurfaceCurve sc;
  sc.genus = d.virtual_count();
  sc.curve_code = underlying_gauss_code(d);
  sc.curve_vertices = d.classical_count();
  MapBuilder b;
  if (d.empty()) {
    const std::size_t h = b.dart(), t = b.dart();
    b.edge(h, t);
    b.vertex({h, t});
    sc.map = b.take();
    return sc;
  }

  const std::size_t n = d.size();
  std::vector<Event> events;
  std::vector<Event> pass_darts(n, {kNone, kNone});
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t q = d.partner(p);
    if (d.is_classical(p) || p < q) {
      pass_darts[p] = {b.dart(), b.dart()};
      events.push_back(pass_darts[p]);
    }
    if (q > p) continue;
    const auto [a_in, a_out] = pass_darts[q];
    if (d.is_classical(p)) {
      const auto [b_in, b_out] = pass_darts[p];
      if (d.rotation_type(p) > 0)
        b.vertex({a_in, b_in, a_out, b_out});
      else
        b.vertex({a_in, b_out, a_out, b_in});
      continue;
    }
    // Virtual: the earlier strand gets an auxiliary vertex x joined to each
    // attaching circle. Circle k has the foot f_k where the later strand
    // enters the handle and a point y_k facing x; its two halves run east
    // and west between them. The tube edge f_1 -> f_2 carries the curve.
    const std::size_t in = b.dart(), tube_a = b.dart(), tube_b = b.dart(), out = b.dart();
    const std::size_t sx = b.dart(), sy = b.dart(), nx = b.dart(), ny = b.dart();
    const std::size_t e1f = b.dart(), e1y = b.dart(), w1f = b.dart(), w1y = b.dart();
    const std::size_t e2f = b.dart(), e2y = b.dart(), w2f = b.dart(), w2y = b.dart();
    b.edge(sx, sy);
    b.edge(nx, ny);
    b.edge(e1f, e1y);
    b.edge(w1f, w1y);
    b.edge(e2f, e2y);
    b.edge(w2f, w2y);
    if (d.rotation_type(p) > 0)
      b.vertex({a_in, sx, a_out, nx});
    else
      b.vertex({a_in, nx, a_out, sx});
    b.vertex({in, e1f, tube_a, w1f});
    b.vertex({e1y, sy, w1y});
    b.vertex({out, w2f, tube_b, e2f});
    b.vertex({e2y, w2y, ny});
    events.push_back({in, tube_a});
    events.push_back({tube_b, out});
  }
  for (std::size_t k = 0; k < events.size(); ++k)
    b.edge(events[k].out, events[(k + 1) % events.size()].in);
  sc.map = b.take();
  return sc;
}

SurfaceCounts surface_counts(const SurfaceCurve& sc) {
  const auto& m = sc.map;
  SurfaceCounts c;
  c.vertices = m.vertex_count;
  c.edges = static_cast<int>(m.alpha.size() / 2);
  std::vector<bool> used(m.alpha.size(), false);
  for (std::size_t start = 0; start < m.alpha.size(); ++start) {
    if (used[start]) continue;
    ++c.faces;
    for (std::size_t h = start; !used[h]; h = m.sigma[m.alpha[h]]) used[h] = true;
  }
  return c;
}

int surface_genus(const SurfaceCurve& sc) {
  const auto c = surface_counts(sc);
  return (2 - (c.vertices - c.edges + c.faces)) / 2;
}

}  // namespace weld
