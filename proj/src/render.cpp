#include "weldkit/render.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "weldkit/codec.hpp"

namespace weld {
namespace {

constexpr double kSize = 400.0;
constexpr double kRadius = 170.0;
constexpr double kMarker = 7.0;
constexpr double kGap = 8.0;

struct Point {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string header() {
  const std::string s = fmt(kSize);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s +
         "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
}

// Node numbering: one node per half-edge (pass i owns 2i "in" and 2i+1
// "out"), so each crossing is blown up into a 4-cycle; then two interior
// points per edge; then the centers of inner faces. Blowing up crossings
// keeps curls from collapsing onto their crossing.
class Layout {
 public:
  explicit Layout(const PlanarDiagram& d) : d_(d), n_(d.size()), faces_(trace_faces(d)) {}

  int in_node(std::size_t p) const { return static_cast<int>(2 * (p % n_)); }
  int out_node(std::size_t p) const { return static_cast<int>(2 * (p % n_) + 1); }
  int mid_node(std::size_t e, int k) const { return static_cast<int>(2 * n_ + 2 * e) + k; }

  std::vector<int> boundary(const Face& f) const {
    std::vector<int> out;
    for (const FaceStep& s : f) {
      if (s.forward)
        out.insert(out.end(), {out_node(s.edge), mid_node(s.edge, 0), mid_node(s.edge, 1),
                               in_node(s.edge + 1)});
      else
        out.insert(out.end(), {in_node(s.edge + 1), mid_node(s.edge, 1), mid_node(s.edge, 0),
                               out_node(s.edge)});
    }
    return out;
  }

  std::vector<Point> solve() const {
    const std::size_t outer = edge_faces(d_, faces_)[0][0];
    const int base = static_cast<int>(4 * n_);
    std::vector<std::set<int>> adj(static_cast<std::size_t>(base) + faces_.size());
    auto link = [&](int a, int b) {
      if (a == b) return;
      adj[a].insert(b);
      adj[b].insert(a);
    };
    for (std::size_t p = 0; p < n_; ++p) {
      const std::size_t q = d_.partner(p);
      if (q < p) continue;
      std::array<int, 4> ring;
      if (d_.rotation_type(p) > 0)
        ring = {in_node(p), in_node(q), out_node(p), out_node(q)};
      else
        ring = {in_node(p), out_node(q), out_node(p), in_node(q)};
      for (int k = 0; k < 4; ++k) link(ring[k], ring[(k + 1) % 4]);
    }
    for (std::size_t e = 0; e < n_; ++e) {
      link(out_node(e), mid_node(e, 0));
      link(mid_node(e, 0), mid_node(e, 1));
      link(mid_node(e, 1), in_node(e + 1));
    }
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (f == outer) continue;
      for (int v : boundary(faces_[f])) link(base + static_cast<int>(f), v);
    }
    const int total = static_cast<int>(adj.size());
    std::vector<Point> pos(adj.size());
    std::vector<int> fixed(adj.size(), 0);
    const auto rim = boundary(faces_[outer]);
    for (std::size_t k = 0; k < rim.size(); ++k) {
      // Walks keep their face on the right, so the outer walk runs clockwise.
      const double a = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(rim.size());
      pos[rim[k]] = {kSize / 2 + kRadius * std::cos(a), kSize / 2 + kRadius * std::sin(a)};
      fixed[rim[k]] = 1;
    }
    std::vector<int> index(adj.size(), -1);
    int free_count = 0;
    for (int v = 0; v < total; ++v)
      if (!fixed[v] && !adj[v].empty()) index[v] = free_count++;

    Eigen::SparseMatrix<double> L(free_count, free_count);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(free_count, 2);
    std::vector<Eigen::Triplet<double>> entries;
    for (int v = 0; v < total; ++v) {
      if (index[v] < 0) continue;
      entries.emplace_back(index[v], index[v], static_cast<double>(adj[v].size()));
      for (int w : adj[v]) {
        if (fixed[w]) {
          rhs(index[v], 0) += pos[w].x;
          rhs(index[v], 1) += pos[w].y;
        } else {
          entries.emplace_back(index[v], index[w], -1.0);
        }
      }
    }
    L.setFromTriplets(entries.begin(), entries.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(L);
    const Eigen::MatrixXd sol = lu.solve(rhs);
    for (int v = 0; v < total; ++v)
      if (index[v] >= 0) pos[v] = {sol(index[v], 0), sol(index[v], 1)};
    return pos;
  }

 private:
  const PlanarDiagram& d_;
  std::size_t n_;
  std::vector<Face> faces_;
};

Point toward(Point from, Point to, double dist) {
  const double dx = to.x - from.x, dy = to.y - from.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) return from;
  const double t = std::min(dist, 0.5 * len) / len;
  return {from.x + t * dx, from.y + t * dy};
}

std::string polyline(const std::vector<Point>& pts, bool closed) {
  std::string s = "<path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s += (i ? " L " : "M ") + fmt(pts[i].x) + " " + fmt(pts[i].y);
  if (closed) s += " Z";
  return s + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const PlanarDiagram& input) {
  std::string out = header();
  if (input.empty()) {
    out += "<circle cx=\"" + fmt(kSize / 2) + "\" cy=\"" + fmt(kSize / 2) + "\" r=\"" +
           fmt(kRadius) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    return out + "</svg>\n";
  }
  const PlanarDiagram d = parse_word(canonical_code(input));
  const std::size_t n = d.size();
  const Layout layout(d);
  const auto pos = layout.solve();

  auto center = [&](std::size_t p) {
    const std::size_t q = d.partner(p);
    Point c;
    for (int v : {layout.in_node(p), layout.out_node(p), layout.in_node(q), layout.out_node(q)}) {
      c.x += pos[v].x / 4;
      c.y += pos[v].y / 4;
    }
    return c;
  };

  // Points along the circuit. Each pass contributes its in node, the crossing
  // center and its out node; an under pass stops short of the center and
  // starts a new strand just past it.
  std::vector<std::vector<Point>> strands(1);
  for (std::size_t p = 0; p < n; ++p) {
    const Point in = pos[layout.in_node(p)], c = center(p), out = pos[layout.out_node(p)];
    strands.back().push_back(in);
    if (d.word()[p].role == Role::Under) {
      strands.back().push_back(toward(c, in, kGap));
      strands.emplace_back();
      strands.back().push_back(toward(c, out, kGap));
    } else {
      strands.back().push_back(c);
    }
    strands.back().push_back(out);
    strands.back().push_back(pos[layout.mid_node(p, 0)]);
    strands.back().push_back(pos[layout.mid_node(p, 1)]);
  }
  if (strands.size() == 1) {
    out += polyline(strands.front(), true);
  } else {
    // The piece before the first under pass continues the last strand.
    auto& last = strands.back();
    last.insert(last.end(), strands.front().begin(), strands.front().end());
    for (std::size_t k = 1; k < strands.size(); ++k) out += polyline(strands[k], false);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (d.word()[p].role != Role::Virtual || d.partner(p) < p) continue;
    const Point c = center(p);
    out += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(kMarker) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  return out + "</svg>\n";
}

}  // namespace weld
