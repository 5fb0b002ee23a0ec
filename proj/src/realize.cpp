// Realization of Gauss codes by a concrete polygonal curve.
//
// The circuit follows a circle; each chord (p, q) of the Gauss diagram is
// drawn as a thin finger leaving the circle near p, running across the disk,
// and poking radially out through the circle near q. The finger tip meets
// the circle strand twice with opposite rotation types; the one matching the
// required writhe becomes the classical crossing, everything else is virtual.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "weldkit/diagram.hpp"

namespace weld {
namespace {

struct Vec2 {
  double x = 0, y = 0;
};
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

enum class Owner { Arc, Finger };

struct Segment {
  Vec2 a, b;
  Owner owner = Owner::Arc;
  int chord = -1;
};

struct Hit {
  double t_first = 0, t_second = 0;  // curve parameters, t_first < t_second
  int type = 0;                      // rotation type relative to pass order
  int finger_chord = -1;             // chord whose finger meets the circle here
};

}  // namespace

PlanarDiagram realize_gauss_code(const GaussCode& gc) {
  const std::size_t n = gc.word.size();
  if (n == 0) return PlanarDiagram();

  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < n; ++i) where[gc.word[i].crossing].push_back(i);
  std::vector<int> chord_of(n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (const auto& [id, pos] : where) {
    if (pos.size() != 2) throw std::invalid_argument("realize_gauss_code: malformed code");
    chord_of[pos[0]] = chord_of[pos[1]] = static_cast<int>(chords.size());
    chords.emplace_back(pos[0], pos[1]);
  }

  constexpr double kTau = 2 * std::numbers::pi;
  const double slot = kTau / static_cast<double>(n);
  std::vector<double> theta(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Irregular spacing keeps chord intersections in general position.
    const double jitter = std::fmod(static_cast<double>(k) * 0.6180339887, 1.0) * 0.2 - 0.1;
    theta[k] = slot * (static_cast<double>(k) + 0.5 + jitter);
  }
  const double base_half = 0.22 * slot;
  const double tip_half = 0.12 * slot;
  const double tip_radius = 1.08;
  const double inner_radius = 0.9;  // tips leave the disk radially
  const double arc_step = slot / 16.0;

  std::vector<Segment> segs;
  Vec2 cursor = polar(1.0, 0.0);
  double angle = 0.0;
  auto line_to = [&](Vec2 p, Owner owner, int chord) {
    segs.push_back({cursor, p, owner, chord});
    cursor = p;
  };
  auto arc_to = [&](double target) {
    const int steps = std::max(1, static_cast<int>(std::ceil((target - angle) / arc_step)));
    const double start = angle;
    for (int s = 1; s <= steps; ++s) {
      const double a = start + (target - start) * s / steps;
      line_to(polar(1.0, a), Owner::Arc, -1);
    }
    angle = target;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const int c = chord_of[k];
    if (chords[c].first != k) continue;  // tip positions are plain arc
    const std::size_t q = chords[c].second;
    arc_to(theta[k] - base_half);
    line_to(polar(inner_radius, theta[q] + tip_half), Owner::Finger, c);
    line_to(polar(tip_radius, theta[q] + tip_half), Owner::Finger, c);
    line_to(polar(tip_radius, theta[q] - tip_half), Owner::Finger, c);
    line_to(polar(inner_radius, theta[q] - tip_half), Owner::Finger, c);
    line_to(polar(1.0, theta[k] + base_half), Owner::Finger, c);
    angle = theta[k] + base_half;
  }
  arc_to(kTau);

  const std::size_t m = segs.size();
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // closing adjacency
      const Vec2 p = segs[i].a, r = segs[i].b - segs[i].a;
      const Vec2 q = segs[j].a, s = segs[j].b - segs[j].a;
      const double denom = cross(r, s);
      if (std::abs(denom) < 1e-14) continue;
      const double t = cross(q - p, s) / denom;
      const double u = cross(q - p, r) / denom;
      if (t <= 0 || t >= 1 || u <= 0 || u >= 1) continue;
      Hit h;
      h.t_first = static_cast<double>(i) + t;
      h.t_second = static_cast<double>(j) + u;
      h.type = denom > 0 ? 1 : -1;
      const bool finger_arc = (segs[i].owner == Owner::Finger) != (segs[j].owner == Owner::Finger);
      if (finger_arc)
        h.finger_chord = segs[i].owner == Owner::Finger ? segs[i].chord : segs[j].chord;
      hits.push_back(h);
    }
  }

  // Pick the classical crossing of each chord among its two tip hits.
  std::vector<int> classical_hit(chords.size(), -1);
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const int c = hits[h].finger_chord;
    if (c < 0) continue;
    const Pass& early = gc.word[chords[c].first];
    const int needed = early.role == Role::Over ? early.sign : -early.sign;
    if (hits[h].type == needed && classical_hit[c] < 0) classical_hit[c] = static_cast<int>(h);
  }
  for (int h : classical_hit)
    if (h < 0) throw std::logic_error("realize_gauss_code: finger tip missed the circle");

  struct Event {
    double t;
    Pass pass;
  };
  std::vector<Event> events;
  int next_virtual = 0;
  for (const auto& [id, pos] : where) next_virtual = std::max(next_virtual, id);
  std::vector<bool> is_classical(hits.size(), false);
  for (std::size_t c = 0; c < chords.size(); ++c) {
    const Hit& h = hits[classical_hit[c]];
    is_classical[classical_hit[c]] = true;
    events.push_back({h.t_first, gc.word[chords[c].first]});
    events.push_back({h.t_second, gc.word[chords[c].second]});
  }
  for (std::size_t h = 0; h < hits.size(); ++h) {
    if (is_classical[h]) continue;
    const Pass v{Role::Virtual, ++next_virtual, hits[h].type};
    events.push_back({hits[h].t_first, v});
    events.push_back({hits[h].t_second, v});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.t < b.t; });
  std::vector<Pass> word;
  word.reserve(events.size());
  for (const Event& e : events) word.push_back(e.pass);
  return PlanarDiagram(std::move(word));
}

}  // namespace weld
