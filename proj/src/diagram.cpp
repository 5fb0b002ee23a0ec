#include "weldkit/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weld {

PlanarDiagram::PlanarDiagram(std::vector<Pass> word) : word_(std::move(word)) {
  partner_.assign(word_.size(), npos);
  std::map<int, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < word_.size(); ++i) seen[word_[i].crossing].push_back(i);
  for (const auto& [id, where] : seen) {
    if (where.size() != 2) continue;
    partner_[where[0]] = where[1];
    partner_[where[1]] = where[0];
  }
}

int PlanarDiagram::classical_count() const {
  int n = 0;
  for (const Pass& p : word_) n += p.role == Role::Over ? 1 : 0;
  return n;
}

int PlanarDiagram::virtual_count() const {
  int n = 0;
  for (const Pass& p : word_) n += p.role == Role::Virtual ? 1 : 0;
  return n / 2;
}

int PlanarDiagram::max_crossing_id() const {
  int m = 0;
  for (const Pass& p : word_) m = std::max(m, p.crossing);
  return m;
}

int PlanarDiagram::rotation_type(std::size_t pass) const {
  const std::size_t first = first_pass(pass);
  const Pass& p = word_[first];
  if (p.role == Role::Virtual) return p.sign;
  return p.role == Role::Over ? p.sign : -p.sign;
}

bool same_up_to_rotation(const GaussCode& a, const GaussCode& b) {
  const std::size_t n = a.word.size();
  if (n != b.word.size()) return false;
  if (n == 0) return true;
  // Labels may differ between the two codes; compare relabelled rotations.
  auto normalized = [](const std::vector<Pass>& w, std::size_t shift) {
    std::vector<Pass> out;
    std::map<int, int> ids;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Pass p = w[(k + shift) % w.size()];
      auto [it, fresh] = ids.emplace(p.crossing, static_cast<int>(ids.size()) + 1);
      p.crossing = it->second;
      out.push_back(p);
    }
    return out;
  };
  const auto target = normalized(b.word, 0);
  for (std::size_t s = 0; s < n; ++s)
    if (normalized(a.word, s) == target) return true;
  return false;
}

std::optional<Violation> validate_structure(const PlanarDiagram& d) {
  const auto& w = d.word();
  std::map<int, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].crossing <= 0)
      return Violation{"crossing-id", "crossing ids must be positive", i};
    if (w[i].sign != 1 && w[i].sign != -1)
      return Violation{"sign", "sign must be +1 or -1", i};
    seen[w[i].crossing].push_back(i);
  }
  for (const auto& [id, where] : seen) {
    if (where.size() != 2)
      return Violation{"multiplicity",
                       "crossing " + std::to_string(id) + " appears " +
                           std::to_string(where.size()) + " times",
                       where.back()};
    const Pass& a = w[where[0]];
    const Pass& b = w[where[1]];
    const bool virt_a = a.role == Role::Virtual;
    const bool virt_b = b.role == Role::Virtual;
    if (virt_a != virt_b)
      return Violation{"role", "crossing " + std::to_string(id) + " mixes V with O/U",
                       where[1]};
    if (!virt_a && a.role == b.role)
      return Violation{"role",
                       "classical crossing " + std::to_string(id) +
                           " needs one O and one U pass",
                       where[1]};
    if (a.sign != b.sign)
      return Violation{"sign-mismatch",
                       "passes of crossing " + std::to_string(id) + " disagree in sign",
                       where[1]};
  }
  return std::nullopt;
}

std::optional<Violation> validate(const PlanarDiagram& d) {
  if (auto v = validate_structure(d)) return v;
  const int g = traced_genus(d);
  if (g != 0)
    return Violation{"planarity", "word traces to genus " + std::to_string(g), 0};
  return std::nullopt;
}

namespace {

// Counterclockwise successor of every half-edge.
std::vector<std::size_t> rotation_successor(const PlanarDiagram& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> next(2 * n, PlanarDiagram::npos);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = d.partner(a);
    if (b == PlanarDiagram::npos || b < a) continue;
    const std::size_t a_in = 2 * a, a_out = 2 * a + 1, b_in = 2 * b, b_out = 2 * b + 1;
    std::array<std::size_t, 4> order;
    if (d.rotation_type(a) > 0)
      order = {a_in, b_in, a_out, b_out};
    else
      order = {a_in, b_out, a_out, b_in};
    for (std::size_t k = 0; k < 4; ++k) next[order[k]] = order[(k + 1) % 4];
  }
  return next;
}

// Half-edge at the far end of the edge that starts at half-edge h.
std::size_t across(std::size_t h, std::size_t n) {
  const std::size_t pass = h / 2;
  if (h % 2 == 1) return 2 * ((pass + 1) % n);
  return 2 * ((pass + n - 1) % n) + 1;
}

}  // namespace

std::vector<Face> trace_faces(const PlanarDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return {Face{{0, true}}, Face{{0, false}}};
  const auto next = rotation_successor(d);
  std::vector<bool> used(2 * n, false);
  std::vector<Face> faces;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (used[start] || next[start] == PlanarDiagram::npos) continue;
    Face face;
    std::size_t h = start;
    while (!used[h]) {
      used[h] = true;
      const std::size_t pass = h / 2;
      if (h % 2 == 1)
        face.push_back({pass, true});
      else
        face.push_back({(pass + n - 1) % n, false});
      h = next[across(h, n)];
      if (h == PlanarDiagram::npos) break;
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<std::array<std::size_t, 2>> edge_faces(const PlanarDiagram& d,
                                                   const std::vector<Face>& faces) {
  std::vector<std::array<std::size_t, 2>> out(d.edge_count(), {PlanarDiagram::npos,
                                                               PlanarDiagram::npos});
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const FaceStep& s : faces[f]) out[s.edge][s.forward ? 0 : 1] = f;
  return out;
}

EulerCounts euler_counts(const PlanarDiagram& d) {
  // The round circle is counted with its basepoint as a degree-2 vertex.
  if (d.empty()) return {1, 1, 2};
  return {d.crossing_count(), static_cast<int>(d.size()),
          static_cast<int>(trace_faces(d).size())};
}

int traced_genus(const PlanarDiagram& d) {
  if (d.empty()) return 0;
  const EulerCounts c = euler_counts(d);
  return (2 - c.euler()) / 2;
}

PlanarDiagram permute_passes(const PlanarDiagram& d, const std::vector<std::size_t>& order) {
  const std::size_t n = d.size();
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k) where[order[k]] = k;
  std::vector<Pass> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = d.word()[order[k]];
  for (std::size_t old = 0; old < n; ++old) {
    const std::size_t other = d.partner(old);
    if (other == PlanarDiagram::npos || other < old) continue;
    if (d.word()[old].role != Role::Virtual) continue;
    const bool flipped = where[old] > where[other];
    if (flipped) {
      out[where[old]].sign = -out[where[old]].sign;
      out[where[other]].sign = -out[where[other]].sign;
    }
  }
  return PlanarDiagram(std::move(out));
}

PlanarDiagram rotate_basepoint(const PlanarDiagram& d, std::size_t shift) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = (k + shift) % n;
  return permute_passes(d, order);
}

PlanarDiagram relabel(const PlanarDiagram& d) {
  std::map<int, int> ids;
  std::vector<Pass> out = d.word();
  for (Pass& p : out) {
    auto [it, fresh] = ids.emplace(p.crossing, static_cast<int>(ids.size()) + 1);
    p.crossing = it->second;
  }
  return PlanarDiagram(std::move(out));
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Pass> out = d.word();
  for (Pass& p : out) {
    if (p.role == Role::Virtual) continue;
    p.role = p.role == Role::Over ? Role::Under : Role::Over;
    p.sign = -p.sign;
  }
  return PlanarDiagram(std::move(out));
}

PlanarDiagram reverse(const PlanarDiagram& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = n - 1 - k;
  return permute_passes(d, order);
}

GaussCode underlying_gauss_code(const PlanarDiagram& d) {
  GaussCode gc;
  for (const Pass& p : d.word())
    if (p.role != Role::Virtual) gc.word.push_back(p);
  return gc;
}

namespace {

char role_char(Role r) {
  switch (r) {
    case Role::Over: return 'O';
    case Role::Under: return 'U';
    case Role::Virtual: return 'V';
  }
  return '?';
}

}  // namespace

std::string to_word(const std::vector<Pass>& passes) {
  std::string s;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    if (i) s += ' ';
    s += role_char(passes[i].role);
    s += std::to_string(passes[i].crossing);
    s += passes[i].sign > 0 ? '+' : '-';
  }
  return s;
}

std::string to_word(const PlanarDiagram& d) { return to_word(d.word()); }

std::string canonical_code(const PlanarDiagram& d) {
  const std::size_t n = d.size();
  if (n == 0) return kRoundCircleCode;
  // Same result as minimizing over relabel(rotate_basepoint(d, s)), but on
  // integer keys: label first, then role, then sign.
  const auto& w = d.word();
  std::vector<int> label(static_cast<std::size_t>(d.max_crossing_id()) + 1);
  std::vector<int> best, key(n);
  std::size_t best_shift = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(label.begin(), label.end(), 0);
    int next = 0;
    bool smaller = best.empty(), decided = best.empty();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t p = (s + k) % n;
      int& l = label[static_cast<std::size_t>(w[p].crossing)];
      if (l == 0) l = ++next;
      int sign = w[p].sign;
      // A virtual crossing whose passes straddle the new basepoint swaps pass order.
      if (w[p].role == Role::Virtual) {
        const std::size_t q = d.partner(p);
        if ((std::min(p, q) < s) != (std::max(p, q) < s)) sign = -sign;
      }
      key[k] = l * 8 + static_cast<int>(w[p].role) * 2 + (sign > 0 ? 1 : 0);
      if (!decided && key[k] != best[k]) {
        decided = true;
        smaller = key[k] < best[k];
        if (!smaller) break;
      }
    }
    if (smaller) {
      best = key;
      best_shift = s;
    }
  }
  return to_word(relabel(rotate_basepoint(d, best_shift)));
}

}  // namespace weld
