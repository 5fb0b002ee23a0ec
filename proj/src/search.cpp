#include "weldkit/search.hpp"

#include <algorithm>
#include <unordered_map>

namespace weld {
namespace {

struct Node {
  PlanarDiagram diagram;
  std::size_t parent;
  MoveInstance move;
  int depth;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

// Breadth-first expansion; `target` empty means explore everything.
class Bfs {
 public:
  Bfs(const MoveSet& s, const SearchLimits& lim) : s_(s), lim_(lim) {}

  std::optional<std::size_t> run(const PlanarDiagram& start, const std::string& target) {
    const std::string code = canonical_code(start);
    nodes_.push_back({start, kRoot, {}, 0});
    depth_.emplace(code, 0);
    if (code == target) return 0;
    for (std::size_t head = 0; head < nodes_.size(); ++head) {
      if (nodes_[head].depth >= lim_.max_depth) continue;
      for (auto& nb : neighbors(nodes_[head].diagram, s_)) {
        if (nb.result.crossing_count() > lim_.max_crossings) continue;
        if (depth_.count(nb.code)) continue;
        if (nodes_.size() >= lim_.max_nodes) return std::nullopt;
        const int depth = nodes_[head].depth + 1;
        depth_.emplace(nb.code, depth);
        nodes_.push_back({std::move(nb.result), head, std::move(nb.move), depth});
        if (nb.code == target) return nodes_.size() - 1;
      }
    }
    return std::nullopt;
  }

  MovePath path_to(std::size_t idx) const {
    MovePath p;
    p.end_code = canonical_code(nodes_[idx].diagram);
    for (std::size_t i = idx; nodes_[i].parent != kRoot; i = nodes_[i].parent)
      p.moves.push_back(nodes_[i].move);
    std::reverse(p.moves.begin(), p.moves.end());
    p.start_code = canonical_code(nodes_.front().diagram);
    return p;
  }

  std::size_t visited() const { return nodes_.size(); }
  const std::unordered_map<std::string, int>& depths() const { return depth_; }

 private:
  const MoveSet& s_;
  const SearchLimits& lim_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> depth_;
};

}  // namespace

SearchResult bfs_path_only(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                           const SearchLimits& lim) {
  Bfs bfs(s, lim);
  SearchResult r;
  if (auto hit = bfs.run(a, canonical_code(b))) {
    r.status = SearchStatus::Found;
    r.path = bfs.path_to(*hit);
  }
  r.visited = bfs.visited();
  return r;
}

SearchResult bfs_path(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                      const SearchLimits& lim, const std::vector<FiniteGroupTable>& panel) {
  if (auto dist = distinguish(a, b, s, panel); dist.witness) {
    SearchResult r;
    r.status = SearchStatus::Distinguished;
    r.witness = dist.witness;
    return r;
  }
  return bfs_path_only(a, b, s, lim);
}

std::map<std::string, int> reachable_set(const PlanarDiagram& d, const MoveSet& s,
                                         const SearchLimits& lim) {
  Bfs bfs(s, lim);
  bfs.run(d, {});
  return {bfs.depths().begin(), bfs.depths().end()};
}

Movie path_to_movie(const PlanarDiagram& start, const MovePath& path, std::string name) {
  Movie m;
  m.name = std::move(name);
  m.diagrams.push_back(start);
  for (const auto& mv : path.moves) {
    m.diagrams.push_back(apply_move(m.diagrams.back(), mv));
    m.events.push_back({mv.kind, mv.site});
  }
  return m;
}

}  // namespace weld
