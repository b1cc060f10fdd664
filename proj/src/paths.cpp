#include "domino/paths.hpp"

#include <algorithm>
#include <numeric>

namespace domino {

namespace {

bool vertical_line_runs_north(int x) { return x % 2 == 0; }

bool horizontal_line_runs_east(int y, PathVariant v) {
  return v == PathVariant::A ? y % 2 == 0 : y % 2 == 1;
}

GridVertex start_corner(const BoardDims& d, PathVariant v) {
  return v == PathVariant::A ? GridVertex{0, 0} : GridVertex{d.cols, 0};
}

GridVertex goal_corner(const BoardDims& d, PathVariant v) {
  return v == PathVariant::A ? GridVertex{d.cols, d.rows}
                             : GridVertex{0, d.rows};
}

}  // namespace

DirectedGrid::DirectedGrid(const Tiling& t, PathVariant v)
    : dims_(t.dims()), variant_(v) {
  if (dims_.rows % 2 != 0 || dims_.cols % 2 != 0)
    throw OddDimensionsError("traffic-rule grids need even rows and cols");
  vertical_removed_.assign(
      static_cast<std::size_t>(dims_.cols + 1) * dims_.rows, false);
  horizontal_removed_.assign(
      static_cast<std::size_t>(dims_.rows + 1) * dims_.cols, false);
  for (const Domino& d : t.dominoes()) {
    const GridEdge e = bisecting_edge(d);
    if (e.a.x == e.b.x)
      vertical_removed_[vertical_index(e.a.x, e.a.y)] = true;
    else
      horizontal_removed_[horizontal_index(e.a.x, e.a.y)] = true;
    ++removed_count_;
  }
}

bool DirectedGrid::step_allowed(const GridVertex& from,
                                const GridVertex& to) const {
  if (to.x < 0 || to.x > dims_.cols || to.y < 0 || to.y > dims_.rows)
    return false;
  const int dx = to.x - from.x, dy = to.y - from.y;
  if (dx * dx + dy * dy != 1) return false;
  if (dx == 0) {
    const int ylo = std::min(from.y, to.y);
    if (vertical_edge_removed(from.x, ylo)) return false;
    return dy == 1 ? vertical_line_runs_north(from.x)
                   : !vertical_line_runs_north(from.x);
  }
  const int xlo = std::min(from.x, to.x);
  if (horizontal_edge_removed(xlo, from.y)) return false;
  return dx == 1 ? horizontal_line_runs_east(from.y, variant_)
                 : !horizontal_line_runs_east(from.y, variant_);
}

DirectedGrid build_directed_grid(const Tiling& t, PathVariant v) {
  return DirectedGrid(t, v);
}

std::vector<FaultLine> find_fault_lines(const Tiling& t) {
  const BoardDims& d = t.dims();
  std::vector<int> horizontal_crossings(static_cast<std::size_t>(d.rows) + 1,
                                        0);
  std::vector<int> vertical_crossings(static_cast<std::size_t>(d.cols) + 1, 0);
  for (const Domino& dom : t.dominoes()) {
    if (dom.orientation == Orientation::Vertical)
      ++horizontal_crossings[static_cast<std::size_t>(dom.anchor.row) + 1];
    else
      ++vertical_crossings[static_cast<std::size_t>(dom.anchor.col) + 1];
  }
  std::vector<FaultLine> out;
  for (int k = 1; k < d.rows; ++k)
    if (horizontal_crossings[static_cast<std::size_t>(k)] == 0)
      out.push_back({Axis::Horizontal, k});
  for (int k = 1; k < d.cols; ++k)
    if (vertical_crossings[static_cast<std::size_t>(k)] == 0)
      out.push_back({Axis::Vertical, k});
  return out;
}

namespace {

// Iterative depth-first search over the directed grid. Every vertex push
// counts one expansion against the budget.
class PathSearch {
 public:
  PathSearch(const Tiling& t, PathVariant v, std::uint64_t budget)
      : grid_(t, v),
        dims_(t.dims()),
        budget_(budget),
        start_(start_corner(dims_, v)),
        goal_(goal_corner(dims_, v)),
        total_(static_cast<std::size_t>(dims_.rows + 1) * (dims_.cols + 1)) {}

  // Runs until `limit` solutions are found or the space is exhausted.
  // Returns the first solution (when any) in `first`.
  unsigned run(unsigned limit, std::optional<GridPath>* first,
               SearchStats* stats) {
    struct Frame {
      GridVertex at;
      int next_dir;
    };
    static constexpr int kDx[4] = {0, 1, 0, -1};  // N, E, S, W
    static constexpr int kDy[4] = {1, 0, -1, 0};

    std::vector<char> visited(total_, 0);
    std::vector<Frame> stack;
    stack.reserve(total_);
    std::uint64_t expansions = 0;
    unsigned found = 0;

    auto id = [this](const GridVertex& v) {
      return static_cast<std::size_t>(v.y) * (dims_.cols + 1) + v.x;
    };

    stack.push_back({start_, 0});
    visited[id(start_)] = 1;
    ++expansions;

    while (!stack.empty()) {
      Frame& top = stack.back();
      if (stack.size() == total_ && top.at == goal_) {
        ++found;
        if (first && found == 1) {
          GridPath p;
          p.vertices.reserve(total_);
          for (const Frame& f : stack) p.vertices.push_back(f.at);
          *first = std::move(p);
        }
        if (found >= limit) break;
        visited[id(top.at)] = 0;
        stack.pop_back();
        continue;
      }
      bool advanced = false;
      while (top.next_dir < 4) {
        const int dir = top.next_dir++;
        const GridVertex next{top.at.x + kDx[dir], top.at.y + kDy[dir]};
        if (!grid_.step_allowed(top.at, next)) continue;
        if (visited[id(next)]) continue;
        if (++expansions > budget_) throw SearchExhaustedError(budget_);
        visited[id(next)] = 1;
        stack.push_back({next, 0});
        advanced = true;
        break;
      }
      if (!advanced && !stack.empty() && stack.back().next_dir >= 4) {
        visited[id(stack.back().at)] = 0;
        stack.pop_back();
      }
    }
    if (stats) {
      stats->expansions = expansions;
      stats->solutions = found;
    }
    return found;
  }

 private:
  DirectedGrid grid_;
  BoardDims dims_;
  std::uint64_t budget_;
  GridVertex start_;
  GridVertex goal_;
  std::size_t total_;
};

}  // namespace

std::optional<GridPath> hamiltonian_path(const Tiling& t, PathVariant v,
                                         std::uint64_t budget,
                                         SearchStats* stats) {
  if (budget < 1) throw Error("budget must be at least 1");
  PathSearch search(t, v, budget);
  std::optional<GridPath> first;
  search.run(1, &first, stats);
  return first;
}

unsigned count_hamiltonian_paths(const Tiling& t, PathVariant v,
                                 std::uint64_t budget, unsigned limit,
                                 SearchStats* stats) {
  if (limit < 1) throw Error("limit must be at least 1");
  PathSearch search(t, v, budget);
  return search.run(limit, nullptr, stats);
}

bool is_valid_traffic_path(const Tiling& t, PathVariant v, const GridPath& p,
                           std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const BoardDims& d = t.dims();
  if (d.rows % 2 != 0 || d.cols % 2 != 0) return fail("odd board");
  const std::size_t total =
      static_cast<std::size_t>(d.rows + 1) * (d.cols + 1);
  if (p.vertices.size() != total)
    return fail("expected " + std::to_string(total) + " vertices, got " +
                std::to_string(p.vertices.size()));
  if (p.vertices.front() != start_corner(d, v))
    return fail("wrong start corner");
  if (p.vertices.back() != goal_corner(d, v)) return fail("wrong end corner");

  std::vector<char> seen(total, 0);
  for (const GridVertex& u : p.vertices) {
    if (u.x < 0 || u.x > d.cols || u.y < 0 || u.y > d.rows)
      return fail("vertex out of bounds");
    const std::size_t i = static_cast<std::size_t>(u.y) * (d.cols + 1) + u.x;
    if (seen[i]) return fail("vertex visited twice");
    seen[i] = 1;
  }

  // Bisecting edges straight from the tiling (normalized endpoint order).
  std::vector<GridEdge> cuts;
  cuts.reserve(t.dominoes().size());
  for (const Domino& dom : t.dominoes()) cuts.push_back(bisecting_edge(dom));
  std::sort(cuts.begin(), cuts.end());

  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const GridVertex a = p.vertices[i], b = p.vertices[i + 1];
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (dx * dx + dy * dy != 1) return fail("non-unit step");
    if (dx == 0) {
      if (dy == 1 && !vertical_line_runs_north(a.x))
        return fail("northbound step on a southbound line");
      if (dy == -1 && vertical_line_runs_north(a.x))
        return fail("southbound step on a northbound line");
    } else {
      if (dx == 1 && !horizontal_line_runs_east(a.y, v))
        return fail("eastbound step on a westbound line");
      if (dx == -1 && horizontal_line_runs_east(a.y, v))
        return fail("westbound step on an eastbound line");
    }
    GridEdge e{a, b};
    if (b < a) e = {b, a};
    if (std::binary_search(cuts.begin(), cuts.end(), e))
      return fail("path crosses a domino");
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace

SidePartition side_partition(const Tiling& t, const GridPath& p) {
  const BoardDims& d = t.dims();

  // Mark the lattice edges the path uses.
  std::vector<char> vert_used(static_cast<std::size_t>(d.cols + 1) * d.rows,
                              0);
  std::vector<char> horiz_used(static_cast<std::size_t>(d.rows + 1) * d.cols,
                               0);
  auto vert_at = [&](int x, int y) -> char& {
    return vert_used[static_cast<std::size_t>(x) * d.rows + y];
  };
  auto horiz_at = [&](int x, int y) -> char& {
    return horiz_used[static_cast<std::size_t>(y) * d.cols + x];
  };
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const GridVertex a = p.vertices[i], b = p.vertices[i + 1];
    if (a.x == b.x)
      vert_at(a.x, std::min(a.y, b.y)) = 1;
    else
      horiz_at(std::min(a.x, b.x), a.y) = 1;
  }

  for (const Domino& dom : t.dominoes()) {
    const GridEdge e = bisecting_edge(dom);
    const bool used = e.a.x == e.b.x ? vert_at(e.a.x, e.a.y) != 0
                                     : horiz_at(e.a.x, e.a.y) != 0;
    if (used) throw BisectedDominoError(dom.anchor.row, dom.anchor.col);
  }

  // Faces of the board minus the path's edges.
  auto cell_id = [&](int row, int col) { return row * d.cols + col; };
  UnionFind uf(static_cast<std::size_t>(d.area()));
  for (int row = 0; row < d.rows; ++row) {
    for (int col = 0; col < d.cols; ++col) {
      // east neighbour, unless the vertical lattice edge between them is used
      if (col + 1 < d.cols && !vert_at(col + 1, row))
        uf.unite(cell_id(row, col), cell_id(row, col + 1));
      // north neighbour, unless the horizontal lattice edge is used
      if (row + 1 < d.rows && !horiz_at(col, row + 1))
        uf.unite(cell_id(row, col), cell_id(row + 1, col));
    }
  }

  // A face can be pinched off by a path stretch running along the board
  // boundary, so the face count alone is not "both sides". Walking the
  // directed path and marking each flanking cell left or right labels every
  // face (all of a face's path-adjacent cells see the same side), and the
  // two sides are the unions of the faces by label.
  constexpr int kUnlabelled = -1, kLeft = 0, kRight = 1;
  std::vector<int> side(static_cast<std::size_t>(d.area()), kUnlabelled);
  auto mark = [&](int row, int col, int label) {
    if (row < 0 || row >= d.rows || col < 0 || col >= d.cols) return;
    int& slot = side[static_cast<std::size_t>(uf.find(cell_id(row, col)))];
    if (slot == kUnlabelled) slot = label;
    else if (slot != label)
      throw Error("face flanks the path on both sides");
  };
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const GridVertex a = p.vertices[i], b = p.vertices[i + 1];
    if (b.y == a.y + 1) {  // north
      mark(a.y, a.x - 1, kLeft);
      mark(a.y, a.x, kRight);
    } else if (b.y == a.y - 1) {  // south
      mark(b.y, b.x, kLeft);
      mark(b.y, b.x - 1, kRight);
    } else if (b.x == a.x + 1) {  // east
      mark(a.y, a.x, kLeft);
      mark(a.y - 1, a.x, kRight);
    } else {  // west
      mark(a.y - 1, b.x, kLeft);
      mark(a.y, b.x, kRight);
    }
  }

  int counts[2] = {0, 0};
  bool present[2] = {false, false};
  for (const Domino& dom : t.dominoes()) {
    const Cell a = dom.anchor, b = dom.second();
    const int ra = uf.find(cell_id(a.row, a.col));
    const int rb = uf.find(cell_id(b.row, b.col));
    if (ra != rb) throw BisectedDominoError(a.row, a.col);
    const int label = side[static_cast<std::size_t>(ra)];
    if (label == kUnlabelled) throw Error("face not adjacent to the path");
    ++counts[label];
  }
  for (int i = 0; i < d.area(); ++i) {
    const int label = side[static_cast<std::size_t>(uf.find(i))];
    if (label != kUnlabelled) present[label] = true;
  }

  SidePartition out;
  for (int label : {kLeft, kRight})
    if (present[label]) out.groups.emplace_back(label, counts[label]);
  return out;
}

Tiling reflect_horizontal(const Tiling& t) {
  const BoardDims& d = t.dims();
  std::vector<Domino> mirrored;
  mirrored.reserve(t.dominoes().size());
  for (const Domino& dom : t.dominoes()) {
    if (dom.orientation == Orientation::Horizontal)
      mirrored.push_back(
          horizontal_at(dom.anchor.row, d.cols - 2 - dom.anchor.col));
    else
      mirrored.push_back(
          vertical_at(dom.anchor.row, d.cols - 1 - dom.anchor.col));
  }
  return validate_tiling(d, std::move(mirrored));
}

GridPath reflect_horizontal(const GridPath& p, int cols) {
  GridPath out;
  out.vertices.reserve(p.vertices.size());
  for (const GridVertex& v : p.vertices)
    out.vertices.push_back({cols - v.x, v.y});
  return out;
}

}  // namespace domino
