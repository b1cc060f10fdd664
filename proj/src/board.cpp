#include "domino/board.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace domino {

namespace {

constexpr int kNoOwner = -1;

int cell_index(const BoardDims& d, int row, int col) {
  return row * d.cols + col;
}

bool in_bounds(const BoardDims& d, const Cell& c) {
  return c.row >= 0 && c.row < d.rows && c.col >= 0 && c.col < d.cols;
}

// Letters cycle A-Z then a-z.
constexpr int kAlphabetSize = 52;

char alphabet_at(int i) {
  return i < 26 ? static_cast<char>('A' + i) : static_cast<char>('a' + i - 26);
}

int alphabet_pos(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return 26 + (c - 'a');
  return -1;
}

}  // namespace

Tiling validate_tiling(BoardDims dims, std::vector<Domino> dominoes) {
  if (dims.rows < 1 || dims.cols < 1)
    throw Error("board dimensions must be positive");

  std::vector<int> owner(static_cast<std::size_t>(dims.area()), kNoOwner);
  for (std::size_t i = 0; i < dominoes.size(); ++i) {
    const Domino& d = dominoes[i];
    const Cell a = d.anchor;
    const Cell b = d.second();
    if (!in_bounds(dims, a) || !in_bounds(dims, b))
      throw OutOfBoundsError(a.row, a.col);
    for (const Cell& c : {a, b}) {
      int& slot = owner[cell_index(dims, c.row, c.col)];
      if (slot != kNoOwner) throw OverlapError(c.row, c.col);
      slot = static_cast<int>(i);
    }
  }
  for (int row = 0; row < dims.rows; ++row)
    for (int col = 0; col < dims.cols; ++col)
      if (owner[cell_index(dims, row, col)] == kNoOwner)
        throw GapError(row, col);

  std::sort(dominoes.begin(), dominoes.end());
  return Tiling(dims, std::move(dominoes));
}

GridEdge bisecting_edge(const Domino& d) {
  const int r = d.anchor.row;
  const int c = d.anchor.col;
  if (d.orientation == Orientation::Horizontal)
    return GridEdge{{c + 1, r}, {c + 1, r + 1}};
  return GridEdge{{c, r + 1}, {c + 1, r + 1}};
}

std::string tiling_to_text(const Tiling& t) {
  const BoardDims& dims = t.dims();
  const auto& ds = t.dominoes();

  std::vector<int> owner(static_cast<std::size_t>(dims.area()), kNoOwner);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Cell a = ds[i].anchor;
    const Cell b = ds[i].second();
    owner[cell_index(dims, a.row, a.col)] = static_cast<int>(i);
    owner[cell_index(dims, b.row, b.col)] = static_cast<int>(i);
  }

  // Letters are assigned to dominoes in reading order of the printed grid.
  // The candidate letter cycles through the alphabet; on a collision with an
  // already-lettered neighbouring domino it advances until clear (only
  // possible past 52 dominoes).
  std::vector<char> letter(ds.size(), 0);
  int assigned = 0;
  auto neighbours_clear = [&](std::size_t di, char cand) {
    const Cell cells[2] = {ds[di].anchor, ds[di].second()};
    static constexpr int dr[4] = {1, -1, 0, 0};
    static constexpr int dc[4] = {0, 0, 1, -1};
    for (const Cell& c : cells)
      for (int k = 0; k < 4; ++k) {
        Cell n{c.row + dr[k], c.col + dc[k]};
        if (!in_bounds(dims, n)) continue;
        int other = owner[cell_index(dims, n.row, n.col)];
        if (other >= 0 && static_cast<std::size_t>(other) != di &&
            letter[other] == cand)
          return false;
      }
    return true;
  };
  for (int row = dims.rows - 1; row >= 0; --row) {
    for (int col = 0; col < dims.cols; ++col) {
      int di = owner[cell_index(dims, row, col)];
      if (letter[di] != 0) continue;
      int pos = assigned % kAlphabetSize;
      for (int probe = 0; probe < kAlphabetSize; ++probe) {
        char cand = alphabet_at((pos + probe) % kAlphabetSize);
        if (neighbours_clear(di, cand)) {
          letter[di] = cand;
          break;
        }
      }
      if (letter[di] == 0)
        throw Error("ran out of letters for the tiling text form");
      ++assigned;
    }
  }

  std::string out;
  out.reserve(static_cast<std::size_t>((dims.cols + 1) * dims.rows));
  for (int row = dims.rows - 1; row >= 0; --row) {
    for (int col = 0; col < dims.cols; ++col)
      out.push_back(letter[owner[cell_index(dims, row, col)]]);
    out.push_back('\n');
  }
  return out;
}

Tiling tiling_from_text(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);  // final newline optional
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  const int rows = static_cast<int>(lines.size());
  const int cols = static_cast<int>(lines[0].size());
  if (cols == 0) throw ParseError(1, 1, "empty line");
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(lines[i].size()) != cols)
      throw ParseError(i + 1, static_cast<int>(lines[i].size()) + 1,
                       "ragged line");
    for (int j = 0; j < cols; ++j)
      if (alphabet_pos(lines[i][j]) < 0)
        throw ParseError(i + 1, j + 1, "expected a letter A-Z or a-z");
  }

  BoardDims dims{rows, cols};
  // Printed line i holds board row rows-1-i.
  auto at = [&](int row, int col) { return lines[rows - 1 - row][col]; };

  // Equal-letter 4-components must have exactly two cells forming a domino.
  std::vector<bool> seen(static_cast<std::size_t>(dims.area()), false);
  std::vector<Domino> dominoes;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int row = rows - 1 - i, col = j;
      if (seen[cell_index(dims, row, col)]) continue;
      const char letter = at(row, col);
      // Flood the component.
      std::vector<Cell> comp;
      std::vector<Cell> stack{{row, col}};
      seen[cell_index(dims, row, col)] = true;
      while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        comp.push_back(c);
        static constexpr int dr[4] = {1, -1, 0, 0};
        static constexpr int dc[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          Cell n{c.row + dr[k], c.col + dc[k]};
          if (!in_bounds(dims, n) || seen[cell_index(dims, n.row, n.col)])
            continue;
          if (at(n.row, n.col) != letter) continue;
          seen[cell_index(dims, n.row, n.col)] = true;
          stack.push_back(n);
        }
      }
      if (comp.size() != 2)
        throw ParseError(i + 1, j + 1,
                         std::string("letter '") + letter +
                             "' does not form a domino shape");
      std::sort(comp.begin(), comp.end());
      const Cell a = comp[0], b = comp[1];
      dominoes.push_back(b.row == a.row ? horizontal_at(a.row, a.col)
                                        : vertical_at(a.row, a.col));
    }
  }
  return validate_tiling(dims, std::move(dominoes));
}

std::string fault_line_to_json(const FaultLine& f) {
  std::string axis = f.axis == Axis::Horizontal ? "H" : "V";
  return "{\"axis\":\"" + axis + "\",\"index\":" + std::to_string(f.index) +
         "}";
}

std::string fault_lines_to_json(const std::vector<FaultLine>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += fault_line_to_json(fs[i]);
  }
  out += "]";
  return out;
}

std::string grid_path_to_json(const GridPath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(p.vertices[i].x) + "," +
           std::to_string(p.vertices[i].y) + "]";
  }
  out += "]";
  return out;
}

}  // namespace domino
