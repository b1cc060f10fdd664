#include "domino/render.hpp"

#include <algorithm>

namespace domino {

std::string render_ascii(const Tiling& t, const GridPath* path) {
  if (!path) return tiling_to_text(t);

  const BoardDims& d = t.dims();
  const int height = 2 * d.rows + 1;
  const int width = 2 * d.cols + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(height),
                                  std::string(static_cast<std::size_t>(width),
                                              ' '));
  // Vertex (x, y) sits at printed row 2*(rows-y), column 2*x.
  auto vrow = [&](int y) { return 2 * (d.rows - y); };
  for (int y = 0; y <= d.rows; ++y)
    for (int x = 0; x <= d.cols; ++x)
      canvas[static_cast<std::size_t>(vrow(y))]
            [static_cast<std::size_t>(2 * x)] = '.';

  const std::string letters = tiling_to_text(t);
  // letters has cols+1 chars per line (trailing newline), top row first.
  for (int row = 0; row < d.rows; ++row)
    for (int col = 0; col < d.cols; ++col)
      canvas[static_cast<std::size_t>(2 * (d.rows - row) - 1)]
            [static_cast<std::size_t>(2 * col + 1)] =
          letters[static_cast<std::size_t>((d.rows - 1 - row) * (d.cols + 1) +
                                           col)];

  for (std::size_t i = 0; path && i < path->vertices.size(); ++i) {
    const GridVertex v = path->vertices[i];
    canvas[static_cast<std::size_t>(vrow(v.y))]
          [static_cast<std::size_t>(2 * v.x)] = '+';
    if (i + 1 < path->vertices.size()) {
      const GridVertex w = path->vertices[i + 1];
      if (v.x == w.x)
        canvas[static_cast<std::size_t>(vrow(std::min(v.y, w.y)) - 1)]
              [static_cast<std::size_t>(2 * v.x)] = '|';
      else
        canvas[static_cast<std::size_t>(vrow(v.y))]
              [static_cast<std::size_t>(2 * std::min(v.x, w.x) + 1)] = '-';
    }
  }

  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

void append_attr(std::string& s, const char* name, int value) {
  s += ' ';
  s += name;
  s += "=\"";
  s += std::to_string(value);
  s += '"';
}

void append_attr(std::string& s, const char* name, const std::string& value) {
  s += ' ';
  s += name;
  s += "=\"";
  s += value;
  s += '"';
}

}  // namespace

std::string render_svg(const Tiling& t, const GridPath* path,
                       const std::vector<FaultLine>* faults,
                       const RenderOptions& opts) {
  if (opts.cell_size < 8) throw Error("cell_size must be at least 8");
  const BoardDims& d = t.dims();
  const int cell = opts.cell_size;
  const int margin = cell / 2;
  const int width = d.cols * cell + 2 * margin;
  const int height = d.rows * cell + 2 * margin;

  // Lattice point (x, y) in pixels; SVG y grows downward.
  auto px = [&](int x) { return margin + x * cell; };
  auto py = [&](int y) { return margin + (d.rows - y) * cell; };

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  append_attr(svg, "width", width);
  append_attr(svg, "height", height);
  append_attr(svg, "viewBox",
              "0 0 " + std::to_string(width) + " " + std::to_string(height));
  svg += ">\n";

  const int inset = std::max(1, cell / 10);
  const int radius = std::max(1, cell / 8);
  const int stroke = std::max(1, cell / 20);
  for (const Domino& dom : t.dominoes()) {
    const bool horizontal = dom.orientation == Orientation::Horizontal;
    const int cw = horizontal ? 2 : 1;
    const int ch = horizontal ? 1 : 2;
    svg += "<rect";
    append_attr(svg, "x", px(dom.anchor.col) + inset);
    append_attr(svg, "y", py(dom.anchor.row + ch) + inset);
    append_attr(svg, "width", cw * cell - 2 * inset);
    append_attr(svg, "height", ch * cell - 2 * inset);
    append_attr(svg, "rx", radius);
    append_attr(svg, "fill", std::string(horizontal ? "#7fb3d5" : "#f5b041"));
    append_attr(svg, "stroke", std::string("#34495e"));
    append_attr(svg, "stroke-width", stroke);
    svg += "/>\n";
  }

  if (opts.show_fault_lines && faults) {
    const std::string dash =
        std::to_string(std::max(2, cell / 5)) + " " +
        std::to_string(std::max(1, cell / 10));
    for (const FaultLine& f : *faults) {
      svg += "<line";
      if (f.axis == Axis::Horizontal) {
        append_attr(svg, "x1", px(0));
        append_attr(svg, "y1", py(f.index));
        append_attr(svg, "x2", px(d.cols));
        append_attr(svg, "y2", py(f.index));
      } else {
        append_attr(svg, "x1", px(f.index));
        append_attr(svg, "y1", py(0));
        append_attr(svg, "x2", px(f.index));
        append_attr(svg, "y2", py(d.rows));
      }
      append_attr(svg, "stroke", std::string("#c0392b"));
      append_attr(svg, "stroke-width", std::max(1, cell / 12));
      append_attr(svg, "stroke-dasharray", dash);
      svg += "/>\n";
    }
  }

  if (opts.show_orientations) {
    // Arrowheads drawn as small <path> triangles at line midpoints; the
    // vertical rule is variant-independent, the horizontal rule needs a
    // variant and is inferred from the path's start corner when present.
    const int a = std::max(2, cell / 6);
    auto triangle = [&](int cx, int cy, int dx, int dy) {
      const int tip_x = cx + dx * a, tip_y = cy - dy * a;
      const int base_x = cx - dx * a, base_y = cy + dy * a;
      svg += "<path";
      append_attr(
          svg, "d",
          "M " + std::to_string(tip_x) + " " + std::to_string(tip_y) + " L " +
              std::to_string(base_x - dy * a) + " " +
              std::to_string(base_y - dx * a) + " L " +
              std::to_string(base_x + dy * a) + " " +
              std::to_string(base_y + dx * a) + " Z");
      append_attr(svg, "fill", std::string("#7f8c8d"));
      svg += "/>\n";
    };
    for (int x = 0; x <= d.cols; ++x) {
      const int dir = x % 2 == 0 ? 1 : -1;  // north or south
      triangle(px(x), (py(d.rows) + py(0)) / 2, 0, dir);
    }
    if (path && !path->vertices.empty()) {
      const bool variant_a = path->vertices.front().x == 0;
      for (int y = 0; y <= d.rows; ++y) {
        const bool east = variant_a ? y % 2 == 0 : y % 2 == 1;
        triangle((px(0) + px(d.cols)) / 2, py(y), east ? 1 : -1, 0);
      }
    }
  }

  if (opts.show_path && path && !path->vertices.empty()) {
    svg += "<polyline";
    std::string pts;
    for (std::size_t i = 0; i < path->vertices.size(); ++i) {
      if (i) pts += ' ';
      pts += std::to_string(px(path->vertices[i].x)) + "," +
             std::to_string(py(path->vertices[i].y));
    }
    append_attr(svg, "points", pts);
    append_attr(svg, "fill", std::string("none"));
    append_attr(svg, "stroke", std::string("#1b2631"));
    append_attr(svg, "stroke-width", std::max(1, cell / 10));
    append_attr(svg, "stroke-linecap", std::string("round"));
    append_attr(svg, "stroke-linejoin", std::string("round"));
    svg += "/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace domino
