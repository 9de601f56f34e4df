#include "pmod/render.hpp"

#include <algorithm>
#include <sstream>

namespace pmod {

std::string render_svg(const Module& M, RenderOptions opt) {
  if (M.d() != 2) throw std::invalid_argument("render_svg supports 2-parameter modules");
  const int nx = M.grid.sz[0], ny = M.grid.sz[1];
  const int c = opt.cell;
  const int margin = opt.axes ? 2 * c : 0;
  const int W = nx * c + margin + c, H = ny * c + margin + c;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  auto px = [&](int x) { return margin + x * c; };
  auto py = [&](int y) { return H - margin - (y + 1) * c; };  // y axis upward
  auto shade = [&](int dim) {
    int d = std::min(dim, opt.max_shade);
    int v = 235 - (d * 165) / std::max(1, opt.max_shade);
    std::ostringstream s;
    s << "rgb(" << v << "," << v / 2 + 110 << "," << 235 - v / 3 << ")";
    return s.str();
  };
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      int dim = M.dim[M.grid.index({x, y})];
      if (dim == 0) continue;
      os << "<rect x=\"" << px(x) << "\" y=\"" << py(y) << "\" width=\"" << c << "\" height=\""
         << c << "\" fill=\"" << shade(dim) << "\"/>\n";
    }
  // boundary strokes between cells of different dimension
  auto dim_at = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= nx || y >= ny) return 0;
    return M.dim[M.grid.index({x, y})];
  };
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      int d0 = dim_at(x, y);
      if (d0 != dim_at(x - 1, y))
        os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x) << "\" y2=\""
           << py(y) + c << "\"/>\n";
      if (d0 != dim_at(x, y - 1))
        os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) + c << "\" x2=\"" << px(x) + c
           << "\" y2=\"" << py(y) + c << "\"/>\n";
      if (x == nx - 1 && d0 != 0)
        os << "<line x1=\"" << px(x + 1) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x + 1)
           << "\" y2=\"" << py(y) + c << "\"/>\n";
      if (y == ny - 1 && d0 != 0)
        os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x) + c
           << "\" y2=\"" << py(y) << "\"/>\n";
    }
  os << "</g>\n";
  if (opt.axes) {
    os << "<g stroke=\"black\" stroke-width=\"2\">\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << W - c / 2
       << "\" y2=\"" << H - margin << "\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << margin
       << "\" y2=\"" << c / 2 << "\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pmod
