#include "pmod/io.hpp"

#include <fstream>
#include <sstream>

namespace pmod {

namespace {

// strip comments and blank lines, return token streams per line
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

long long to_int(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer: " + s);
  }
}

void emit_point(std::ostringstream& os, const Point& q) {
  for (int c : q) os << " " << c;
}

}  // namespace

std::string serialize_module(const Module& M) {
  std::ostringstream os;
  os << "pmod 1\n";
  os << "field " << M.p << "\n";
  os << "axes " << M.d() << "\n";
  os << "size";
  for (int s : M.grid.sz) os << " " << s;
  os << "\n";
  for (long long i = 0; i < M.npoints(); ++i) {
    if (M.dim[i] == 0) continue;
    os << "point";
    emit_point(os, M.grid.point(i));
    os << " " << M.dim[i] << "\n";
  }
  for (long long i = 0; i < M.npoints(); ++i)
    for (int ax = 0; ax < M.d(); ++ax) {
      const Matrix& e = M.edge[ax][i];
      if (e.rows == 0 || e.cols == 0 || e.is_zero()) continue;
      os << "edge";
      emit_point(os, M.grid.point(i));
      os << " " << ax;
      for (int r = 0; r < e.rows; ++r)
        for (int c = 0; c < e.cols; ++c) os << " " << e.at(r, c);
      os << "\n";
    }
  return os.str();
}

ModPtr parse_module(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "pmod") throw ParseError("missing pmod header");
  u32 p = 0;
  int d = -1;
  Grid g;
  std::unique_ptr<Module> M;
  auto read_point = [&](const std::vector<std::string>& toks, size_t from) {
    Point q(d);
    for (int i = 0; i < d; ++i) q[i] = (int)to_int(toks.at(from + i));
    if (!g.inside(q)) throw ParseError("point outside the grid");
    return q;
  };
  struct EdgeLine {
    Point q;
    int ax;
    std::vector<u32> entries;
  };
  std::vector<EdgeLine> edges;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] == "field") {
      p = (u32)to_int(t.at(1));
      require_prime(p);
    } else if (t[0] == "axes") {
      d = (int)to_int(t.at(1));
      if (d < 1 || d > 4) throw ParseError("axes must be 1..4");
    } else if (t[0] == "size") {
      if (d < 0) throw ParseError("size before axes");
      std::vector<int> sz(d);
      for (int i = 0; i < d; ++i) sz[i] = (int)to_int(t.at(1 + i));
      g = Grid(sz);
      M = std::make_unique<Module>(g, p ? p : kDefaultP);
    } else if (t[0] == "point") {
      if (!M) throw ParseError("point before size");
      Point q = read_point(t, 1);
      M->dim[g.index(q)] = (int)to_int(t.at(1 + d));
    } else if (t[0] == "edge") {
      if (!M) throw ParseError("edge before size");
      EdgeLine e;
      e.q = read_point(t, 1);
      e.ax = (int)to_int(t.at(1 + d));
      if (e.ax < 0 || e.ax >= d) throw ParseError("bad axis");
      for (size_t i = 2 + d; i < t.size(); ++i) {
        long long v = to_int(t[i]);
        u32 pp = M->p;
        e.entries.push_back((u32)(((v % pp) + pp) % pp));
      }
      edges.push_back(std::move(e));
    } else {
      throw ParseError("unknown directive: " + t[0]);
    }
  }
  if (!M) throw ParseError("incomplete module file");
  M->init_edges();
  for (const auto& e : edges) {
    long long i = g.index(e.q);
    Point r = e.q;
    r[e.ax] += 1;
    if (!g.inside(r)) {
      if (!e.entries.empty()) throw ParseError("edge leaving the grid has entries");
      continue;
    }
    Matrix& em = M->edge_mut(e.ax, i);
    if ((long long)e.entries.size() != (long long)em.rows * em.cols)
      throw ParseError("edge entry count mismatch");
    for (int r2 = 0; r2 < em.rows; ++r2)
      for (int c = 0; c < em.cols; ++c) em.at(r2, c) = e.entries[(size_t)r2 * em.cols + c];
  }
  try {
    M->check_commutativity();
  } catch (const std::exception& ex) {
    throw CommutativityViolation(ex.what());
  }
  return mk(std::move(*M));
}

std::string serialize_submodule(const Submodule& s) {
  std::ostringstream os;
  os << "pmodsub 1\n";
  const Grid& g = s.ambient->grid;
  for (long long i = 0; i < g.npoints(); ++i) {
    const Matrix& b = s.basis[i];
    if (b.cols == 0) continue;
    os << "point";
    emit_point(os, g.point(i));
    os << " " << b.cols;
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) os << " " << b.at(r, c);
    os << "\n";
  }
  return os.str();
}

Submodule parse_submodule(const std::string& text, ModPtr ambient) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "pmodsub") throw ParseError("missing pmodsub header");
  const Grid& g = ambient->grid;
  int d = g.d();
  Submodule s{ambient, std::vector<Matrix>(g.npoints())};
  for (long long i = 0; i < g.npoints(); ++i) s.basis[i] = Matrix(ambient->dim[i], 0, ambient->p);
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] != "point") throw ParseError("unknown directive: " + t[0]);
    Point q(d);
    for (int i = 0; i < d; ++i) q[i] = (int)to_int(t.at(1 + i));
    if (!g.inside(q)) throw ParseError("point outside the grid");
    long long idx = g.index(q);
    int k = (int)to_int(t.at(1 + d));
    int rows = ambient->dim[idx];
    Matrix b(rows, k, ambient->p);
    if ((long long)t.size() != 2 + d + (long long)rows * k)
      throw ParseError("basis entry count mismatch");
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < k; ++c) {
        long long v = to_int(t[2 + d + (size_t)r * k + c]);
        b.at(r, c) = (u32)(((v % ambient->p) + ambient->p) % ambient->p);
      }
    s.basis[idx] = std::move(b);
  }
  return canonicalized(s);
}

std::string serialize_ci(const CIProblem& prob) {
  std::ostringstream os;
  os << "ciproblem 1\n";
  os << "n " << prob.n << "\n";
  os << "P\n";
  for (int i = 0; i < prob.n; ++i) {
    for (int j = 0; j < prob.n; ++j) os << (prob.P[i][j] ? '*' : '.');
    os << "\n";
  }
  os << "Q\n";
  for (int i = 0; i < prob.n; ++i) {
    for (int j = 0; j < prob.n; ++j) os << (prob.Q[i][j] ? '*' : '.');
    os << "\n";
  }
  return os.str();
}

CIProblem parse_ci(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "ciproblem") throw ParseError("missing ciproblem header");
  CIProblem prob;
  size_t li = 1;
  if (li >= lines.size() || lines[li][0] != "n") throw ParseError("missing n");
  prob.n = (int)to_int(lines[li].at(1));
  if (prob.n < 1 || prob.n > 64) throw ParseError("n out of range");
  ++li;
  auto read_block = [&](std::vector<std::vector<bool>>& dst, const std::string& name) {
    if (li >= lines.size() || lines[li][0] != name) throw ParseError("missing block " + name);
    ++li;
    dst.assign(prob.n, std::vector<bool>(prob.n, false));
    for (int i = 0; i < prob.n; ++i, ++li) {
      if (li >= lines.size() || (int)lines[li][0].size() != prob.n)
        throw ParseError("bad pattern row in " + name);
      for (int j = 0; j < prob.n; ++j) {
        char c = lines[li][0][j];
        if (c != '*' && c != '.') throw ParseError("pattern rows use '*' and '.'");
        dst[i][j] = c == '*';
      }
    }
  };
  read_block(prob.P, "P");
  read_block(prob.Q, "Q");
  return prob;
}

std::string serialize_upsets(const std::vector<UpsetShape>& U) {
  std::ostringstream os;
  os << "upsets 1\n";
  os << "axes " << (U.empty() ? 2 : U[0].d) << "\n";
  for (const auto& u : U) {
    os << "upset";
    for (size_t k = 0; k < u.gens.size(); ++k) {
      os << (k ? " ;" : "");
      for (int c : u.gens[k]) os << " " << c;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<UpsetShape> parse_upsets(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "upsets") throw ParseError("missing upsets header");
  int d = 2;
  std::vector<UpsetShape> out;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] == "axes") {
      d = (int)to_int(t.at(1));
    } else if (t[0] == "upset") {
      std::vector<Point> gens;
      Point cur;
      for (size_t i = 1; i < t.size(); ++i) {
        if (t[i] == ";") {
          if ((int)cur.size() != d) throw ParseError("generator arity mismatch");
          gens.push_back(cur);
          cur.clear();
        } else {
          cur.push_back((int)to_int(t[i]));
        }
      }
      if (!cur.empty()) {
        if ((int)cur.size() != d) throw ParseError("generator arity mismatch");
        gens.push_back(cur);
      }
      out.push_back(UpsetShape::from_points(d, gens));
    } else {
      throw ParseError("unknown directive: " + t[0]);
    }
  }
  return out;
}

std::string serialize_bars(const std::vector<Bar>& bars) {
  std::ostringstream os;
  os << "bars 1\n";
  for (const Bar& b : bars) os << "bar " << b.a << " " << b.b << "\n";
  return os.str();
}

std::vector<Bar> parse_bars(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "bars") throw ParseError("missing bars header");
  std::vector<Bar> out;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] != "bar") throw ParseError("unknown directive: " + t[0]);
    Bar b{(int)to_int(t.at(1)), (int)to_int(t.at(2))};
    if (b.b < b.a) throw ParseError("bar endpoints out of order");
    out.push_back(b);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace pmod
