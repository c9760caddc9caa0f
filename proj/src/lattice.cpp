#include "iceschur/lattice.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

namespace iceschur {

char spin_char(Spin s) { return s == Spin::kPlus ? '+' : '-'; }

std::string_view class_name(VertexClass c) {
  static constexpr std::array<std::string_view, 6> kNames = {"A1", "A2", "B1", "B2", "C1", "C2"};
  return kNames[static_cast<int>(c)];
}

VertexClass parse_class(std::string_view name) {
  for (VertexClass c : kAllClasses) {
    if (class_name(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown vertex class '" + std::string(name) + "'");
}

// ----------------------------------------------------------------- grammar

VertexGrammar VertexGrammar::standard() {
  constexpr Spin P = Spin::kPlus;
  constexpr Spin M = Spin::kMinus;
  return VertexGrammar({{
      {P, P, P, P},  // A1
      {M, M, M, M},  // A2
      {M, M, P, P},  // B1
      {P, P, M, M},  // B2
      {P, M, M, P},  // C1
      {M, P, P, M},  // C2
  }});
}

std::optional<VertexClass> VertexGrammar::classify(SpinQuad q) const {
  for (int k = 0; k < 6; ++k) {
    if (quads_[k] == q) return static_cast<VertexClass>(k);
  }
  return std::nullopt;
}

std::optional<VertexClass> classify_vertex(Spin n, Spin s, Spin w, Spin e) {
  static const VertexGrammar kStandard = VertexGrammar::standard();
  return kStandard.classify({n, s, w, e});
}

// ----------------------------------------------------------------- weights

VertexWeights gamma_vertex(const Polynomial& z, const Polynomial& a, const Polynomial& t) {
  return {Polynomial(1), z - t * a, t, z + a, z * (t + Polynomial(1)), Polynomial(1)};
}

VertexWeights gamma_gamma_vertex(const Polynomial& zi, const Polynomial& zk, const Polynomial& t) {
  const Polynomial one(1);
  return {t * zi + zk, t * zk + zi, t * (zk - zi), zi - zk, (t + one) * zi, (t + one) * zk};
}

VertexWeights u_column_vertex(const Polynomial& alpha, const Polynomial& beta) {
  return {Polynomial(1), Polynomial(1), beta - alpha, Polynomial(0), Polynomial(1), Polynomial(1)};
}

Polynomial free_fermion_defect(const VertexWeights& w) {
  return w[0] * w[1] + w[2] * w[3] - w[4] * w[5];
}

Polynomial t_value(const TMode& mode) { return mode ? Polynomial(*mode) : Polynomial::t(); }

Polynomial gamma_weight(int i, int j, VertexClass c, const TMode& t_mode) {
  return weight_of(gamma_vertex(Polynomial::z(i), Polynomial::alpha(j), t_value(t_mode)), c);
}

WeightTable WeightTable::gamma(const TMode& t_mode) {
  WeightTable w;
  w.preset_ = Preset::kGamma;
  w.name_ = t_mode ? "gamma(t=" + to_string(*t_mode) + ")" : "gamma(t)";
  w.t_ = t_value(t_mode);
  Polynomial t = w.t_;
  w.fn_ = [t](const Polynomial& z, const Polynomial& a) { return gamma_vertex(z, a, t); };
  return w;
}

WeightTable WeightTable::gamma_inf() {
  WeightTable w;
  w.preset_ = Preset::kGammaInf;
  w.name_ = "gamma_inf";
  w.fn_ = [](const Polynomial& z, const Polynomial& a) -> VertexWeights {
    return {Polynomial(1), -a, Polynomial(1), z + a, z, Polynomial(1)};
  };
  return w;
}

WeightTable WeightTable::dual_top() {
  WeightTable w;
  w.preset_ = Preset::kDualTop;
  w.name_ = "dual_top";
  w.fn_ = [](const Polynomial& y, const Polynomial& a) -> VertexWeights {
    return {Polynomial(1), y + a, Polynomial(1), y - a, Polynomial(2) * y, Polynomial(1)};
  };
  return w;
}

WeightTable WeightTable::custom(
    std::string name, std::function<VertexWeights(const Polynomial&, const Polynomial&)> fn) {
  WeightTable w;
  w.preset_ = Preset::kCustom;
  w.name_ = std::move(name);
  w.fn_ = std::move(fn);
  return w;
}

VertexWeights WeightTable::at(const Polynomial& spectral, const Polynomial& shift) const {
  return fn_(spectral, shift);
}

WeightTable WeightTable::perturbed(VertexClass c, const Polynomial& delta) const {
  WeightTable w = *this;
  w.name_ = name_ + "+perturb(" + std::string(class_name(c)) + ")";
  auto inner = fn_;
  w.fn_ = [inner, c, delta](const Polynomial& z, const Polynomial& a) {
    VertexWeights out = inner(z, a);
    out[static_cast<int>(c)] += delta;
    return out;
  };
  return w;
}

// ------------------------------------------------------------------ system

LatticeSystem build_system(const Partition& lambda, int n, const WeightTable& table, int cols) {
  const std::vector<int> top_row = shifted_top_row(lambda, n);  // throws ShapeTooLong
  LatticeSystem s;
  s.rows = n;
  s.cols = std::max(n + lambda.largest(), cols);
  s.top.assign(s.cols, Spin::kPlus);
  for (int c : top_row) s.top[c - 1] = Spin::kMinus;
  s.bottom.assign(s.cols, Spin::kPlus);
  s.left.assign(n, Spin::kPlus);
  s.right.assign(n, Spin::kMinus);
  for (int i = 1; i <= n; ++i) s.spectral.push_back(Polynomial::z(i));
  for (int j = 1; j <= s.cols; ++j) s.shifts.push_back(Polynomial::alpha(j));
  s.table = table;
  return s;
}

Spin vertical_spin(const LatticeSystem& s, const LatticeState& st, int row, int col) {
  if (row == 1) return s.top[col - 1];
  return s.grammar.spins(st.classes[row - 2][col - 1]).s;
}

GTPattern state_pattern(const LatticeSystem& s, const LatticeState& st) {
  GTPattern g;
  for (int r = 1; r <= s.rows; ++r) {
    std::vector<int> minus;
    for (int c = s.cols; c >= 1; --c) {
      if (vertical_spin(s, st, r, c) == Spin::kMinus) minus.push_back(c);
    }
    g.rows.push_back(std::move(minus));
  }
  return g;
}

namespace {

bool is_gamma_boundary(const LatticeSystem& s) {
  auto all = [](const std::vector<Spin>& v, Spin x) {
    return std::all_of(v.begin(), v.end(), [x](Spin y) { return y == x; });
  };
  return all(s.left, Spin::kPlus) && all(s.bottom, Spin::kPlus) && all(s.right, Spin::kMinus);
}

std::vector<int> top_minus_columns(const LatticeSystem& s) {
  std::vector<int> out;
  for (int c = s.cols; c >= 1; --c) {
    if (s.top[c - 1] == Spin::kMinus) out.push_back(c);
  }
  return out;
}

// Runs fn with any exception raised inside an OpenMP region captured and
// rethrown after the region ends.
class ParallelError {
 public:
  template <class F>
  void run(F&& fn) {
    try {
      fn();
    } catch (...) {
#pragma omp critical(iceschur_parallel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

std::vector<VertexWeights> weight_grid(const LatticeSystem& s) {
  std::vector<VertexWeights> grid;
  grid.reserve(static_cast<std::size_t>(s.rows) * s.cols);
  for (int r = 1; r <= s.rows; ++r) {
    for (int c = 1; c <= s.cols; ++c) grid.push_back(s.weights_at(r, c));
  }
  return grid;
}

Polynomial weight_from_grid(const LatticeSystem& s, const std::vector<VertexWeights>& grid,
                            const LatticeState& st) {
  Polynomial w(1);
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      const Polynomial& f = weight_of(grid[static_cast<std::size_t>(r) * s.cols + c],
                                      st.classes[r][c]);
      if (f.is_zero()) return Polynomial(0);
      if (f == Polynomial(1)) continue;
      w *= f;
    }
  }
  return w;
}

}  // namespace

LatticeState state_from_pattern(const LatticeSystem& s, const GTPattern& pattern) {
  if (static_cast<int>(pattern.rows.size()) != s.rows) {
    throw Error(ErrorCode::kInvalidArgument, "pattern has wrong number of rows");
  }
  // vert[r][c]: spin above row r+1 at column label c+1; vert[rows] = bottom.
  std::vector<std::vector<Spin>> vert(s.rows + 1, std::vector<Spin>(s.cols, Spin::kPlus));
  for (int r = 0; r < s.rows; ++r) {
    for (int c : pattern.rows[r]) {
      if (c < 1 || c > s.cols) throw Error(ErrorCode::kInvalidArgument, "pattern column out of range");
      vert[r][c - 1] = Spin::kMinus;
    }
  }
  vert[s.rows] = s.bottom;
  if (vert[0] != s.top) throw Error(ErrorCode::kTopRowMismatch, "pattern top row vs boundary");

  LatticeState st;
  st.classes.assign(s.rows, std::vector<VertexClass>(s.cols, VertexClass::kA1));
  for (int r = 0; r < s.rows; ++r) {
    Spin east = s.right[r];
    for (int c = 0; c < s.cols; ++c) {
      std::optional<VertexClass> found;
      Spin west = Spin::kPlus;
      for (Spin w : {Spin::kPlus, Spin::kMinus}) {
        auto cls = s.grammar.classify({vert[r][c], vert[r + 1][c], w, east});
        if (cls) {
          if (found) throw Error(ErrorCode::kInternal, "ambiguous horizontal propagation");
          found = cls;
          west = w;
        }
      }
      if (!found) {
        throw Error(ErrorCode::kInternal,
                    "no admissible vertex while propagating pattern " + pattern.to_string());
      }
      st.classes[r][c] = *found;
      east = west;
    }
    if (east != s.left[r]) {
      throw Error(ErrorCode::kInternal, "left boundary mismatch for pattern " + pattern.to_string());
    }
  }
  return st;
}

std::vector<LatticeState> enumerate_states(const LatticeSystem& s) {
  if (!is_gamma_boundary(s)) {
    throw Error(ErrorCode::kInvalidArgument, "GT enumeration needs a Gamma boundary");
  }
  const std::vector<int> top = top_minus_columns(s);
  if (static_cast<int>(top.size()) != s.rows) return {};
  std::vector<LatticeState> out;
  for (const GTPattern& g : enumerate_strict_gt(top)) out.push_back(state_from_pattern(s, g));
  return out;
}

std::vector<LatticeState> enumerate_states_dfs(const LatticeSystem& s) {
  std::vector<LatticeState> out;
  LatticeState cur;
  cur.classes.assign(s.rows, std::vector<VertexClass>(s.cols, VertexClass::kA1));
  std::vector<Spin> above = s.top;
  std::vector<Spin> below(s.cols, Spin::kPlus);

  std::function<void(int)> do_row;
  std::function<void(int, int, Spin)> do_vertex = [&](int r, int c, Spin east) {
    if (c == s.cols) {
      if (east != s.left[r]) return;
      if (r + 1 == s.rows) {
        if (below == s.bottom) out.push_back(cur);
        return;
      }
      std::vector<Spin> saved_above = above;
      std::vector<Spin> saved_below = below;
      above = below;
      do_row(r + 1);
      above = std::move(saved_above);
      below = std::move(saved_below);
      return;
    }
    for (Spin south : {Spin::kPlus, Spin::kMinus}) {
      if (r + 1 == s.rows && south != s.bottom[c]) continue;
      for (Spin west : {Spin::kPlus, Spin::kMinus}) {
        auto cls = s.grammar.classify({above[c], south, west, east});
        if (!cls) continue;
        cur.classes[r][c] = *cls;
        below[c] = south;
        do_vertex(r, c + 1, west);
      }
    }
  };
  do_row = [&](int r) { do_vertex(r, 0, s.right[r]); };
  if (s.rows == 0) return out;
  do_row(0);
  return out;
}

bool is_admissible(const LatticeSystem& s, const LatticeState& st) {
  if (static_cast<int>(st.classes.size()) != s.rows) return false;
  for (int r = 0; r < s.rows; ++r) {
    if (static_cast<int>(st.classes[r].size()) != s.cols) return false;
    for (int c = 0; c < s.cols; ++c) {
      SpinQuad q = s.grammar.spins(st.classes[r][c]);
      Spin north = r == 0 ? s.top[c] : s.grammar.spins(st.classes[r - 1][c]).s;
      Spin south = r + 1 == s.rows ? s.bottom[c] : s.grammar.spins(st.classes[r + 1][c]).n;
      Spin east = c == 0 ? s.right[r] : s.grammar.spins(st.classes[r][c - 1]).w;
      Spin west = c + 1 == s.cols ? s.left[r] : s.grammar.spins(st.classes[r][c + 1]).e;
      if (q.n != north || q.s != south || q.e != east || q.w != west) return false;
    }
  }
  return true;
}

Polynomial state_weight(const LatticeSystem& s, const LatticeState& st) {
  return weight_from_grid(s, weight_grid(s), st);
}

Polynomial partition_function(const LatticeSystem& s, const std::vector<LatticeState>& states) {
  const std::vector<VertexWeights> grid = weight_grid(s);
  const long count = static_cast<long>(states.size());
  Polynomial total;
  ParallelError err;
#pragma omp parallel
  {
    Polynomial local;
    err.run([&] {
#pragma omp for schedule(dynamic, 1) nowait
      for (long k = 0; k < count; ++k) local += weight_from_grid(s, grid, states[k]);
    });
#pragma omp critical(iceschur_partition_sum)
    err.run([&] { total += local; });
  }
  err.rethrow();
  return total;
}

Polynomial partition_function(const LatticeSystem& s) {
  return partition_function(s, enumerate_states_dfs(s));
}

Polynomial partition_function_serial(const LatticeSystem& s) {
  const std::vector<VertexWeights> grid = weight_grid(s);
  Polynomial total;
  for (const LatticeState& st : enumerate_states_dfs(s)) total += weight_from_grid(s, grid, st);
  return total;
}

StateProfile state_profile(const LatticeState& st) {
  StateProfile p;
  const int cols = st.classes.empty() ? 0 : static_cast<int>(st.classes[0].size());
  p.per_column_a2b2c1.assign(cols, 0);
  for (const auto& row : st.classes) {
    for (int c = 0; c < cols; ++c) {
      VertexClass k = row[c];
      if (k == VertexClass::kA2 || k == VertexClass::kB1 || k == VertexClass::kC1) ++p.count_a2b1c1;
      if (k == VertexClass::kA2 || k == VertexClass::kB2 || k == VertexClass::kC1) {
        ++p.per_column_a2b2c1[c];
      }
    }
  }
  return p;
}

RowSwap attach_row_swap(const LatticeSystem& s, int i) {
  if (i < 1 || i >= s.rows) {
    throw Error(ErrorCode::kIndexOutOfRange, "row swap index " + std::to_string(i));
  }
  const Polynomial& t = s.table.t();
  const Polynomial& zi = s.spectral[i - 1];
  const Polynomial& zk = s.spectral[i];
  RowSwap out{t * zi + zk, s, t * zk + zi};
  std::swap(out.swapped.spectral[i - 1], out.swapped.spectral[i]);
  return out;
}

LatticeSystem flip_reflect(const LatticeSystem& s, const WeightTable& new_table) {
  LatticeSystem out = s;
  out.top.clear();
  out.bottom.clear();
  for (Spin x : s.bottom) out.top.push_back(flip(x));
  for (Spin x : s.top) out.bottom.push_back(flip(x));
  std::reverse(out.left.begin(), out.left.end());
  std::reverse(out.right.begin(), out.right.end());
  std::reverse(out.spectral.begin(), out.spectral.end());
  out.table = new_table;
  return out;
}

LatticeState flip_reflect(const LatticeState& st) {
  static const VertexGrammar kStandard = VertexGrammar::standard();
  LatticeState out = st;
  std::reverse(out.classes.begin(), out.classes.end());
  for (auto& row : out.classes) {
    for (auto& c : row) {
      SpinQuad q = kStandard.spins(c);
      c = *kStandard.classify({flip(q.s), flip(q.n), q.w, q.e});
    }
  }
  return out;
}

// --------------------------------------------------------------- local YBE

std::string RWiring::to_string() const {
  static constexpr std::array<const char*, 4> kEdge = {"in1", "in2", "out1", "out2"};
  std::string s = "N=" + std::string(kEdge[slot[0]]) + ",S=" + kEdge[slot[1]] +
                  ",W=" + kEdge[slot[2]] + ",E=" + kEdge[slot[3]];
  return s;
}

int YbeReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const YbeCase& c) { return c.pass(); }));
}

namespace {

Polynomial vertex_value(const VertexWeights& w, const VertexGrammar& g, SpinQuad q) {
  auto cls = g.classify(q);
  return cls ? weight_of(w, *cls) : Polynomial(0);
}

SpinQuad wire(const RWiring& wiring, const std::array<Spin, 4>& edges) {
  return {edges[wiring.slot[0]], edges[wiring.slot[1]], edges[wiring.slot[2]],
          edges[wiring.slot[3]]};
}

}  // namespace

YbeReport local_ybe_check(const VertexWeights& u, const VertexWeights& v, const VertexWeights& w,
                          YbeKind kind, RWiring wiring, const VertexGrammar& g) {
  constexpr std::array<Spin, 2> kSpins = {Spin::kPlus, Spin::kMinus};
  YbeReport report;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<Spin, 6> eps{};
    for (int k = 0; k < 6; ++k) eps[k] = (mask >> (5 - k)) & 1 ? Spin::kMinus : Spin::kPlus;
    YbeCase yc;
    yc.boundary = eps;
    for (Spin p : kSpins) {
      for (Spin q : kSpins) {
        for (Spin m : kSpins) {
          if (kind == YbeKind::kRow) {
            // eps = (left top, left bottom, column top, column bottom, right top, right bottom)
            auto [l1, l2, top, bot, r1, r2] = eps;
            yc.lhs += vertex_value(u, g, wire(wiring, {l1, l2, p, q})) *
                      vertex_value(v, g, {top, m, p, r1}) * vertex_value(w, g, {m, bot, q, r2});
            yc.rhs += vertex_value(u, g, wire(wiring, {p, q, r1, r2})) *
                      vertex_value(w, g, {top, m, l1, p}) * vertex_value(v, g, {m, bot, l2, q});
          } else {
            // eps = (top left, top right, bottom left, bottom right, left, right)
            auto [tl, tr, bl, br, lb, rb] = eps;
            const Spin h = p;
            yc.lhs += vertex_value(u, g, wire(wiring, {q, m, bl, br})) *
                      vertex_value(v, g, {tl, q, lb, h}) * vertex_value(w, g, {tr, m, h, rb});
            yc.rhs += vertex_value(u, g, wire(wiring, {tl, tr, q, m})) *
                      vertex_value(w, g, {q, bl, lb, h}) * vertex_value(v, g, {m, br, h, rb});
          }
        }
      }
    }
    report.cases.push_back(std::move(yc));
  }
  return report;
}

std::optional<RWiring> calibrate_wiring(const VertexWeights& u, const VertexWeights& v,
                                        const VertexWeights& w, YbeKind kind) {
  RWiring wiring{{0, 1, 2, 3}};
  do {
    if (local_ybe_check(u, v, w, kind, wiring).all_pass()) return wiring;
  } while (std::next_permutation(wiring.slot.begin(), wiring.slot.end()));
  return std::nullopt;
}

// -------------------------------------------------------------- rendering

std::string render_state(const LatticeSystem& s, const LatticeState& st) {
  // Physical layout: label cols on the left down to label 1 on the right.
  std::ostringstream os;
  auto vertical_line = [&](int row) {
    std::string line(1 + 5 * s.cols, ' ');
    for (int k = 0; k < s.cols; ++k) {
      int label = s.cols - k;
      Spin sp = row <= s.rows ? vertical_spin(s, st, row, label) : s.bottom[label - 1];
      line[2 + 5 * k] = spin_char(sp);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
  };
  std::string header(1 + 5 * s.cols, ' ');
  for (int k = 0; k < s.cols; ++k) {
    std::string label = std::to_string(s.cols - k);
    header.replace(2 + 5 * k, label.size(), label);
  }
  while (!header.empty() && header.back() == ' ') header.pop_back();
  os << header << '\n';
  for (int r = 1; r <= s.rows; ++r) {
    os << vertical_line(r) << '\n';
    os << spin_char(s.left[r - 1]);
    for (int k = 0; k < s.cols; ++k) {
      int label = s.cols - k;
      VertexClass c = st.classes[r - 1][label - 1];
      os << ' ' << class_name(c) << ' ' << spin_char(s.grammar.spins(c).e);
    }
    os << "   row " << r << '\n';
  }
  os << vertical_line(s.rows + 1) << '\n';
  return os.str();
}

}  // namespace iceschur
