/*
 * lattice.hpp
 * -----------
 * Free-fermionic six-vertex model on a rectangular grid.
 *
 * Rows are numbered 1..n top to bottom and carry a spectral parameter.
 * Columns are numbered 1..cols from RIGHT to LEFT and carry a shift
 * parameter; every vector indexed by column in this module uses that label
 * (element 0 is the rightmost column).
 *
 * A vertex sees four edge spins (N, S, W, E). The admissible quadruples are
 * fixed by a VertexGrammar; the standard grammar is
 *
 *     A1 = (+,+,+,+)   A2 = (-,-,-,-)   B1 = (-,-,+,+)
 *     B2 = (+,+,-,-)   C1 = (+,-,-,+)   C2 = (-,+,+,-)
 *
 * so minus spins enter through N/W and leave through S/E.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iceschur/combinatorics.hpp"
#include "iceschur/polynomial.hpp"

namespace iceschur {

enum class Spin : std::int8_t { kPlus, kMinus };

inline Spin flip(Spin s) { return s == Spin::kPlus ? Spin::kMinus : Spin::kPlus; }
char spin_char(Spin s);

enum class VertexClass : std::uint8_t { kA1, kA2, kB1, kB2, kC1, kC2 };
inline constexpr std::array<VertexClass, 6> kAllClasses = {
    VertexClass::kA1, VertexClass::kA2, VertexClass::kB1,
    VertexClass::kB2, VertexClass::kC1, VertexClass::kC2};

std::string_view class_name(VertexClass c);
VertexClass parse_class(std::string_view name);

struct SpinQuad {
  Spin n, s, w, e;
  bool operator==(const SpinQuad&) const = default;
};

class VertexGrammar {
 public:
  static VertexGrammar standard();
  // Arbitrary relabelling, used for negative controls.
  explicit VertexGrammar(std::array<SpinQuad, 6> quads) : quads_(quads) {}

  std::optional<VertexClass> classify(SpinQuad q) const;
  SpinQuad spins(VertexClass c) const { return quads_[static_cast<int>(c)]; }
  bool operator==(const VertexGrammar&) const = default;

 private:
  std::array<SpinQuad, 6> quads_;
};

// Classifies against the standard grammar; nullopt means inadmissible.
std::optional<VertexClass> classify_vertex(Spin n, Spin s, Spin w, Spin e);

// Boltzmann weights (a1, a2, b1, b2, c1, c2) of one vertex.
using VertexWeights = std::array<Polynomial, 6>;

inline const Polynomial& weight_of(const VertexWeights& w, VertexClass c) {
  return w[static_cast<int>(c)];
}

// (1, z - t a, t, z + a, z (t+1), 1)
VertexWeights gamma_vertex(const Polynomial& z, const Polynomial& a, const Polynomial& t);
// (t zi + zk, t zk + zi, t (zk - zi), zi - zk, (t+1) zi, (t+1) zk)
VertexWeights gamma_gamma_vertex(const Polynomial& zi, const Polynomial& zk, const Polynomial& t);
// Column-crossing vertex (1, 1, beta - alpha, 0, 1, 1).
VertexWeights u_column_vertex(const Polynomial& alpha, const Polynomial& beta);
// a1 a2 + b1 b2 - c1 c2.
Polynomial free_fermion_defect(const VertexWeights& w);

// nullopt = symbolic t.
using TMode = std::optional<BigRational>;
Polynomial t_value(const TMode& mode);

// Gamma weight of class c at row i, column j with z_i, alpha_j.
Polynomial gamma_weight(int i, int j, VertexClass c, const TMode& t_mode);

// Weight function of a grid vertex in terms of its row's spectral parameter
// and its column's shift parameter.
class WeightTable {
 public:
  enum class Preset { kGamma, kGammaInf, kDualTop, kCustom };

  static WeightTable gamma(const TMode& t_mode);
  // Leading t-coefficients of gamma: (1, -a, 1, z + a, z, 1).
  static WeightTable gamma_inf();
  // (1, y + a, 1, y - a, 2y, 1).
  static WeightTable dual_top();
  static WeightTable custom(std::string name,
                            std::function<VertexWeights(const Polynomial&, const Polynomial&)> fn);

  Preset preset() const { return preset_; }
  const std::string& name() const { return name_; }
  // Deformation parameter of a gamma table (zero for the others).
  const Polynomial& t() const { return t_; }

  VertexWeights at(const Polynomial& spectral, const Polynomial& shift) const;

  // Same table with delta added to one class weight.
  WeightTable perturbed(VertexClass c, const Polynomial& delta) const;

 private:
  Preset preset_ = Preset::kCustom;
  std::string name_;
  Polynomial t_;
  std::function<VertexWeights(const Polynomial&, const Polynomial&)> fn_;
};

struct LatticeSystem {
  int rows = 0;
  int cols = 0;
  std::vector<Spin> top, bottom;  // by column label
  std::vector<Spin> left, right;  // by row
  std::vector<Polynomial> spectral;  // by row
  std::vector<Polynomial> shifts;    // by column label
  WeightTable table = WeightTable::gamma(std::nullopt);
  VertexGrammar grammar = VertexGrammar::standard();

  VertexWeights weights_at(int row, int col) const {
    return table.at(spectral[row - 1], shifts[col - 1]);
  }
};

// n rows, max(n + lambda_1, cols) columns; minus on top exactly at lambda+rho.
LatticeSystem build_system(const Partition& lambda, int n, const WeightTable& table, int cols = 0);

struct LatticeState {
  // classes[row-1][col-1], col by label.
  std::vector<std::vector<VertexClass>> classes;

  bool operator==(const LatticeState&) const = default;
};

// Spin on the vertical edge above (row, col); row = rows + 1 is the bottom.
Spin vertical_spin(const LatticeSystem& s, const LatticeState& st, int row, int col);
// Minus positions on each vertical layer, as a GT-style triangular array.
GTPattern state_pattern(const LatticeSystem& s, const LatticeState& st);

// Gamma boundary: states via the bijection with strict GT patterns.
std::vector<LatticeState> enumerate_states(const LatticeSystem& s);
// Any boundary: depth-first search over admissible vertex choices.
std::vector<LatticeState> enumerate_states_dfs(const LatticeSystem& s);
// Inverse of state_pattern for Gamma boundaries.
LatticeState state_from_pattern(const LatticeSystem& s, const GTPattern& pattern);

bool is_admissible(const LatticeSystem& s, const LatticeState& st);
Polynomial state_weight(const LatticeSystem& s, const LatticeState& st);

// OpenMP sum of state weights.
Polynomial partition_function(const LatticeSystem& s);
Polynomial partition_function(const LatticeSystem& s, const std::vector<LatticeState>& states);
// Single-threaded reference.
Polynomial partition_function_serial(const LatticeSystem& s);

struct StateProfile {
  int count_a2b1c1 = 0;
  std::vector<int> per_column_a2b2c1;  // by column label
};
StateProfile state_profile(const LatticeState& st);

struct RowSwap {
  Polynomial left_factor;
  LatticeSystem swapped;
  Polynomial right_factor;
};
// (t z_i + z_{i+1}) Z(s) = (t z_{i+1} + z_i) Z(swapped).
RowSwap attach_row_swap(const LatticeSystem& s, int i);

// Flip every vertical spin, then reflect top to bottom.
LatticeSystem flip_reflect(const LatticeSystem& s, const WeightTable& new_table);
LatticeState flip_reflect(const LatticeState& st);

// ---------------------------------------------------------- local YBE

enum class YbeKind {
  // R vertex crosses two horizontal strands; v sits on the top row.
  kRow,
  // R vertex crosses two vertical strands below/above a row (left = v).
  kColumn,
};

// R vertex (N, S, W, E) <- edge positions {in_first, in_second, out_first,
// out_second}; "in" faces the top/left of the figure.
struct RWiring {
  std::array<int, 4> slot{};
  bool operator==(const RWiring&) const = default;
  std::string to_string() const;
};

inline constexpr RWiring kRowWiring{{0, 3, 1, 2}};
inline constexpr RWiring kColumnWiring{{0, 3, 1, 2}};

struct YbeCase {
  std::array<Spin, 6> boundary{};
  Polynomial lhs;
  Polynomial rhs;
  bool pass() const { return lhs == rhs; }
};

struct YbeReport {
  std::vector<YbeCase> cases;
  int passed() const;
  bool all_pass() const { return passed() == static_cast<int>(cases.size()); }
};

YbeReport local_ybe_check(const VertexWeights& u, const VertexWeights& v, const VertexWeights& w,
                          YbeKind kind, RWiring wiring = kRowWiring,
                          const VertexGrammar& grammar = VertexGrammar::standard());

// First wiring (lexicographic over the 24 slot permutations) passing all 64
// boundary cases.
std::optional<RWiring> calibrate_wiring(const VertexWeights& u, const VertexWeights& v,
                                        const VertexWeights& w, YbeKind kind);

std::string render_state(const LatticeSystem& s, const LatticeState& st);

}  // namespace iceschur
