#include <doctest.h>

#include <algorithm>
#include <set>

#include "iceschur/lattice.hpp"
#include "iceschur/schur.hpp"

using namespace iceschur;

namespace {

constexpr Spin P = Spin::kPlus;
constexpr Spin M = Spin::kMinus;

Polynomial z(int i) { return Polynomial::z(i); }
Polynomial a(int j) { return Polynomial::alpha(j); }
Polynomial t() { return Polynomial::t(); }

using ClassGrid = std::vector<std::vector<VertexClass>>;

// Independent oracle: tries every spin assignment on the interior edges and
// keeps those where every vertex is admissible.
std::vector<ClassGrid> brute_force_states(const LatticeSystem& s) {
  const int h = s.rows * (s.cols - 1);  // horizontal interior edges
  const int v = (s.rows - 1) * s.cols;  // vertical interior edges
  std::vector<ClassGrid> out;
  for (long mask = 0; mask < (1L << (h + v)); ++mask) {
    auto bit = [&](int k) { return (mask >> k) & 1 ? M : P; };
    // horiz(r, k): edge east of column label k+1 in row r, k = 0..cols; k = 0 is the right boundary.
    auto horiz = [&](int r, int k) {
      if (k == 0) return s.right[r];
      if (k == s.cols) return s.left[r];
      return bit(r * (s.cols - 1) + (k - 1));
    };
    // vert(r, c): edge above row r (0-based) at column label c+1.
    auto vert = [&](int r, int c) {
      if (r == 0) return s.top[c];
      if (r == s.rows) return s.bottom[c];
      return bit(h + (r - 1) * s.cols + c);
    };
    ClassGrid g(s.rows, std::vector<VertexClass>(s.cols));
    bool ok = true;
    for (int r = 0; r < s.rows && ok; ++r) {
      for (int c = 0; c < s.cols && ok; ++c) {
        auto cls = classify_vertex(vert(r, c), vert(r + 1, c), horiz(r, c + 1), horiz(r, c));
        if (!cls) {
          ok = false;
        } else {
          g[r][c] = *cls;
        }
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

std::set<ClassGrid> as_set(const std::vector<LatticeState>& states) {
  std::set<ClassGrid> out;
  for (const LatticeState& st : states) out.insert(st.classes);
  return out;
}

LatticeSystem gamma_system(const Partition& lam, int n) {
  return build_system(lam, n, WeightTable::gamma(std::nullopt));
}

}  // namespace

TEST_CASE("classify_vertex") {
  CHECK(classify_vertex(P, P, P, P) == VertexClass::kA1);
  CHECK(classify_vertex(M, P, P, M) == VertexClass::kC2);
  CHECK_FALSE(classify_vertex(P, M, P, M).has_value());
  int admissible = 0;
  for (Spin n : {P, M}) {
    for (Spin s : {P, M}) {
      for (Spin w : {P, M}) {
        for (Spin e : {P, M}) admissible += classify_vertex(n, s, w, e).has_value();
      }
    }
  }
  CHECK(admissible == 6);
  for (VertexClass c : kAllClasses) CHECK(parse_class(class_name(c)) == c);
}

TEST_CASE("gamma weights") {
  CHECK(gamma_weight(1, 1, VertexClass::kB2, std::nullopt) == z(1) + a(1));
  CHECK(gamma_weight(2, 3, VertexClass::kC1, BigRational(-1)).is_zero());
  CHECK(gamma_weight(1, 2, VertexClass::kB1, BigRational(0)).is_zero());
  CHECK(gamma_weight(1, 2, VertexClass::kA2, std::nullopt) == z(1) - t() * a(2));
  CHECK(free_fermion_defect(gamma_vertex(z(1), a(1), t())).is_zero());
  CHECK(free_fermion_defect(gamma_gamma_vertex(z(1), z(2), t())).is_zero());
  CHECK(free_fermion_defect(WeightTable::gamma_inf().at(z(1), a(1))).is_zero());
  CHECK(free_fermion_defect(WeightTable::dual_top().at(z(1), a(1))).is_zero());

  const WeightTable p = WeightTable::gamma(std::nullopt).perturbed(VertexClass::kB1, Polynomial(1));
  CHECK(weight_of(p.at(z(1), a(1)), VertexClass::kB1) == t() + 1);
  CHECK(weight_of(p.at(z(1), a(1)), VertexClass::kA1) == Polynomial(1));
}

TEST_CASE("build_system") {
  const LatticeSystem big = gamma_system(Partition({5, 4, 1}), 3);
  CHECK(big.cols == 8);
  std::vector<int> minus;
  for (int c = 1; c <= big.cols; ++c) {
    if (big.top[c - 1] == M) minus.push_back(c);
  }
  CHECK(minus == std::vector<int>{2, 6, 8});

  const LatticeSystem empty = gamma_system(Partition(), 1);
  CHECK(empty.rows == 1);
  CHECK(empty.cols == 1);
  CHECK(empty.top[0] == M);

  const LatticeSystem one = gamma_system(Partition({1}), 1);
  CHECK(one.cols == 2);
  CHECK(one.top == std::vector<Spin>{P, M});
  CHECK_THROWS_AS(gamma_system(Partition({1, 1}), 1), Error);
}

TEST_CASE("enumerate_states examples") {
  CHECK(enumerate_states(gamma_system(Partition(), 2)).size() == 2);

  const LatticeSystem one = gamma_system(Partition({1}), 1);
  const auto states = enumerate_states(one);
  REQUIRE(states.size() == 1);
  CHECK(states[0].classes[0][1] == VertexClass::kC2);
  CHECK(states[0].classes[0][0] == VertexClass::kB2);

  const LatticeSystem big = gamma_system(Partition({5, 4, 1}), 3);
  const GTPattern g{{{8, 6, 2}, {7, 4}, {4}}};
  bool found = false;
  for (const LatticeState& st : enumerate_states(big)) found |= state_pattern(big, st) == g;
  CHECK(found);
  CHECK(state_pattern(big, state_from_pattern(big, g)) == g);
}

TEST_CASE("state enumerators agree with a brute-force oracle") {
  for (int n = 1; n <= 2; ++n) {
    for (const Partition& lam : partitions_in_box(n, 2)) {
      const LatticeSystem s = gamma_system(lam, n);
      const auto oracle = brute_force_states(s);
      const std::set<ClassGrid> want(oracle.begin(), oracle.end());
      CHECK(want.size() == oracle.size());
      CHECK(as_set(enumerate_states(s)) == want);
      CHECK(as_set(enumerate_states_dfs(s)) == want);

      Polynomial z_oracle;
      for (const ClassGrid& g : oracle) {
        Polynomial w(1);
        for (int r = 1; r <= s.rows; ++r) {
          for (int c = 1; c <= s.cols; ++c) w *= weight_of(s.weights_at(r, c), g[r - 1][c - 1]);
        }
        z_oracle += w;
      }
      CHECK(partition_function(s) == z_oracle);
    }
  }
}

TEST_CASE("GT and DFS enumeration agree at n = 3") {
  for (const Partition& lam : partitions_in_box(3, 3)) {
    const LatticeSystem s = gamma_system(lam, 3);
    const auto gt_states = enumerate_states(s);
    CHECK(as_set(gt_states) == as_set(enumerate_states_dfs(s)));
    CHECK(gt_states.size() == enumerate_strict_gt(shifted_top_row(lam, 3)).size());
    for (const LatticeState& st : gt_states) CHECK(is_admissible(s, st));
  }
}

TEST_CASE("partition function examples") {
  CHECK(partition_function(gamma_system(Partition(), 1)) == Polynomial(1));
  CHECK(partition_function(gamma_system(Partition({1}), 1)) == z(1) + a(1));
  CHECK(partition_function(gamma_system(Partition(), 2)) == z(1) + t() * z(2));
}

TEST_CASE("parallel and serial partition functions agree") {
  for (const Partition& lam : {Partition({2, 1}), Partition({3, 2, 1}), Partition({3, 3})}) {
    const LatticeSystem s = gamma_system(lam, 3);
    CHECK(partition_function(s) == partition_function_serial(s));
  }
}

TEST_CASE("state profiles") {
  const auto one = enumerate_states(gamma_system(Partition({1}), 1));
  const StateProfile p = state_profile(one[0]);
  CHECK(p.count_a2b1c1 == 0);
  CHECK(p.per_column_a2b2c1 == std::vector<int>{1, 0});

  const LatticeSystem e2 = gamma_system(Partition(), 2);
  for (const LatticeState& st : enumerate_states(e2)) {
    if (state_pattern(e2, st).rows[1] == std::vector<int>{2}) {
      CHECK(st.classes[0][1] == VertexClass::kB1);
      CHECK(st.classes[0][0] == VertexClass::kC2);
      CHECK(st.classes[1][1] == VertexClass::kC2);
      CHECK(st.classes[1][0] == VertexClass::kB2);
      CHECK(state_profile(st).count_a2b1c1 == 1);
    }
  }
}

TEST_CASE("t-degree of a state weight is its A2/B1/C1 count") {
  for (const Partition& lam : partitions_in_box(3, 2)) {
    const LatticeSystem s = gamma_system(lam, 3);
    for (const LatticeState& st : enumerate_states(s)) {
      CHECK(state_weight(s, st).degree_in(Variable::t()) == state_profile(st).count_a2b1c1);
    }
  }
}

TEST_CASE("row swap") {
  for (const Partition& lam : {Partition(), Partition({1}), Partition({2, 1})}) {
    const LatticeSystem s = gamma_system(lam, 2);
    const RowSwap rs = attach_row_swap(s, 1);
    CHECK(rs.swapped.spectral[0] == z(2));
    CHECK(rs.left_factor * partition_function(s) == rs.right_factor * partition_function(rs.swapped));
  }
  const LatticeSystem s = gamma_system(Partition(), 2);
  CHECK_THROWS_AS(attach_row_swap(s, 2), Error);

  LatticeSystem same = gamma_system(Partition({1}), 2);
  same.spectral[1] = same.spectral[0];
  CHECK(partition_function(same) == partition_function(attach_row_swap(same, 1).swapped));
}

TEST_CASE("flip_reflect") {
  const LatticeSystem s = gamma_system(Partition({1}), 2);
  const LatticeSystem f = flip_reflect(s, WeightTable::dual_top());
  CHECK(f.top == std::vector<Spin>(s.cols, M));
  CHECK(f.spectral[0] == z(2));
  CHECK(f.table.preset() == WeightTable::Preset::kDualTop);
  for (const LatticeState& st : enumerate_states_dfs(s)) {
    CHECK(flip_reflect(flip_reflect(st)) == st);
  }
  // The flipped states are exactly the admissible states of the flipped system.
  std::set<ClassGrid> mapped;
  for (const LatticeState& st : enumerate_states_dfs(s)) mapped.insert(flip_reflect(st).classes);
  CHECK(mapped == as_set(enumerate_states_dfs(f)));
}

TEST_CASE("YBE wiring calibration") {
  const VertexWeights u = gamma_gamma_vertex(z(1), z(2), t());
  const VertexWeights v = gamma_vertex(z(1), a(1), t());
  const VertexWeights w = gamma_vertex(z(2), a(1), t());
  const auto row = calibrate_wiring(u, v, w, YbeKind::kRow);
  REQUIRE(row.has_value());
  CHECK(*row == kRowWiring);
  CHECK(kRowWiring.to_string() == "N=in1,S=out2,W=in2,E=out1");
  const YbeReport rep = local_ybe_check(u, v, w, YbeKind::kRow);
  CHECK(rep.cases.size() == 64);
  CHECK(rep.all_pass());

  const VertexWeights uc = u_column_vertex(a(1), a(2));
  const VertexWeights vc = gamma_vertex(z(1), a(1), t());
  const VertexWeights wc = gamma_vertex(z(1), a(2), t());
  const auto col = calibrate_wiring(uc, vc, wc, YbeKind::kColumn);
  REQUIRE(col.has_value());
  CHECK(*col == kColumnWiring);
  CHECK(local_ybe_check(uc, vc, wc, YbeKind::kColumn).all_pass());

  VertexWeights bad = u;
  bad[static_cast<int>(VertexClass::kC1)] += Polynomial(1);
  CHECK_FALSE(local_ybe_check(bad, v, w, YbeKind::kRow).all_pass());
}

TEST_CASE("render") {
  const LatticeSystem one = gamma_system(Partition({1}), 1);
  CHECK(render_state(one, enumerate_states(one)[0]) ==
        "  2    1\n"
        "  -    +\n"
        "+ C2 - B2 -   row 1\n"
        "  +    +\n");
  const LatticeSystem empty = gamma_system(Partition(), 1);
  CHECK(render_state(empty, enumerate_states(empty)[0]) ==
        "  1\n"
        "  -\n"
        "+ C2 -   row 1\n"
        "  +\n");
}
