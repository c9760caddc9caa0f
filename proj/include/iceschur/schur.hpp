#pragma once

#include <string>
#include <vector>

#include "iceschur/combinatorics.hpp"
#include "iceschur/lattice.hpp"
#include "iceschur/polynomial.hpp"

namespace iceschur {

enum class SchurMethod { kDeterminant, kTableau, kLattice };

std::string_view method_name(SchurMethod m);
SchurMethod parse_method(std::string_view name);

struct SchurResult {
  Polynomial value;
  SchurMethod method = SchurMethod::kDeterminant;
  Partition lambda;
  int n = 0;
  // Terms summed: permutations, tableaux or lattice states.
  long summands = 0;
};

// (z_i | alpha)^r = (z_i + a_1) ... (z_i + a_r).
Polynomial shifted_power(int i, int r);

// det((z_i | alpha)^{mu_j}) by Laplace expansion over column subsets; the
// minors of each size are computed in parallel.
Polynomial alternant(const std::vector<int>& mu, int n);
Polynomial alternant_serial(const std::vector<int>& mu, int n);
// Plain permutation sum, kept as an independent oracle for small n.
Polynomial alternant_leibniz(const std::vector<int>& mu, int n);

// prod_{i<j} (z_i - z_j).
Polynomial vandermonde(int n);
// prod_{i<j} (t z_j + z_i).
Polynomial deformed_denominator(int n, const Polynomial& t);

// A_{lambda+delta} / A_delta.
SchurResult schur_det(const Partition& lambda, int n);
// Sum over semistandard tableaux of prod (z_{T} + a_{T*}).
SchurResult schur_tableau(const Partition& lambda, int n);
SchurResult schur_tableau_serial(const Partition& lambda, int n);
// Z(S^Gamma_{lambda,t}) / prod_{i<j}(t z_j + z_i); t-free when t is symbolic.
SchurResult schur_lattice(const Partition& lambda, int n, const TMode& t_mode = std::nullopt);

// (z | alpha)^T for a single tableau.
Polynomial tableau_weight(const Tableau& tableau);

// x = z_1..z_N, y = a_1..a_N.
Polynomial schubert_top(int size);
// d_{w^{-1} w0} applied to prod_{i+j<=N}(x_i - y_j).
Polynomial double_schubert(const Permutation& w, int size);
// Same, with an explicit word for w^{-1} w0 (letters applied right to left).
Polynomial double_schubert_with_word(const std::vector<int>& word, int size);

// z_i -> -a_{mu_i + n + 1 - i}.
Bindings alpha_mu_bindings(const Partition& mu, int n);

// a_j -> -a_j for j = 1..count.
Bindings negate_alphas(int count);
// a_i <-> a_{i+1}.
Polynomial swap_alphas(const Polynomial& p, int i);

}  // namespace iceschur
