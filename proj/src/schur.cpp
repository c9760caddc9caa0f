#include "iceschur/schur.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>


namespace iceschur {

std::string_view method_name(SchurMethod m) {
  switch (m) {
    case SchurMethod::kDeterminant: return "determinant";
    case SchurMethod::kTableau: return "tableau";
    case SchurMethod::kLattice: return "lattice";
  }
  return "?";
}

SchurMethod parse_method(std::string_view name) {
  if (name == "determinant" || name == "det") return SchurMethod::kDeterminant;
  if (name == "tableau") return SchurMethod::kTableau;
  if (name == "lattice") return SchurMethod::kLattice;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

Polynomial shifted_power(int i, int r) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative shifted power");
  Polynomial out(1);
  const Polynomial z = Polynomial::z(i);
  for (int k = 1; k <= r; ++k) out *= z + Polynomial::alpha(k);
  return out;
}

namespace {

struct SignedPerm {
  std::vector<int> images;  // 0-based
  int sign;
};

std::vector<SignedPerm> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
    }
    out.push_back({p, inv % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<Polynomial>> alternant_matrix(const std::vector<int>& mu, int n) {
  if (static_cast<int>(mu.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "alternant needs exactly n exponents");
  }
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = shifted_power(i + 1, mu[j]);
  }
  return m;
}

Polynomial leibniz_term(const std::vector<std::vector<Polynomial>>& m, const SignedPerm& p) {
  Polynomial term(p.sign);
  for (std::size_t i = 0; i < p.images.size(); ++i) term *= m[i][p.images[i]];
  return term;
}

// Minor of rows 0..k-1 on column set `mask` (k = popcount), expanded along
// its last row. Sign of entry (k-1, j) is (-1)^(k-1 + rank of j in mask).
Polynomial expand_minor(const std::vector<std::vector<Polynomial>>& m,
                        const std::vector<Polynomial>& prev, unsigned mask, int k) {
  Polynomial out;
  int rank = 0;
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    if (!(mask & (1u << j))) continue;
    const Polynomial& minor = prev[mask & ~(1u << j)];
    if (!minor.is_zero()) {
      const Polynomial term = m[k - 1][j] * minor;
      if ((k - 1 + rank) % 2) out -= term;
      else out += term;
    }
    ++rank;
  }
  return out;
}

std::vector<std::vector<unsigned>> masks_by_size(int n) {
  std::vector<std::vector<unsigned>> out(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) out[std::popcount(mask)].push_back(mask);
  return out;
}

}  // namespace

// Laplace expansion with memoised minors: level k holds every k x k minor
// on the first k rows, and each level is built from the previous one.
Polynomial alternant(const std::vector<int>& mu, int n) {
  const auto m = alternant_matrix(mu, n);
  const auto levels = masks_by_size(n);
  std::vector<Polynomial> minors(std::size_t{1} << n);
  minors[0] = Polynomial(1);
  for (int k = 1; k <= n; ++k) {
    const std::vector<unsigned>& masks = levels[k];
    const long count = static_cast<long>(masks.size());
    std::vector<Polynomial> next(minors.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (long q = 0; q < count; ++q) {
      try {
        next[masks[q]] = expand_minor(m, minors, masks[q], k);
      } catch (...) {
#pragma omp critical(iceschur_alternant_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    minors = std::move(next);
  }
  return minors[(std::size_t{1} << n) - 1];
}

Polynomial alternant_serial(const std::vector<int>& mu, int n) {
  const auto m = alternant_matrix(mu, n);
  const auto levels = masks_by_size(n);
  std::vector<Polynomial> minors(std::size_t{1} << n);
  minors[0] = Polynomial(1);
  for (int k = 1; k <= n; ++k) {
    std::vector<Polynomial> next(minors.size());
    for (unsigned mask : levels[k]) next[mask] = expand_minor(m, minors, mask, k);
    minors = std::move(next);
  }
  return minors[(std::size_t{1} << n) - 1];
}

Polynomial alternant_leibniz(const std::vector<int>& mu, int n) {
  const auto m = alternant_matrix(mu, n);
  Polynomial total;
  for (const SignedPerm& p : all_permutations(n)) total += leibniz_term(m, p);
  return total;
}

Polynomial vandermonde(int n) {
  Polynomial out(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out *= Polynomial::z(i) - Polynomial::z(j);
  }
  return out;
}

Polynomial deformed_denominator(int n, const Polynomial& t) {
  Polynomial out(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out *= t * Polynomial::z(j) + Polynomial::z(i);
  }
  return out;
}

SchurResult schur_det(const Partition& lambda, int n) {
  std::vector<int> mu = lambda.padded(n);
  const std::vector<int> delta = Partition::delta(n).padded(n);
  for (int i = 0; i < n; ++i) mu[i] += delta[i];
  SchurResult r;
  r.method = SchurMethod::kDeterminant;
  r.lambda = lambda;
  r.n = n;
  r.value = exact_divide(alternant(mu, n), alternant(delta, n));
  r.summands = 1;
  for (int k = 2; k <= n; ++k) r.summands *= k;
  return r;
}

Polynomial tableau_weight(const Tableau& tableau) {
  const auto star = t_star(tableau);
  Polynomial w(1);
  for (std::size_t i = 0; i < tableau.rows.size(); ++i) {
    for (std::size_t j = 0; j < tableau.rows[i].size(); ++j) {
      w *= Polynomial::z(tableau.rows[i][j]) + Polynomial::alpha(star[i][j]);
    }
  }
  return w;
}

SchurResult schur_tableau(const Partition& lambda, int n) {
  const auto tableaux = enumerate_ssyt(lambda, n);
  const long count = static_cast<long>(tableaux.size());
  SchurResult r;
  r.method = SchurMethod::kTableau;
  r.lambda = lambda;
  r.n = n;
  r.summands = count;
  std::exception_ptr error;
#pragma omp parallel
  {
    Polynomial local;
    try {
#pragma omp for schedule(dynamic, 4) nowait
      for (long k = 0; k < count; ++k) local += tableau_weight(tableaux[k]);
    } catch (...) {
#pragma omp critical(iceschur_tableau_error)
      if (!error) error = std::current_exception();
    }
#pragma omp critical(iceschur_tableau_sum)
    r.value += local;
  }
  if (error) std::rethrow_exception(error);
  return r;
}

SchurResult schur_tableau_serial(const Partition& lambda, int n) {
  SchurResult r;
  r.method = SchurMethod::kTableau;
  r.lambda = lambda;
  r.n = n;
  for (const Tableau& t : enumerate_ssyt(lambda, n)) {
    r.value += tableau_weight(t);
    ++r.summands;
  }
  return r;
}

SchurResult schur_lattice(const Partition& lambda, int n, const TMode& t_mode) {
  const LatticeSystem system = build_system(lambda, n, WeightTable::gamma(t_mode));
  const auto states = enumerate_states(system);
  const Polynomial z = partition_function(system, states);
  SchurResult r;
  r.method = SchurMethod::kLattice;
  r.lambda = lambda;
  r.n = n;
  r.summands = static_cast<long>(states.size());
  r.value = exact_divide(z, deformed_denominator(n, t_value(t_mode)));
  if (r.value.degree_in(Variable::t()) != 0) {
    throw Error(ErrorCode::kInternal, "lattice quotient depends on t");
  }
  return r;
}

Polynomial schubert_top(int size) {
  Polynomial out(1);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; i + j <= size; ++j) out *= Polynomial::z(i) - Polynomial::alpha(j);
  }
  return out;
}

Polynomial double_schubert_with_word(const std::vector<int>& word, int size) {
  const std::vector<Variable> x = z_alphabet(size);
  Polynomial p = schubert_top(size);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p, x);
  return p;
}

Polynomial double_schubert(const Permutation& w, int size) {
  if (w.size() != size) throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  const Permutation u = w.inverse() * Permutation::longest(size);
  return double_schubert_with_word(reduced_word(u), size);
}

Bindings alpha_mu_bindings(const Partition& mu, int n) {
  const std::vector<int> parts = mu.padded(n);
  Bindings b;
  for (int i = 1; i <= n; ++i) {
    b.emplace(Variable::z(i), -Polynomial::alpha(parts[i - 1] + n + 1 - i));
  }
  return b;
}

Bindings negate_alphas(int count) {
  Bindings b;
  for (int j = 1; j <= count; ++j) b.emplace(Variable::alpha(j), -Polynomial::alpha(j));
  return b;
}

Polynomial swap_alphas(const Polynomial& p, int i) {
  return swap_variables(p, Variable::alpha(i), Variable::alpha(i + 1));
}

}  // namespace iceschur
