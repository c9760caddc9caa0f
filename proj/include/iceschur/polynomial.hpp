/*
 * polynomial.hpp
 * --------------
 * Exact sparse multivariate polynomials over arbitrary-precision rationals.
 *
 * The ring has three families of variables: spectral parameters z1, z2, ...,
 * shift parameters a1, a2, ... (written alpha in the math) and a single
 * deformation parameter t. Monomials are dense exponent vectors over a fixed
 * slot layout
 *
 *     z1 .. z12 | a1 .. a19 | t
 *
 * and are ordered lexicographically in that slot order (z1 most significant).
 * A Polynomial keeps its terms in a map sorted descending by that order with
 * no zero coefficients, so structural equality is value equality.
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "iceschur/error.hpp"

namespace iceschur {

using BigRational = mpq_class;

inline constexpr int kMaxZ = 12;
inline constexpr int kMaxAlpha = 19;
inline constexpr int kSlotCount = kMaxZ + kMaxAlpha + 1;

enum class VarKind : std::uint8_t { kZ, kAlpha, kT };

class Variable {
 public:
  static Variable z(int index);
  static Variable alpha(int index);
  static Variable t() { return Variable(VarKind::kT, 0); }

  // Inverse of name(): "z3", "a12", "t".
  static Variable parse(const std::string& name);
  static Variable from_slot(int slot);

  VarKind kind() const { return kind_; }
  int index() const { return index_; }
  int slot() const;
  std::string name() const;

  auto operator<=>(const Variable& other) const { return slot() <=> other.slot(); }
  bool operator==(const Variable& other) const = default;

 private:
  Variable(VarKind kind, int index) : kind_(kind), index_(index) {}

  VarKind kind_;
  int index_;
};

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Variable v, int exponent = 1);

  int exponent(Variable v) const { return exps_[v.slot()]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  void set_exponent(Variable v, int e);
  int total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial with_swapped(Variable a, Variable b) const;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kSlotCount> exps_{};
};

struct Term {
  Monomial monomial;
  BigRational coeff;
};

// Caps the number of terms any single operation may produce. Reads of the
// cap are relaxed atomics; set it before starting parallel work.
std::size_t term_cap();
void set_term_cap(std::size_t cap);
inline constexpr std::size_t kDefaultTermCap = 1'000'000;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigRational, std::greater<Monomial>>;

  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const BigRational& value);
  static Polynomial var(Variable v);
  static Polynomial z(int i) { return var(Variable::z(i)); }
  static Polynomial alpha(int j) { return var(Variable::alpha(j)); }
  static Polynomial t() { return var(Variable::t()); }
  static Polynomial monomial(const Monomial& m, const BigRational& coeff);
  // Zero coefficients are dropped.
  static Polynomial from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational coefficient(const Monomial& m) const;
  int degree_in(Variable v) const;
  int total_degree() const;
  // Leading term under the monomial order. Requires !is_zero().
  Term leading_term() const;

  // Coefficient of v^k, as a polynomial in the remaining variables.
  Polynomial coefficient_of(Variable v, int k) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  // Adds coeff * m * other into *this without materialising the product.
  void add_scaled(const Polynomial& other, const BigRational& coeff, const Monomial& m);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  void add_term(const Monomial& m, const BigRational& c);

  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

using Bindings = std::map<Variable, Polynomial>;

// Ring homomorphism fixing every variable not present in bindings.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

// Exchanges two variables everywhere; the fast path for transpositions.
Polynomial swap_variables(const Polynomial& p, Variable a, Variable b);

// Division with remainder against a single divisor under the monomial order;
// throws kNotDivisible when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// (f - s_i f) / (x_i - x_{i+1}) where x = alphabet and i is 1-based.
Polynomial divided_difference(int i, const Polynomial& p, std::span<const Variable> alphabet);

bool is_symmetric(const Polynomial& p, std::span<const Variable> alphabet);

// Alphabet helpers.
std::vector<Variable> z_alphabet(int n);

std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

// Canonical text: "c * z1^2 * a3^1 + ..." with c written p/q.
std::string to_text(const Polynomial& p);

}  // namespace iceschur
