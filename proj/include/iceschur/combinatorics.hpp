#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iceschur/error.hpp"

namespace iceschur {

// Weakly decreasing nonnegative parts. Trailing zeros are kept as given
// (the caller's n matters separately) but ignored by ==.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition delta(int n);  // (n-1, ..., 1, 0)
  static Partition rho(int n);    // (n, ..., 2, 1)
  // "3,1" -> (3,1); "" -> empty.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const;
  int size() const;  // |lambda|
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // Part k (0-based); zero past the stored parts.
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  // Copy padded with zeros (or trimmed of zeros) to exactly n entries.
  std::vector<int> padded(int n) const;
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// All partitions with at most rows parts, each at most cols.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Semistandard tableau stored as rows of entries.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool operator==(const Tableau&) const = default;
};

bool is_semistandard(const Tableau& tableau);

// Lexicographic order of the row-reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int n);

// T*(i,j) = T(i,j) + j - i with 1-based (i,j).
std::vector<std::vector<int>> t_star(const Tableau& tableau);

// rows[0] is the top row; row k has rows[0].size() - k entries.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  bool operator==(const GTPattern&) const = default;
  std::string to_string() const;
};

bool is_strict_gt(const GTPattern& pattern);

// Lexicographic order on the concatenated rows below the top.
std::vector<GTPattern> enumerate_strict_gt(const std::vector<int>& top);

// lambda + rho, the top row of the Gamma boundary.
std::vector<int> shifted_top_row(const Partition& lambda, int n);

// columns[0] is the leftmost (tallest) column; each column lists its entries
// in increasing order, i.e. bottom to top in French notation.
struct Staircase {
  std::vector<std::vector<int>> columns;

  bool operator==(const Staircase&) const = default;
};

Staircase gt_to_staircase(const GTPattern& pattern, const Partition& lambda, int n);
GTPattern staircase_to_gt(const Staircase& staircase, const Partition& lambda, int n);
bool is_valid_staircase(const Staircase& staircase, const Partition& lambda, int n);

// GT pattern with top row lambda + rho mapped to the tableau of shape lambda
// whose entry-restricted shapes are the rows of the pattern minus rho.
// Requires the "special" condition p[i-1][k-1] > p[i][k].
Tableau gt_to_tableau(const GTPattern& pattern);

// hat_i = #{ j <= n : lambda_j <= m - i }, i = 1..m.
Partition hat(const Partition& lambda, int n, int m);

// Permutation of 1..N in one-line notation; composition is as functions,
// (u * v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation longest(int size);
  static Permutation simple(int i, int size);
  // s_{w[0]} s_{w[1]} ... as a product of simple transpositions.
  static Permutation from_word(const std::vector<int>& word, int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;  // inversion count
  std::vector<int> descents() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// w_lambda in S_{n+m}: lambda_{n+1-i} + i for i <= n, i - lambda'_{i-n} after.
Permutation grassmannian_perm(const Partition& lambda, int n, int m);

// Bubble-sort word: product of s_i in order equals w, length = inversions.
std::vector<int> reduced_word(const Permutation& w);

}  // namespace iceschur
