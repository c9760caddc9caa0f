#include "iceschur/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace iceschur {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "not a partition: " + to_string());
    }
  }
}

Partition Partition::delta(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return Partition(std::move(p));
}

Partition Partition::rho(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return Partition(std::move(p));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad partition part '" + item + "'");
    }
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) {
    throw Error(ErrorCode::kShapeTooLong,
                to_string() + " has more than " + std::to_string(n) + " parts");
  }
  std::vector<int> out(n, 0);
  for (int k = 0; k < n && k < static_cast<int>(parts_.size()); ++k) out[k] = parts_[k];
  return out;
}

bool Partition::contained_in(const Partition& other) const {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] > other[k]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

bool Partition::operator==(const Partition& other) const {
  std::size_t n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if ((*this)[k] != other[k]) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.largest(), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(cur.size()) == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

// ------------------------------------------------------------------ Tableau

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

bool is_semistandard(const Tableau& tableau) {
  const auto& rows = tableau.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int n) {
  if (lambda.length() > n) {
    throw Error(ErrorCode::kShapeTooLong, lambda.to_string() + " in " + std::to_string(n));
  }
  std::vector<Tableau> out;
  Tableau cur;
  for (int i = 0; i < lambda.length(); ++i) cur.rows.emplace_back(lambda[i], 0);

  // Fill boxes in reading order; each box ranges over its admissible values
  // in increasing order, which yields the lexicographic reading-word order.
  const Partition heights = conjugate(lambda);
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) boxes.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      out.push_back(cur);
      return;
    }
    auto [i, j] = boxes[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, cur.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, cur.rows[i - 1][j] + 1);
    // Column below still needs room for strictly larger entries.
    int below = heights[j] - 1 - i;
    int hi = n - below;
    for (int v = lo; v <= hi; ++v) {
      cur.rows[i][j] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> t_star(const Tableau& tableau) {
  std::vector<std::vector<int>> out = tableau.rows;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      out[i][j] = tableau.rows[i][j] + static_cast<int>(j) - static_cast<int>(i);
    }
  }
  return out;
}

// --------------------------------------------------------------- GTPattern

std::string GTPattern::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += " / ";
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k) s += " ";
      s += std::to_string(rows[r][k]);
    }
  }
  return s;
}

bool is_strict_gt(const GTPattern& pattern) {
  const auto& rows = pattern.rows;
  if (rows.empty()) return true;
  const std::size_t n = rows[0].size();
  if (rows.size() != n) return false;
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n - r) return false;
    for (std::size_t k = 0; k + 1 < rows[r].size(); ++k) {
      if (rows[r][k] <= rows[r][k + 1]) return false;
    }
    if (r == 0) continue;
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (rows[r][k] > rows[r - 1][k] || rows[r][k] < rows[r - 1][k + 1]) return false;
    }
  }
  return true;
}

std::vector<GTPattern> enumerate_strict_gt(const std::vector<int>& top) {
  for (std::size_t k = 0; k < top.size(); ++k) {
    if (top[k] <= 0 || (k > 0 && top[k] >= top[k - 1])) {
      throw Error(ErrorCode::kNotStrict, "top row must be strictly decreasing and positive");
    }
  }
  std::vector<GTPattern> out;
  if (top.empty()) {
    out.push_back(GTPattern{});
    return out;
  }
  GTPattern cur;
  cur.rows.push_back(top);
  const std::size_t n = top.size();
  std::function<void(std::size_t)> next_row;
  // Entry k of row r; rows are strict and interleave the row above.
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t r, std::size_t k) {
    if (k + 1 == cur.rows[r - 1].size()) {
      next_row(r + 1);
      return;
    }
    int lo = cur.rows[r - 1][k + 1];
    int hi = cur.rows[r - 1][k];
    if (k > 0) hi = std::min(hi, cur.rows[r][k - 1] - 1);
    for (int v = lo; v <= hi; ++v) {
      cur.rows[r].push_back(v);
      choose(r, k + 1);
      cur.rows[r].pop_back();
    }
  };
  next_row = [&](std::size_t r) {
    if (r == n) {
      out.push_back(cur);
      return;
    }
    cur.rows.emplace_back();
    choose(r, 0);
    cur.rows.pop_back();
  };
  next_row(1);
  return out;
}

std::vector<int> shifted_top_row(const Partition& lambda, int n) {
  std::vector<int> top = lambda.padded(n);
  for (int i = 0; i < n; ++i) top[i] += n - i;
  return top;
}

// --------------------------------------------------------------- Staircase

Staircase gt_to_staircase(const GTPattern& pattern, const Partition& lambda, int n) {
  const std::vector<int> top = shifted_top_row(lambda, n);
  if (pattern.rows.empty() || pattern.rows[0] != top || !is_strict_gt(pattern)) {
    throw Error(ErrorCode::kTopRowMismatch, "pattern top row is not lambda+rho");
  }
  const int span = n + lambda.largest();
  Staircase st;
  // Column c is the complement of pattern row n - c (row n is empty).
  for (int c = 0; c <= n; ++c) {
    std::set<int> used;
    if (n - c < n) used.insert(pattern.rows[n - c].begin(), pattern.rows[n - c].end());
    std::vector<int> col;
    for (int v = 1; v <= span; ++v) {
      if (!used.contains(v)) col.push_back(v);
    }
    st.columns.push_back(std::move(col));
  }
  return st;
}

GTPattern staircase_to_gt(const Staircase& staircase, const Partition& lambda, int n) {
  if (!is_valid_staircase(staircase, lambda, n)) {
    throw Error(ErrorCode::kTopRowMismatch, "not a staircase for this lambda");
  }
  const int span = n + lambda.largest();
  GTPattern g;
  g.rows.resize(n);
  for (int r = 0; r < n; ++r) {
    std::set<int> have(staircase.columns[n - r].begin(), staircase.columns[n - r].end());
    for (int v = span; v >= 1; --v) {
      if (!have.contains(v)) g.rows[r].push_back(v);
    }
  }
  return g;
}

bool is_valid_staircase(const Staircase& st, const Partition& lambda, int n) {
  const int span = n + lambda.largest();
  if (static_cast<int>(st.columns.size()) != n + 1) return false;
  for (int c = 0; c <= n; ++c) {
    const auto& col = st.columns[c];
    if (static_cast<int>(col.size()) != span - c) return false;
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (col[r] < 1 || col[r] > span) return false;
      if (r > 0 && col[r] <= col[r - 1]) return false;
    }
  }
  for (int c = 0; c < n; ++c) {
    const auto& left = st.columns[c];
    const auto& right = st.columns[c + 1];
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (left[r] > right[r]) return false;                // rows weakly increase
      if (r > 0 && right[r - 1] > left[r]) return false;   // SE diagonals weakly decrease
    }
  }
  std::vector<int> top = shifted_top_row(lambda, n);
  std::set<int> excluded(top.begin(), top.end());
  std::vector<int> expect;
  for (int v = 1; v <= span; ++v) {
    if (!excluded.contains(v)) expect.push_back(v);
  }
  return st.columns[n] == expect;
}

Tableau gt_to_tableau(const GTPattern& pattern) {
  const int n = static_cast<int>(pattern.rows.size());
  // shape[v] for v = 1..n: pattern row n - v minus rho.
  std::vector<std::vector<int>> shape(n + 1);
  for (int v = 1; v <= n; ++v) {
    const auto& row = pattern.rows[n - v];
    for (int k = 0; k < v; ++k) shape[v].push_back(row[k] - (v - k));
    for (int k = 0; k + 1 < v; ++k) {
      if (shape[v][k] < shape[v][k + 1]) {
        throw Error(ErrorCode::kInvalidArgument, "pattern is not special: " + pattern.to_string());
      }
    }
  }
  Tableau t;
  if (n == 0) return t;
  for (int r = 0; r < n; ++r) {
    int width = shape[n][r];
    if (width <= 0) break;
    std::vector<int> row(width);
    for (int c = 0; c < width; ++c) {
      int v = r + 1;
      while (c >= shape[v][r]) ++v;
      row[c] = v;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Partition hat(const Partition& lambda, int n, int m) {
  if (lambda.length() > n || lambda.largest() > m) {
    throw Error(ErrorCode::kShapeOutOfBox, lambda.to_string() + " not in the box");
  }
  std::vector<int> padded = lambda.padded(n);
  std::vector<int> out(m, 0);
  for (int i = 1; i <= m; ++i) {
    out[i - 1] = static_cast<int>(
        std::count_if(padded.begin(), padded.end(), [&](int p) { return p <= m - i; }));
  }
  return Partition(std::move(out));
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw Error(ErrorCode::kInvalidArgument, "images are not a permutation");
    }
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> im(size);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::longest(int size) {
  std::vector<int> im(size);
  for (int i = 0; i < size; ++i) im[i] = size - i;
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int i, int size) {
  if (i < 1 || i >= size) throw Error(ErrorCode::kIndexOutOfRange, "simple reflection index");
  Permutation p = identity(size);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, int size) {
  Permutation p = identity(size);
  for (int i : word) {
    if (i < 1 || i >= size) throw Error(ErrorCode::kIndexOutOfRange, "word letter");
    // p * s_i swaps positions i, i+1 of the one-line form.
    std::swap(p.images_[i - 1], p.images_[i]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) inv += images_[a] > images_[b];
  }
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < images_.size(); ++k) {
    if (images_[k] > images_[k + 1]) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kInvalidArgument, "size mismatch");
  std::vector<int> im(v.size());
  for (int i = 1; i <= v.size(); ++i) im[i - 1] = u(v(i));
  return Permutation(std::move(im));
}

Permutation grassmannian_perm(const Partition& lambda, int n, int m) {
  if (lambda.length() > n || lambda.largest() > m) {
    throw Error(ErrorCode::kShapeOutOfBox, lambda.to_string() + " not in the box");
  }
  const Partition conj = conjugate(lambda);
  std::vector<int> im(n + m);
  for (int i = 1; i <= n + m; ++i) {
    im[i - 1] = i <= n ? lambda[n - i] + i : i - conj[i - n - 1];
  }
  return Permutation(std::move(im));
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> cur = w.images();
  std::deque<int> word;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < cur.size() && cur[k] < cur[k + 1]) ++k;
    if (k + 1 >= cur.size()) break;
    std::swap(cur[k], cur[k + 1]);
    word.push_front(static_cast<int>(k) + 1);
  }
  return {word.begin(), word.end()};
}

}  // namespace iceschur
