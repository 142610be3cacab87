#include "antiunify/matching.hpp"

#include <limits>
#include <stdexcept>

namespace antiunify {

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  cells_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged weight matrix");
    cells_.insert(cells_.end(), r.begin(), r.end());
  }
}

long long matching_weight(const WeightMatrix& m, const Matching& matching) {
  long long total = 0;
  for (const auto& [r, c] : matching) total += m.at(r, c);
  return total;
}

namespace {

/// Square min-cost assignment over the augmented graph: real block
/// (rows x cols), one private "unmatched" column per row, one private
/// "unmatched" row per column, and a zero dummy block.
class Assignment {
 public:
  explicit Assignment(const WeightMatrix& m)
      : m_(m), r_(m.rows()), c_(m.cols()), n_(r_ + c_) {
    long long total = 1;
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) total += m.at(i, j) > 0 ? m.at(i, j) : 0;
    }
    forbidden_ = total;
  }

  long long cost(std::size_t i, std::size_t j) const {
    if (i < r_ && j < c_) return m_.at(i, j) >= 0 ? -m_.at(i, j) : forbidden_;
    if (i < r_) return j - c_ == i ? 0 : forbidden_;
    if (j < c_) return i - r_ == j ? 0 : forbidden_;
    return 0;
  }

  /// Hungarian method with potentials (rows u, columns v), 1-based inside.
  void solve() {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    u_.assign(n_ + 1, 0);
    v_.assign(n_ + 1, 0);
    std::vector<std::size_t> p(n_ + 1, 0), way(n_ + 1, 0);
    for (std::size_t i = 1; i <= n_; ++i) {
      p[0] = i;
      std::size_t j0 = 0;
      std::vector<long long> minv(n_ + 1, inf);
      std::vector<bool> used(n_ + 1, false);
      do {
        used[j0] = true;
        const std::size_t i0 = p[j0];
        long long delta = inf;
        std::size_t j1 = 0;
        for (std::size_t j = 1; j <= n_; ++j) {
          if (used[j]) continue;
          const long long cur = cost(i0 - 1, j - 1) - u_[i0] - v_[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
        for (std::size_t j = 0; j <= n_; ++j) {
          if (used[j]) {
            u_[p[j]] += delta;
            v_[j] -= delta;
          } else {
            minv[j] -= delta;
          }
        }
        j0 = j1;
      } while (p[j0] != 0);
      do {
        const std::size_t j1 = way[j0];
        p[j0] = p[j1];
        j0 = j1;
      } while (j0 != 0);
    }
    row_to_col_.assign(n_, 0);
    col_to_row_.assign(n_, 0);
    for (std::size_t j = 1; j <= n_; ++j) {
      row_to_col_[p[j] - 1] = j - 1;
      col_to_row_[j - 1] = p[j] - 1;
    }
    tight_.assign(n_, {});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (cost(i, j) != forbidden_ && u_[i + 1] + v_[j + 1] == cost(i, j)) {
          tight_[i].push_back(j);
        }
      }
    }
  }

  /// Every optimal assignment is a perfect matching of the tight graph, and
  /// vice versa, so the tie-break only moves along tight edges.
  Matching lexicographic() {
    std::vector<bool> fixed(n_, false);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t x : preferences(i)) {
        if (col_to_row_[x] < n_ && fixed[col_to_row_[x]]) continue;
        if (row_to_col_[i] == x || reroute(i, x, fixed)) break;
      }
      fixed[i] = true;
    }
    Matching out;
    for (std::size_t i = 0; i < r_; ++i) {
      if (row_to_col_[i] < c_) out.emplace_back(i, row_to_col_[i]);
    }
    return out;
  }

 private:
  std::vector<std::size_t> preferences(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j : tight_[i]) {
      if (j < c_) out.push_back(j);
    }
    out.push_back(c_ + i);
    return out;
  }

  bool reroute(std::size_t i, std::size_t x, const std::vector<bool>& fixed) {
    const std::size_t old_col = row_to_col_[i];
    const std::size_t displaced = col_to_row_[x];
    row_to_col_[i] = x;
    col_to_row_[x] = i;
    col_to_row_[old_col] = n_;
    std::vector<bool> visited(n_, false);
    visited[x] = true;
    if (augment(displaced, i, fixed, visited)) return true;
    row_to_col_[i] = old_col;
    col_to_row_[old_col] = i;
    col_to_row_[x] = displaced;
    row_to_col_[displaced] = x;
    return false;
  }

  bool augment(std::size_t row, std::size_t current, const std::vector<bool>& fixed,
               std::vector<bool>& visited) {
    for (std::size_t z : tight_[row]) {
      if (visited[z]) continue;
      visited[z] = true;
      const std::size_t owner = col_to_row_[z];
      if (owner == n_ ||
          (owner != current && !fixed[owner] && augment(owner, current, fixed, visited))) {
        row_to_col_[row] = z;
        col_to_row_[z] = row;
        return true;
      }
    }
    return false;
  }

  const WeightMatrix& m_;
  std::size_t r_;
  std::size_t c_;
  std::size_t n_;
  long long forbidden_ = 0;
  std::vector<long long> u_;
  std::vector<long long> v_;
  std::vector<std::size_t> row_to_col_;
  std::vector<std::size_t> col_to_row_;
  std::vector<std::vector<std::size_t>> tight_;
};

}  // namespace

Matching max_weight_matching(const WeightMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Assignment a(m);
  a.solve();
  return a.lexicographic();
}

}  // namespace antiunify
