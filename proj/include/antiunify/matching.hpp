#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace antiunify {

/// Dense integer weight matrix; rows index the left goal, columns the right.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, long long fill = -1)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
  WeightMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long long& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  long long at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> cells_;
};

/// (row, column) pairs in increasing row order.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// Maximum-weight matching where any vertex may stay unmatched and negative
/// edges are never used.
///
/// Among all optimal matchings the result is the lexicographically smallest
/// row-indexed assignment, reading "unmatched" as larger than every column:
/// row 0 takes the smallest column it can take in some optimum, then row 1,
/// and so on.
///
/// Cost: one Hungarian solve of size rows + cols, O((r + c)^3), followed by
/// the tie-break pass, one alternating-path search per (row, candidate column)
/// over tight edges, O(r * c * E) in the worst case and typically far less.
Matching max_weight_matching(const WeightMatrix& m);

long long matching_weight(const WeightMatrix& m, const Matching& matching);

}  // namespace antiunify
