/*
   Copyright 2026 The maxmult Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXMULT_LINALG_HPP
#define MAXMULT_LINALG_HPP

#include <utility>
#include <vector>

#include "field.hpp"

namespace maxmult {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref(const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
      Coeff inv = f.inv(at(row, col));
      for (std::size_t c = col; c < cols_; ++c) at(row, c) = f.mul(at(row, c), inv);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || at(r, col) == 0) continue;
        Coeff factor = at(r, col);
        for (std::size_t c = col; c < cols_; ++c) at(r, c) = f.sub(at(r, c), f.mul(factor, at(row, c)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

/// Basis of the right kernel {v : M v = 0}.
inline std::vector<std::vector<Coeff>> kernel_basis(FpMatrix m, const PrimeField& f) {
  auto pivots = m.rref(f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t matrix_rank(FpMatrix m, const PrimeField& f) { return m.rref(f).size(); }

}  // namespace maxmult

#endif  // MAXMULT_LINALG_HPP
