#pragma once

#include <optional>
#include <vector>

#include "contactalg/rational.hpp"

namespace contactalg {

// Dense rational matrix with just enough exact linear algebra for the
// verification sweeps: rank and unique solving by Gaussian elimination.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw structural_error("negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  int rank() const;

  // Exact solution of A x = rhs. nullopt when inconsistent; throws
  // structural_error when the solution is not unique.
  std::optional<std::vector<Rational>> solve_unique(
      const std::vector<Rational>& rhs) const;

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw structural_error("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

}  // namespace contactalg
