#include "contactalg/linsolve.hpp"

#include <utility>

namespace contactalg {

namespace {

// Forward elimination in place; returns the pivot columns.
std::vector<int> eliminate(std::vector<std::vector<Rational>>& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (!is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pivot)]);
    const Rational inv = 1 / m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int c = col; c < cols; ++c)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (is_zero(factor)) continue;
      for (int c = col; c < cols; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    m[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
  }
  return static_cast<int>(eliminate(m).size());
}

std::optional<std::vector<Rational>> RationalMatrix::solve_unique(
    const std::vector<Rational>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_)
    throw structural_error("right-hand side length does not match");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    auto& row = m[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(cols_) + 1);
    for (int c = 0; c < cols_; ++c)
      row[static_cast<std::size_t>(c)] = at(r, c);
    row[static_cast<std::size_t>(cols_)] = rhs[static_cast<std::size_t>(r)];
  }
  std::vector<int> pivots = eliminate(m);

  for (int col : pivots)
    if (col == cols_) return std::nullopt;  // pivot in the augmented column

  if (static_cast<int>(pivots.size()) != cols_)
    throw structural_error("linear system does not have a unique solution");

  std::vector<Rational> solution(static_cast<std::size_t>(cols_));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    solution[static_cast<std::size_t>(pivots[i])] =
        m[i][static_cast<std::size_t>(cols_)];
  return solution;
}

}  // namespace contactalg
