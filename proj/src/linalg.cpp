#include "orbitpoly/linalg.hpp"

namespace orbitpoly {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& M, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
    std::size_t sel = row;
    while (sel < M.size() && M[sel][col].code == 0) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[row], M[sel]);
    const Elem inv = F.inv(M[row][col]);
    for (auto& e : M[row]) e = F.mul(e, inv);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col].code == 0) continue;
      const Elem f = M[r][col];
      for (std::size_t c = 0; c < M[r].size(); ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix M, std::size_t cols) {
  const auto pivots = rref(F, M, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(M[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Elem>> solve_linear(const Field& F, Matrix M, std::vector<Elem> rhs, std::size_t cols) {
  for (std::size_t r = 0; r < M.size(); ++r) M[r].push_back(rhs[r]);
  const auto pivots = rref(F, M, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Elem> v(cols, F.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = M[i][cols];
  return v;
}

std::size_t rank(const Field& F, Matrix M, std::size_t cols) { return rref(F, M, cols).size(); }

}  // namespace orbitpoly
