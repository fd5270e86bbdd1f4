#include "lie4/linalg.hpp"

#include <stdexcept>

namespace lie4 {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational d = m[r][c];
    for (auto& x : m[r]) x /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat out(n, Vec(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < k; ++m) {
      if (a[i][m] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][m] * b[m][j];
    }
  }
  return out;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::optional<Mat> inverse(Mat m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec id(n, Rational(0));
    id[i] = 1;
    m[i].insert(m[i].end(), id.begin(), id.end());
  }
  auto pivots = rref(m);
  if (pivots.size() != n) return std::nullopt;
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  }
  return out;
}

std::vector<Vec> kernel_basis(Mat m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  // Inconsistent when a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

std::vector<Vec> row_space_basis(std::vector<Vec> rows) {
  rref(rows);
  std::vector<Vec> basis;
  for (auto& row : rows) {
    bool nonzero = false;
    for (const auto& x : row) {
      if (x != 0) { nonzero = true; break; }
    }
    if (nonzero) basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace lie4
