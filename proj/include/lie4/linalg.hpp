#pragma once

#include "lie4/rational.hpp"

#include <optional>
#include <vector>

namespace lie4 {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row major

Mat identity_matrix(std::size_t n);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);

// Exact Gauss-Jordan; all of these leave the input untouched.
std::size_t rank(Mat m);
std::optional<Mat> inverse(Mat m);
std::vector<Vec> kernel_basis(Mat m);  // right kernel

// Solves m x = b exactly; nullopt when inconsistent.
std::optional<Vec> solve(Mat m, Vec b);

// Reduced row basis of the span of the given vectors (nonzero rows of the
// row echelon form).
std::vector<Vec> row_space_basis(std::vector<Vec> rows);

}  // namespace lie4
