// Dense linear algebra over F_{2^s}: Gaussian elimination with partial
// pivoting by first nonzero entry, no floating point. Row operations use the
// Field table helpers so large eliminations stay cache-friendly.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "agdistill/field.hpp"

namespace agd {

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<fe> a;  // row-major

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  fe& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  fe at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  fe* row(std::size_t r) { return a.data() + r * cols; }
  const fe* row(std::size_t r) const { return a.data() + r * cols; }
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // ascending
};

// In-place reduced row echelon form. If `transform` is non-null it must be
// null-initialized and receives T with (resulting M) = T * (original M);
// T is rows x rows.
RrefResult rref(const Field& F, Mat& M, Mat* transform = nullptr);

std::size_t rank(const Field& F, Mat M);

// Basis of the right null space {x : M x = 0}; one vector per row of the
// result, ordered by ascending free column (the "first kernel vector" is
// row 0: first free variable set to 1 under the fixed elimination order).
Mat kernel_basis(const Field& F, const Mat& M);

// One solution of M x = b with free variables set to 0, or nullopt when the
// system is inconsistent.
std::optional<std::vector<fe>> solve(const Field& F, Mat M,
                                     std::vector<fe> b);

std::vector<fe> mat_vec(const Field& F, const Mat& M,
                        const std::vector<fe>& x);

}  // namespace agd
