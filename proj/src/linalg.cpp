#include "agdistill/linalg.hpp"

#include <stdexcept>

namespace agd {

RrefResult rref(const Field& F, Mat& M, Mat* transform) {
  RrefResult res;
  if (transform) {
    *transform = Mat(M.rows, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i) transform->at(i, i) = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
    std::size_t piv = r;
    while (piv < M.rows && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
      if (transform) {
        for (std::size_t j = 0; j < M.rows; ++j) {
          std::swap(transform->at(r, j), transform->at(piv, j));
        }
      }
    }
    const fe scale = F.inv(M.at(r, c));
    if (scale != 1) {
      for (std::size_t j = 0; j < M.cols; ++j) {
        M.at(r, j) = F.mul(M.at(r, j), scale);
      }
      if (transform) {
        for (std::size_t j = 0; j < M.rows; ++j) {
          transform->at(r, j) = F.mul(transform->at(r, j), scale);
        }
      }
    }
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      const fe f = M.at(i, c);
      if (f == 0) continue;
      F.axpy(M.row(i), M.row(r), M.cols, f);
      if (transform) F.axpy(transform->row(i), transform->row(r), M.rows, f);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Field& F, Mat M) { return rref(F, M).rank; }

Mat kernel_basis(const Field& F, const Mat& M) {
  Mat R = M;
  const RrefResult rr = rref(F, R);
  std::vector<bool> is_pivot(M.cols, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;

  Mat K(M.cols - rr.rank, M.cols);
  std::size_t kr = 0;
  for (std::size_t fc = 0; fc < M.cols; ++fc) {
    if (is_pivot[fc]) continue;
    K.at(kr, fc) = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      K.at(kr, rr.pivot_cols[i]) = R.at(i, fc);  // char 2: -x = x
    }
    ++kr;
  }
  return K;
}

std::optional<std::vector<fe>> solve(const Field& F, Mat M,
                                     std::vector<fe> b) {
  if (b.size() != M.rows) throw std::invalid_argument("solve: size mismatch");
  Mat A(M.rows, M.cols + 1);
  for (std::size_t i = 0; i < M.rows; ++i) {
    for (std::size_t j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols) = b[i];
  }
  const RrefResult rr = rref(F, A);
  std::vector<fe> x(M.cols, 0);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivot_cols[i] == M.cols) return std::nullopt;  // 0 = nonzero
    x[rr.pivot_cols[i]] = A.at(i, M.cols);
  }
  return x;
}

std::vector<fe> mat_vec(const Field& F, const Mat& M,
                        const std::vector<fe>& x) {
  if (x.size() != M.cols) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<fe> y(M.rows, 0);
  for (std::size_t i = 0; i < M.rows; ++i) {
    const fe* row = M.row(i);
    fe acc = 0;
    for (std::size_t j = 0; j < M.cols; ++j) {
      if (row[j] && x[j]) acc ^= F.mul(row[j], x[j]);
    }
    y[i] = acc;
  }
  return y;
}

}  // namespace agd
