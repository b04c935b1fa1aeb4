#include "cliffsynth/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cliffsynth {

long h_sum(const BitMatrix& a) {
  long total = 0;
  for (int r = 0; r < a.rows(); ++r) total += a.row_weight(r);
  return total;
}

double h_prod(const BitMatrix& a) {
  double total = 0;
  for (int c = 0; c < a.cols(); ++c) {
    const int w = a.col_weight(c);
    if (w == 0) throw std::invalid_argument("zero column");
    total += std::log(static_cast<double>(w));
  }
  return total;
}

double H_sum_gl(const BitMatrix& a) {
  const auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("singular matrix");
  const int n = a.rows();
  return static_cast<double>(h_sum(a) + h_sum(*inv)) / (2.0 * n) - 1.0;
}

double H_prod_gl(const BitMatrix& a) {
  const auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("singular matrix");
  const int n = a.rows();
  return (h_prod(a) + h_prod(transpose(a)) + h_prod(*inv) +
          h_prod(transpose(*inv))) /
         (4.0 * n);
}

namespace {

void sort_hvec(HVector& v, HvecOrder order) {
  if (order == HvecOrder::Descending)
    std::sort(v.entries.begin(), v.entries.end(), std::greater<int>());
  else
    std::sort(v.entries.begin(), v.entries.end());
}

}  // namespace

HVector h_vector_gl(const BitMatrix& a, HvecOrder order) {
  const auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("singular matrix");
  HVector v;
  v.denom = 1;
  v.entries.reserve(4 * a.cols());
  for (const BitMatrix* m : {&a, inv.operator->()}) {
    for (int c = 0; c < m->cols(); ++c)
      v.entries.push_back(m->col_weight(c) - 1);
    for (int r = 0; r < m->rows(); ++r)
      v.entries.push_back(m->row_weight(r) - 1);  // column sums of transpose
  }
  sort_hvec(v, order);
  return v;
}

BitMatrix r12_matrix(const SpMatrix& a) {
  const RankMask rm = rank_mask(a);
  BitMatrix u(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (rm.r1.get(i, j) || rm.r2.get(i, j)) u.set(i, j, true);
  return u;
}

HVector h_vector_sp(const SpMatrix& a, HvecOrder order) {
  if (!is_symplectic(a)) throw std::invalid_argument("not symplectic");
  const int n = a.n;
  const RankMask rm = rank_mask(a);
  HVector v;
  v.denom = n;
  v.entries.reserve(2 * n);
  // Column sums of R2 + R1/n, minus one, scaled by n; then the transpose
  // side, whose column sums are the row sums of the same grid.
  for (int j = 0; j < n; ++j)
    v.entries.push_back(n * rm.r2.col_weight(j) + rm.r1.col_weight(j) - n);
  for (int i = 0; i < n; ++i)
    v.entries.push_back(n * rm.r2.row_weight(i) + rm.r1.row_weight(i) - n);
  sort_hvec(v, order);
  return v;
}

double H_sum_sp(const SpMatrix& a) {
  if (!is_symplectic(a)) throw std::invalid_argument("not symplectic");
  const BitMatrix r12 = r12_matrix(a);
  const int n = a.n;
  // h_sum is invariant under transpose, so both terms coincide.
  return static_cast<double>(2 * h_sum(r12)) / (2.0 * n) - 1.0;
}

double H_prod_sp(const SpMatrix& a) {
  if (!is_symplectic(a)) throw std::invalid_argument("not symplectic");
  const BitMatrix r12 = r12_matrix(a);
  const int n = a.n;
  return (h_prod(r12) + h_prod(transpose(r12))) / (2.0 * n);
}

}  // namespace cliffsynth
