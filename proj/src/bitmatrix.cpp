#include "cliffsynth/bitmatrix.hpp"

#include <bit>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "cliffsynth/prng.hpp"

namespace cliffsynth {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  wpr_ = (cols + 63) / 64;
  words_.assign(static_cast<size_t>(rows) * wpr_, 0);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

int BitMatrix::row_weight(int r) const {
  const uint64_t* p = row(r);
  int w = 0;
  for (int i = 0; i < wpr_; ++i) w += std::popcount(p[i]);
  return w;
}

int BitMatrix::col_weight(int c) const {
  int w = 0;
  for (int r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

bool BitMatrix::row_is_zero(int r) const {
  const uint64_t* p = row(r);
  for (int i = 0; i < wpr_; ++i)
    if (p[i]) return false;
  return true;
}

bool BitMatrix::rows_intersect(int r1, int r2) const {
  const uint64_t* a = row(r1);
  const uint64_t* b = row(r2);
  for (int i = 0; i < wpr_; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

void BitMatrix::swap_rows(int r1, int r2) {
  if (r1 == r2) return;
  uint64_t* a = row(r1);
  uint64_t* b = row(r2);
  for (int i = 0; i < wpr_; ++i) std::swap(a[i], b[i]);
}

std::string BitMatrix::key() const {
  std::string k;
  k.resize(words_.size() * sizeof(uint64_t));
  std::memcpy(k.data(), words_.data(), k.size());
  return k;
}

std::pair<uint64_t, uint64_t> BitMatrix::packed_key() const {
  uint64_t lo = 0, hi = 0;
  int pos = 0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c, ++pos) {
      if (!get(r, c)) continue;
      if (pos < 64)
        lo |= uint64_t{1} << pos;
      else
        hi |= uint64_t{1} << (pos - 64);
    }
  return {lo, hi};
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  BitMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    uint64_t* crow = c.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* brow = b.row(k);
      for (int w = 0; w < b.words_per_row(); ++w) crow[w] ^= brow[w];
    }
  }
  return c;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) t.set(c, r, true);
  return t;
}

std::optional<BitMatrix> inverse(const BitMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  BitMatrix work = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    work.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    for (int r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.xor_rows(r, col);
        inv.xor_rows(r, col);
      }
    }
  }
  return inv;
}

std::vector<int> col_sums(const BitMatrix& a) {
  std::vector<int> s(a.cols());
  for (int c = 0; c < a.cols(); ++c) s[c] = a.col_weight(c) - 1;
  return s;
}

BitMatrix apply_cnot(const BitMatrix& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= a.cols() || j >= a.cols())
    throw std::invalid_argument("bad cnot indices");
  BitMatrix r = a;
  r.xor_cols(j, i);
  return r;
}

bool is_permutation(const BitMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    if (a.row_weight(r) != 1) return false;
  for (int c = 0; c < a.cols(); ++c)
    if (a.col_weight(c) != 1) return false;
  return true;
}

BitMatrix random_gl(int n, uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  Prng rng(seed);
  for (;;) {
    BitMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
      uint64_t* p = m.row(r);
      for (int w = 0; w < m.words_per_row(); ++w) p[w] = rng.next_u64();
      const int tail = n & 63;
      if (tail) p[m.words_per_row() - 1] &= (uint64_t{1} << tail) - 1;
    }
    if (inverse(m)) return m;
  }
}

std::string to_text(const BitMatrix& a) {
  std::ostringstream out;
  out << a.rows();
  if (a.rows() != a.cols()) out << ' ' << a.cols();
  out << '\n';
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out << (a.get(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

std::optional<BitMatrix> parse_matrix(const std::string& text,
                                      std::string* err) {
  auto fail = [&](const std::string& m) -> std::optional<BitMatrix> {
    if (err) *err = m;
    return std::nullopt;
  };
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) return fail("empty input");
  std::istringstream hs(header);
  long rows = 0, cols = 0;
  if (!(hs >> rows)) return fail("bad header: " + header);
  if (!(hs >> cols)) cols = rows;
  std::string extra;
  if (hs >> extra) return fail("trailing tokens in header");
  if (rows <= 0 || cols <= 0 || rows > 4096 || cols > 4096)
    return fail("bad dimensions");
  BitMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  std::string line;
  for (long r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) return fail("missing matrix row");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (static_cast<long>(line.size()) != cols)
      return fail("row length mismatch");
    for (long c = 0; c < cols; ++c) {
      if (line[c] == '1')
        m.set(static_cast<int>(r), static_cast<int>(c), true);
      else if (line[c] != '0')
        return fail("matrix entries must be 0 or 1");
    }
  }
  while (std::getline(in, line)) {
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        return fail("trailing content after matrix");
  }
  return m;
}

}  // namespace cliffsynth
