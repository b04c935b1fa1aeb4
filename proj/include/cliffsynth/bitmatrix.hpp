#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliffsynth {

// Dense matrix over GF(2) with bit-packed rows (row-major, 64-bit words).
// Bits at column positions >= cols() in the trailing word of each row are
// kept zero, so rows compare and hash directly as word sequences.
//
// Free functions return fresh matrices; the in-place mutators exist for the
// search inner loops, where gates are involutions and apply/undo beats copy.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const {
    return (words_[static_cast<size_t>(r) * wpr_ + (c >> 6)] >>
            (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = words_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
    const uint64_t bit = uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(int r, int c) {
    words_[static_cast<size_t>(r) * wpr_ + (c >> 6)] ^= uint64_t{1}
                                                        << (c & 63);
  }

  const uint64_t* row(int r) const {
    return words_.data() + static_cast<size_t>(r) * wpr_;
  }
  uint64_t* row(int r) { return words_.data() + static_cast<size_t>(r) * wpr_; }

  // row dst ^= row src
  void xor_rows(int dst, int src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }
  // col dst ^= col src
  void xor_cols(int dst, int src) {
    const int sw = src >> 6, dw = dst >> 6;
    const int sb = src & 63, db = dst & 63;
    for (int r = 0; r < rows_; ++r) {
      uint64_t* p = row(r);
      p[dw] ^= ((p[sw] >> sb) & 1u) << db;
    }
  }

  int row_weight(int r) const;
  int col_weight(int c) const;
  bool row_is_zero(int r) const;
  bool rows_intersect(int r1, int r2) const;
  void swap_rows(int r1, int r2);

  // Raw bytes for hashing/dedup. Matrices of equal shape have equal keys
  // exactly when they are equal.
  std::string key() const;
  // Shape-aware packing: when rows*cols <= 128 the matrix fits two words.
  bool fits_two_words() const { return rows_ * cols_ <= 128; }
  std::pair<uint64_t, uint64_t> packed_key() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  int wpr_ = 0;  // words per row
  std::vector<uint64_t> words_;
};

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);

// Gauss-Jordan; nullopt when the matrix is singular (or not square).
std::optional<BitMatrix> inverse(const BitMatrix& a);

// Per-column popcount minus one; the all-zero vector characterises
// permutation matrices among invertible ones.
std::vector<int> col_sums(const BitMatrix& a);

// Column update col_j ^= col_i, i.e. right-multiplication by the elementary
// matrix with an extra one at (i, j); the parity-map action of CNOT with
// control i and target j.
BitMatrix apply_cnot(const BitMatrix& a, int i, int j);

bool is_permutation(const BitMatrix& a);

// Uniform invertible n x n matrix by rejection sampling (the invertible
// fraction over GF(2) is > 1/4 for every n, so expected retries are small).
BitMatrix random_gl(int n, uint64_t seed);

// Text format: header "rows [cols]" (cols may be omitted when square),
// then one line of '0'/'1' per row.
std::string to_text(const BitMatrix& a);
std::optional<BitMatrix> parse_matrix(const std::string& text,
                                      std::string* err = nullptr);

}  // namespace cliffsynth
