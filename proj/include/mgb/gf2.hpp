#pragma once

// Dense matrices over GF(2) with word-packed rows, and the nullity
// computation behind every bracket term.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mgb {
class MarkedGraph;
}

namespace mgb::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Rows given as 0/1 entries; all rows must have equal length.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    Word& w = bits_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    bits_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * stride_, stride_};
  }

  /// Principal submatrix on the given (ascending or not) index list.
  BitMatrix principal_submatrix(std::span<const std::size_t> keep) const;

  std::string to_string() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

std::size_t rank(const BitMatrix& m);

/// cols - rank. The 0x0 matrix has nullity 0.
std::size_t nullity(const BitMatrix& m);

/// (n+1)x(n+1) matrix with `m` top-left, `border` as the last row and column
/// and `corner` bottom-right. Throws std::invalid_argument on size mismatch.
BitMatrix bordered_matrix(const BitMatrix& m, const std::vector<bool>& border, bool corner);

/// Nullity of the principal submatrix selected by `keep` of a matrix with at
/// most 64 columns, given as one word per row. Rows outside `keep` are ignored
/// and columns outside `keep` are masked off.
std::size_t masked_nullity(std::span<const Word> rows, Word keep);

/// Boolean adjacency matrix: diagonal = loop flags, off-diagonal = edges.
BitMatrix adjacency_matrix(const MarkedGraph& g);

/// Toggle the diagonal on `subset`, then drop every marked vertex whose
/// diagonal entry became 0. `subset` is a membership vector of size |V(g)|.
BitMatrix restricted_matrix(const MarkedGraph& g, const std::vector<bool>& subset);

/// Indices kept by restricted_matrix, in ascending order.
std::vector<std::size_t> restricted_indices(const MarkedGraph& g, const std::vector<bool>& subset);

}  // namespace mgb::gf2
