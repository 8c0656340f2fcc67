#include "mgb/gf2.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "mgb/graph.hpp"

namespace mgb::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      stride_((cols + kWordBits - 1) / kWordBits),
      bits_(rows * stride_, 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), n_cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n_cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < n_cols; ++c) m.set(r, c, rows[r][c] != 0);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool BitMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

BitMatrix BitMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
  BitMatrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (get(keep[i], keep[j])) out.set(i, j, true);
    }
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  const std::size_t stride = (m.cols() + kWordBits - 1) / kWordBits;
  std::vector<Word> work;
  work.reserve(m.rows() * stride);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    work.insert(work.end(), row.begin(), row.end());
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const std::size_t word = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(work[pivot * stride + word] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < stride; ++k) {
        std::swap(work[pivot * stride + k], work[rank * stride + k]);
      }
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (work[r * stride + word] & bit) {
        for (std::size_t k = word; k < stride; ++k) work[r * stride + k] ^= work[rank * stride + k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t nullity(const BitMatrix& m) { return m.cols() - rank(m); }

BitMatrix bordered_matrix(const BitMatrix& m, const std::vector<bool>& border, bool corner) {
  if (!m.is_square() || border.size() != m.rows()) {
    throw std::invalid_argument("bordered_matrix: dimension mismatch");
  }
  const std::size_t n = m.rows();
  BitMatrix out(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m.get(r, c)) out.set(r, c, true);
    }
    if (border[r]) {
      out.set(r, n, true);
      out.set(n, r, true);
    }
  }
  out.set(n, n, corner);
  return out;
}

std::size_t masked_nullity(std::span<const Word> rows, Word keep) {
  // XOR basis indexed by leading bit.
  std::array<Word, kWordBits> basis{};
  std::size_t kept = 0;
  std::size_t rank = 0;
  for (Word todo = keep; todo != 0; todo &= todo - 1) {
    const int i = std::countr_zero(todo);
    ++kept;
    Word r = rows[static_cast<std::size_t>(i)] & keep;
    while (r != 0) {
      const int lead = 63 - std::countl_zero(r);
      if (basis[static_cast<std::size_t>(lead)] == 0) {
        basis[static_cast<std::size_t>(lead)] = r;
        ++rank;
        break;
      }
      r ^= basis[static_cast<std::size_t>(lead)];
    }
  }
  return kept - rank;
}

BitMatrix adjacency_matrix(const MarkedGraph& g) {
  BitMatrix m = g.adjacency();
  for (std::size_t i = 0; i < g.size(); ++i) m.set(i, i, g.vertex(i).looped);
  return m;
}

std::vector<std::size_t> restricted_indices(const MarkedGraph& g, const std::vector<bool>& subset) {
  if (subset.size() != g.size()) throw std::invalid_argument("subset size mismatch");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool diagonal = g.vertex(i).looped != subset[i];
    if (!(g.vertex(i).marked && !diagonal)) keep.push_back(i);
  }
  return keep;
}

BitMatrix restricted_matrix(const MarkedGraph& g, const std::vector<bool>& subset) {
  const auto keep = restricted_indices(g, subset);
  BitMatrix m = adjacency_matrix(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (subset[i]) m.flip(i, i);
  }
  return m.principal_submatrix(keep);
}

}  // namespace mgb::gf2
