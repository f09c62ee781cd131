#include "cvxtop/gf2.hpp"

#include <bit>

namespace cvxtop {

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::size_t gf2_rank(std::vector<BitVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<const BitVector*> pivot(vectors.front().size(), nullptr);
  std::size_t rank = 0;
  for (auto& v : vectors) {
    for (std::size_t p = v.first(); p < v.size(); p = v.first()) {
      if (!pivot[p]) {
        pivot[p] = &v;
        ++rank;
        break;
      }
      v ^= *pivot[p];
    }
  }
  return rank;
}

std::optional<AffineSolution> gf2_solve(const std::vector<BitVector>& columns, std::size_t rows,
                                        const BitVector& rhs) {
  const std::size_t cols = columns.size();
  // Augmented rows: bit j < cols is A[r][j], bit cols is b[r].
  std::vector<BitVector> m(rows, BitVector(cols + 1));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t r = 0; r < rows; ++r)
      if (columns[j].test(r)) m[r].set(j);
  for (std::size_t r = 0; r < rows; ++r)
    if (rhs.test(r)) m[r].set(cols);

  std::vector<std::size_t> pivot_col;
  std::size_t top = 0;
  for (std::size_t j = 0; j < cols && top < rows; ++j) {
    std::size_t r = top;
    while (r < rows && !m[r].test(j)) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[top]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != top && m[i].test(j)) m[i] ^= m[top];
    pivot_col.push_back(j);
    ++top;
  }
  for (std::size_t r = top; r < rows; ++r)
    if (m[r].test(cols)) return std::nullopt;

  AffineSolution sol{BitVector(cols), {}};
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    is_pivot[pivot_col[i]] = 1;
    if (m[i].test(cols)) sol.particular.set(pivot_col[i]);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    BitVector k(cols);
    k.set(j);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (m[i].test(j)) k.set(pivot_col[i]);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace cvxtop
