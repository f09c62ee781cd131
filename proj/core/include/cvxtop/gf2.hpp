#pragma once

// Bit-packed linear algebra over GF(2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cvxtop {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t first() const;
  std::size_t count() const;
  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of a list of vectors of equal length.
std::size_t gf2_rank(std::vector<BitVector> vectors);

/// Solution set of A x = b as particular + span(kernel).
struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> kernel;  // ordered by free column index
};

/// `columns[j]` is column j of A (length `rows`). Returns std::nullopt if
/// the system is inconsistent.
std::optional<AffineSolution> gf2_solve(const std::vector<BitVector>& columns, std::size_t rows,
                                        const BitVector& rhs);

}  // namespace cvxtop
