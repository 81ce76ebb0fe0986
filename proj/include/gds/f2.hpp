#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gds::f2 {

/// Dense bit vector over F2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  bool any() const;
  /// Index of the lowest set bit, or size() when none is set.
  std::size_t lowest() const;
  /// Lowest set bit at position >= from, or size().
  std::size_t next_set(std::size_t from) const;
  std::size_t count() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVector& o) const;
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental column echelon form of a matrix with `rows` rows.
///
/// Columns are reduced by lowest-set-bit pivots as they are added. With
/// combination tracking on, every basis vector remembers which input columns
/// it is a sum of, which is what solve() needs to return preimages.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(std::size_t rows, bool track_combinations = true);

  /// Appends a column; returns true when it increased the rank.
  bool add_column(const BitVector& column);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return basis_.size(); }

  /// x (over the added columns) with A x = rhs, or nullopt if rhs is not in
  /// the column space. Requires combination tracking.
  std::optional<BitVector> solve(const BitVector& rhs) const;

  bool in_span(const BitVector& rhs) const;

  /// A row functional z with z . column = 0 for every added column and
  /// z . rhs = 1; nullopt when rhs lies in the column space.
  std::optional<BitVector> separating_functional(const BitVector& rhs) const;

 private:
  void fully_reduce() const;

  std::size_t rows_;
  std::size_t columns_ = 0;
  bool track_;
  std::vector<BitVector> basis_;
  std::vector<BitVector> combos_;
  std::vector<std::ptrdiff_t> owner_;  // row -> basis index with that pivot, or -1

  mutable bool reduced_ready_ = false;
  mutable std::vector<BitVector> reduced_;
};

}  // namespace gds::f2
