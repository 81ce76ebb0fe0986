#include "gds/f2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gds/error.hpp"

namespace gds::f2 {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw ContractViolation("bit vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::lowest() const { return next_set(0); }

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return std::min(size_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::dot(const BitVector& o) const {
  if (o.size_ != size_) throw ContractViolation("bit vector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = lowest(); i < size_; i = next_set(i + 1)) out.push_back(i);
  return out;
}

ColumnEchelon::ColumnEchelon(std::size_t rows, bool track_combinations)
    : rows_(rows), track_(track_combinations), owner_(rows, -1) {}

bool ColumnEchelon::add_column(const BitVector& column) {
  if (column.size() != rows_) throw ContractViolation("column has wrong length");
  const std::size_t index = columns_++;
  BitVector v = column;
  BitVector combo;
  if (track_) {
    // combination vectors grow as columns arrive; sized lazily below
    combo = BitVector(index + 1);
    combo.set(index);
  }
  for (std::size_t p = v.lowest(); p < rows_; p = v.lowest()) {
    const auto o = owner_[p];
    if (o < 0) {
      owner_[p] = static_cast<std::ptrdiff_t>(basis_.size());
      basis_.push_back(std::move(v));
      if (track_) combos_.push_back(std::move(combo));
      reduced_ready_ = false;
      return true;
    }
    v ^= basis_[static_cast<std::size_t>(o)];
    if (track_) {
      const BitVector& other = combos_[static_cast<std::size_t>(o)];
      // other.size() <= combo.size(): xor the common prefix bit by bit
      for (std::size_t i = other.lowest(); i < other.size(); i = other.next_set(i + 1)) combo.flip(i);
    }
  }
  return false;
}

std::optional<BitVector> ColumnEchelon::solve(const BitVector& rhs) const {
  if (!track_) throw ContractViolation("solve() needs combination tracking");
  if (rhs.size() != rows_) throw ContractViolation("right-hand side has wrong length");
  BitVector v = rhs;
  BitVector x(columns_);
  for (std::size_t p = v.lowest(); p < rows_; p = v.lowest()) {
    const auto o = owner_[p];
    if (o < 0) return std::nullopt;
    v ^= basis_[static_cast<std::size_t>(o)];
    const BitVector& c = combos_[static_cast<std::size_t>(o)];
    for (std::size_t i = c.lowest(); i < c.size(); i = c.next_set(i + 1)) x.flip(i);
  }
  return x;
}

bool ColumnEchelon::in_span(const BitVector& rhs) const {
  BitVector v = rhs;
  for (std::size_t p = v.lowest(); p < rows_; p = v.lowest()) {
    const auto o = owner_[p];
    if (o < 0) return false;
    v ^= basis_[static_cast<std::size_t>(o)];
  }
  return true;
}

void ColumnEchelon::fully_reduce() const {
  if (reduced_ready_) return;
  reduced_ = basis_;
  std::vector<std::size_t> order(reduced_.size());
  std::iota(order.begin(), order.end(), 0);
  auto pivot = [&](std::size_t i) { return basis_[i].lowest(); };
  // decreasing pivot: every vector used for elimination is already reduced
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot(a) > pivot(b); });
  for (std::size_t i : order) {
    BitVector& u = reduced_[i];
    const std::size_t q = pivot(i);
    for (std::size_t p = u.next_set(q + 1); p < rows_; p = u.next_set(p + 1)) {
      const auto o = owner_[p];
      if (o >= 0) u ^= reduced_[static_cast<std::size_t>(o)];
    }
  }
  reduced_ready_ = true;
}

std::optional<BitVector> ColumnEchelon::separating_functional(const BitVector& rhs) const {
  if (rhs.size() != rows_) throw ContractViolation("right-hand side has wrong length");
  fully_reduce();
  BitVector r = rhs;
  for (std::size_t p = r.lowest(); p < rows_; p = r.next_set(p + 1)) {
    const auto o = owner_[p];
    if (o >= 0) r ^= reduced_[static_cast<std::size_t>(o)];
  }
  const std::size_t p = r.lowest();
  if (p >= rows_) return std::nullopt;
  BitVector z(rows_);
  z.set(p);
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (reduced_[i].get(p)) z.flip(basis_[i].lowest());
  }
  return z;
}

}  // namespace gds::f2
