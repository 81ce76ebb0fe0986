#include "gds/cochain.hpp"

#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

// Mask of `mask` with bit j removed (higher bits shift down).
std::uint32_t omit_bit(std::uint32_t mask, int j) {
  const std::uint32_t low = mask & ((std::uint32_t{1} << j) - 1);
  const std::uint32_t high = (mask >> (j + 1)) << j;
  return low | high;
}

}  // namespace

GroupCochain::GroupCochain(int arity, std::int64_t modulus) : arity_(arity), modulus_(modulus) {
  if (arity < 0 || arity > 24) throw ContractViolation("cochain arity must be in 0..24");
  if (modulus <= 0) throw ContractViolation("cochain modulus must be positive");
  table_.assign(std::size_t{1} << arity, 0);
}

std::int64_t GroupCochain::value(const std::vector<bool>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ContractViolation("wrong number of cochain arguments");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i]) mask |= std::uint32_t{1} << i;
  }
  return table_[mask];
}

void GroupCochain::set(std::uint32_t mask, std::int64_t v) { table_.at(mask) = reduce(v, modulus_); }

bool GroupCochain::is_homogeneous() const {
  const std::uint32_t full = static_cast<std::uint32_t>(table_.size() - 1);
  for (std::uint32_t m = 0; m < table_.size(); ++m) {
    if (table_[m] != table_[m ^ full]) return false;
  }
  return true;
}

bool GroupCochain::is_zero() const {
  for (auto v : table_) {
    if (v) return false;
  }
  return true;
}

GroupCochain GroupCochain::slice_first(bool g) const {
  if (arity_ == 0) throw ContractViolation("cannot slice a cochain with no arguments");
  GroupCochain out(arity_ - 1, modulus_);
  for (std::uint32_t m = 0; m < out.table_.size(); ++m) {
    out.table_[m] = table_[(m << 1) | (g ? 1u : 0u)];
  }
  return out;
}

GroupCochain GroupCochain::time_reversed() const {
  GroupCochain out(arity_, modulus_);
  for (std::size_t m = 0; m < table_.size(); ++m) out.table_[m] = reduce(-table_[m], modulus_);
  return out;
}

GroupCochain GroupCochain::lifted(std::int64_t modulus) const {
  if (modulus % modulus_ != 0) throw PrecisionError("lift modulus must be a multiple of the cochain modulus");
  GroupCochain out(arity_, modulus);
  const std::int64_t scale = modulus / modulus_;
  for (std::size_t m = 0; m < table_.size(); ++m) out.table_[m] = table_[m] * scale;
  return out;
}

GroupCochain GroupCochain::half_lift() const {
  GroupCochain out(arity_, 2 * modulus_);
  out.table_ = table_;
  return out;
}

bool GroupCochain::uses_values_outside(std::int64_t coarser) const {
  if (modulus_ % coarser != 0) return true;
  const std::int64_t step = modulus_ / coarser;
  for (auto v : table_) {
    if (v % step != 0) return true;
  }
  return false;
}

GroupCochain coboundary(const GroupCochain& w) {
  GroupCochain out(w.arity() + 1, w.modulus());
  for (std::uint32_t m = 0; m < out.table_size(); ++m) {
    std::int64_t acc = 0;
    for (int j = 0; j <= w.arity(); ++j) {
      const std::int64_t v = w.value(omit_bit(m, j));
      acc += (j % 2 == 0) ? v : -v;
    }
    out.set(m, acc);
  }
  return out;
}

GroupCochain omega(int k) {
  if (k < 0) throw ContractViolation("omega needs k >= 0");
  GroupCochain out(k + 2, 2);
  std::uint32_t x_first = 0;  // (X,e,X,e,...)
  for (int i = 0; i < k + 2; i += 2) x_first |= std::uint32_t{1} << i;
  const std::uint32_t full = (std::uint32_t{1} << (k + 2)) - 1;
  out.set(x_first, 1);
  out.set(full ^ x_first, 1);
  return out;
}

std::optional<GroupCochain> find_coboundary_preimage(const GroupCochain& w, std::int64_t value_modulus) {
  if (w.arity() < 1) throw ContractViolation("a preimage needs a cochain of arity >= 1");
  if (value_modulus % w.modulus() != 0) throw ContractViolation("value modulus must be a multiple of w's modulus");
  const int a = w.arity() - 1;
  // a homogeneous cochain is fixed by its values on masks with the last bit clear
  const std::size_t free = a == 0 ? 1 : (std::size_t{1} << (a - 1));
  double candidates = 1;
  for (std::size_t i = 0; i < free; ++i) candidates *= static_cast<double>(value_modulus);
  if (candidates > 65536.0) throw ContractViolation("preimage search space too large");
  const GroupCochain target = w.lifted(value_modulus);
  const std::uint32_t full = (std::uint32_t{1} << a) - 1;
  std::vector<std::int64_t> digits(free, 0);
  while (true) {
    GroupCochain lambda(a, value_modulus);
    if (a == 0) {
      lambda.set(0, digits[0]);
    } else {
      for (std::uint32_t m = 0; m < free; ++m) {
        lambda.set(m, digits[m]);
        lambda.set(m ^ full, digits[m]);
      }
    }
    if (coboundary(lambda) == target) return lambda;
    std::size_t i = 0;
    while (i < free && ++digits[i] == value_modulus) digits[i++] = 0;
    if (i == free) break;
  }
  return std::nullopt;
}

std::int64_t identity_slice_sum(const GroupCochain& w) {
  const GroupCochain s = w.slice_first(false);
  std::int64_t acc = 0;
  for (auto v : s.table()) acc += v;
  return reduce(acc, w.modulus());
}

std::string format_arguments(std::uint32_t mask, int arity) {
  std::string out = "(";
  for (int i = 0; i < arity; ++i) {
    if (i) out += ',';
    out += (mask >> i) & 1u ? 'X' : 'e';
  }
  return out + ")";
}

}  // namespace gds
