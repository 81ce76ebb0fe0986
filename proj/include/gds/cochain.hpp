#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gds {

/// A function (Z2)^arity -> Z_n, read as a cochain valued in (1/n)Z/Z.
///
/// Arguments are packed into a mask: bit i set means argument i is X,
/// clear means e. Values are stored as integers mod n.
class GroupCochain {
 public:
  GroupCochain(int arity, std::int64_t modulus);

  int arity() const { return arity_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t table_size() const { return table_.size(); }

  std::int64_t value(std::uint32_t mask) const { return table_.at(mask); }
  std::int64_t value(const std::vector<bool>& args) const;
  void set(std::uint32_t mask, std::int64_t v);
  const std::vector<std::int64_t>& table() const { return table_; }

  /// Invariance under flipping every argument (trivial action on values).
  bool is_homogeneous() const;
  bool is_zero() const;

  /// x -> w(g, x): one fewer argument.
  GroupCochain slice_first(bool g) const;
  /// Values negated mod n (the action of complex conjugation on R/Z).
  GroupCochain time_reversed() const;
  /// Same R/Z values over a finer modulus; `modulus` must be a multiple of n.
  GroupCochain lifted(std::int64_t modulus) const;
  /// Half of every value: same numerators over modulus 2n.
  GroupCochain half_lift() const;
  /// Whether some value needs the full modulus, i.e. is not in (1/m)Z for a
  /// proper divisor m of n. Used to spot values outside Z2.
  bool uses_values_outside(std::int64_t coarser) const;

  friend bool operator==(const GroupCochain& a, const GroupCochain& b) {
    return a.arity_ == b.arity_ && a.modulus_ == b.modulus_ && a.table_ == b.table_;
  }

 private:
  int arity_;
  std::int64_t modulus_;
  std::vector<std::int64_t> table_;
};

/// (dw)(g0..g_a) = sum_j (-1)^j w(g0..^g_j..g_a), values mod n.
GroupCochain coboundary(const GroupCochain& w);

/// The canonical representative omega_k: arity k+2, modulus 2, value 1/2 on
/// the two alternating tuples (X,e,X,..) and (e,X,e,..), 0 elsewhere.
GroupCochain omega(int k);

/// Exhaustive search for a homogeneous lambda of arity w.arity()-1 with
/// values in Z_n (n = value_modulus, a multiple of w's modulus) and
/// d(lambda) = w. Intended for tiny arities only (throws ContractViolation
/// beyond 2^16 candidates).
std::optional<GroupCochain> find_coboundary_preimage(const GroupCochain& w, std::int64_t value_modulus);

/// Sum over x of w(e, x), as a numerator mod n. It vanishes on every
/// coboundary of a homogeneous cochain, and equals 1/2 for every omega_k.
std::int64_t identity_slice_sum(const GroupCochain& w);

/// "(e,X,e)"
std::string format_arguments(std::uint32_t mask, int arity);

}  // namespace gds
