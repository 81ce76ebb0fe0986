#include <doctest.h>

#include <random>

#include "gds/cochain.hpp"
#include "gds/error.hpp"

using namespace gds;

TEST_CASE("omega table") {
  const auto w0 = omega(0);
  CHECK(w0.arity() == 2);
  CHECK(w0.value({false, true}) == 1);
  CHECK(w0.value({true, false}) == 1);
  CHECK(w0.value({false, false}) == 0);
  CHECK(w0.value({true, true}) == 0);

  const auto w2 = omega(2);
  CHECK(w2.value({true, false, true, false}) == 1);
  CHECK(w2.value({false, true, false, true}) == 1);
  CHECK(w2.value({true, true, false, true}) == 0);
}

TEST_CASE("omega_k is a homogeneous nonzero cocycle") {
  for (int k = 0; k <= 6; ++k) {
    const auto w = omega(k);
    CHECK(w.is_homogeneous());
    CHECK_FALSE(w.is_zero());
    CHECK(coboundary(w).is_zero());
    CHECK(identity_slice_sum(w) == 1);
  }
}

TEST_CASE("coboundary basics") {
  GroupCochain one(1, 2);
  one.set(0, 1);
  one.set(1, 1);
  CHECK(coboundary(one).is_zero());

  std::mt19937_64 rng(7);
  for (std::int64_t n : {2, 4}) {
    for (int arity = 1; arity <= 5; ++arity) {
      GroupCochain l(arity, n);
      for (std::uint32_t m = 0; m < l.table_size(); ++m) l.set(m, static_cast<std::int64_t>(rng() % n));
      CHECK(coboundary(coboundary(l)).is_zero());
    }
  }

  GroupCochain h(3, 4);
  for (std::uint32_t m = 0; m < 4; ++m) {
    h.set(m, m);
    h.set(m ^ 7u, m);
  }
  REQUIRE(h.is_homogeneous());
  CHECK(coboundary(h).is_homogeneous());
  CHECK(identity_slice_sum(coboundary(h)) == 0);
}

TEST_CASE("omega_k is not a Z2 coboundary") {
  for (int k = 0; k <= 3; ++k) CHECK_FALSE(find_coboundary_preimage(omega(k), 2).has_value());
  // with quarter values the odd ones become trivial, the even ones do not
  CHECK(find_coboundary_preimage(omega(1), 4).has_value());
  CHECK(find_coboundary_preimage(omega(3), 4).has_value());
  CHECK_FALSE(find_coboundary_preimage(omega(0), 4).has_value());
  CHECK_FALSE(find_coboundary_preimage(omega(2), 4).has_value());
}

TEST_CASE("omega_{2k+1} is half the coboundary of omega_{2k}") {
  for (int k = 0; k <= 2; ++k) {
    const auto lhs = coboundary(omega(2 * k).half_lift());
    CHECK(lhs.table_size() == (std::size_t{1} << (2 * k + 3)));
    CHECK(lhs == omega(2 * k + 1).lifted(4));
  }
}

TEST_CASE("slices, lifts and time reversal") {
  const auto w = omega(1);
  const auto sx = w.slice_first(true);
  CHECK(sx.arity() == 2);
  CHECK(sx.value({false, true}) == 1);  // w(X, e, X)
  CHECK(sx.value({true, false}) == 0);
  CHECK(w.time_reversed() == w);
  const auto q = w.half_lift();
  CHECK(q.modulus() == 4);
  CHECK(q.time_reversed() != q);
  CHECK(q.uses_values_outside(2));
  CHECK_FALSE(w.lifted(4).uses_values_outside(2));
  CHECK_THROWS_AS(w.lifted(3), PrecisionError);
  CHECK(format_arguments(0b101, 3) == "(X,e,X)");
}
