#include <doctest.h>

#include "gds/chain.hpp"
#include "gds/complex.hpp"
#include "gds/corpus.hpp"
#include "gds/error.hpp"
#include "gds/f2.hpp"
#include "gds/homology.hpp"

using namespace gds;

TEST_CASE("build_complex closes under faces") {
  std::vector<Simplex> path{{1, 2}, {2, 3}};
  auto s = build_complex(path);
  CHECK(s.count(0) == 3);
  CHECK(s.count(1) == 2);
  CHECK(s.dim() == 1);

  auto oct = corpus_entry("s2").complex();
  CHECK(oct.f_vector() == std::vector<std::size_t>{6, 12, 8});

  auto cp2 = corpus_entry("cp2").complex();
  CHECK(cp2.f_vector() == std::vector<std::size_t>{9, 36, 84, 90, 36});
  CHECK(euler_characteristic(cp2) == 3);
}

TEST_CASE("build_complex rejects malformed facets") {
  std::vector<Simplex> dup{{1, 1, 2}};
  CHECK_THROWS_AS(build_complex(dup), MalformedInput);
  std::vector<Simplex> none;
  CHECK_THROWS_AS(build_complex(none), MalformedInput);
}

TEST_CASE("boundary uses the reduced convention in degree 0") {
  Chain e(1);
  e.add({1, 2}, 1);
  Chain expect(0);
  expect.add({2}, 1);
  expect.add({1}, -1);
  CHECK(boundary(e) == expect);

  Chain pt(0, 2);
  pt.add({5}, 1);
  const Chain dpt = boundary(pt);
  CHECK(dpt.dim() == -1);
  CHECK(dpt.coefficient({}) == 1);

  Chain tri(1, 2);
  tri.add({0, 1}, 1);
  tri.add({1, 2}, 1);
  tri.add({0, 2}, 1);
  CHECK(boundary(tri).empty());
}

TEST_CASE("boundary squares to zero") {
  for (const auto& entry : corpus()) {
    const auto s = entry.complex();
    for (int k = 1; k <= s.dim(); ++k) {
      Chain c(k);
      Coeff a = 1;
      for (const auto& sigma : s.simplices(k)) c.add(sigma, a++ % 5 - 2);
      if (k >= 2) CHECK(boundary(boundary(c)).empty());
      CHECK(boundary(boundary(c.mod(2))).empty());
    }
  }
}

TEST_CASE("chain orientation folds into the sign") {
  Chain c(2);
  c.add({2, 1, 3}, 1);
  CHECK(c.coefficient({1, 2, 3}) == -1);
  c.add({1, 2, 3}, 1);
  CHECK(c.empty());
  CHECK_THROWS_AS(c.add({1, 2}, 1), MalformedInput);
}

TEST_CASE("Euler characteristics of the corpus") {
  for (const auto& entry : corpus()) {
    CHECK_MESSAGE(euler_characteristic(entry.complex()) == entry.euler, entry.name);
  }
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
}

TEST_CASE("Euler characteristic is additive") {
  const auto s = corpus_entry("t2").complex();
  std::vector<Vertex> a{0, 1, 2, 3, 4};
  std::vector<Vertex> b{2, 3, 4, 5, 6};
  std::vector<Vertex> both{2, 3, 4};
  const auto A = induced_subcomplex(s, a);
  const auto B = induced_subcomplex(s, b);
  const auto U = complex_union(A, B);
  CHECK(euler_characteristic(A) + euler_characteristic(B) ==
        euler_characteristic(U) + euler_characteristic(induced_subcomplex(s, both)));
}

TEST_CASE("links") {
  const auto oct = corpus_entry("s2").complex();
  const auto lk = link(oct, {0});
  CHECK(lk.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(euler_characteristic(lk) == 0);

  const auto s3 = corpus_entry("s3").complex();
  CHECK(link(s3, {0, 1}).f_vector() == std::vector<std::size_t>{3, 3});

  const auto cp2 = corpus_entry("cp2").complex();
  for (Vertex v : cp2.vertices()) {
    const auto l = link(cp2, {v});
    CHECK(l.count(0) == 8);
    CHECK(betti_numbers(l) == std::vector<int>{1, 0, 0, 1});
  }
  CHECK_THROWS_AS(link(oct, {0, 1}), NotFound);
}

TEST_CASE("manifold_check") {
  for (const auto* entry : corpus_manifolds()) {
    const auto r = manifold_check(entry->complex());
    CHECK_MESSAGE(r.is_manifold(), entry->name);
    CHECK(r.links_have_even_euler);
    CHECK(r.failing.empty());
  }
  const auto junction = manifold_check(corpus_entry("triple-edge").complex());
  CHECK_FALSE(junction.ridges_have_two_cofaces);
  CHECK_FALSE(junction.is_manifold());
  bool found = false;
  for (const auto& f : junction.failing) found |= (f == Simplex{0, 1});
  CHECK(found);

  const auto disk = manifold_check(corpus_entry("triangle").complex());
  CHECK_FALSE(disk.is_manifold());
  CHECK_FALSE(disk.links_have_even_euler);
}

TEST_CASE("induced subcomplex") {
  const auto oct = corpus_entry("s2").complex();
  std::vector<Vertex> none;
  CHECK(induced_subcomplex(oct, none).empty());
  std::vector<Vertex> one{0};
  CHECK(euler_characteristic(induced_subcomplex(oct, one)) == 1);
  std::vector<Vertex> adj{0, 2};
  CHECK(induced_subcomplex(oct, adj).f_vector() == std::vector<std::size_t>{2, 1});
  std::vector<Vertex> bad{42};
  CHECK_THROWS_AS(induced_subcomplex(oct, bad), MalformedInput);
}

TEST_CASE("Z2 Betti numbers of the corpus") {
  for (const auto& entry : corpus()) {
    CHECK_MESSAGE(betti_numbers(entry.complex()) == entry.betti, entry.name);
  }
}

TEST_CASE("homology_solve witnesses and cocycles") {
  const auto oct = corpus_entry("s2").complex();
  Chain tri(2, 2);
  tri.add({0, 2, 4}, 1);
  const auto w = homology_solve(oct, boundary(tri));
  REQUIRE(w.trivial());
  CHECK(*w.witness == tri);
  CHECK(check_witness(oct, w));

  const auto rp2 = corpus_entry("rp2").complex();
  // edges 12, 23, 31 close up through the cross-cap
  Chain loop(1, 2);
  loop.add({1, 2}, 1);
  loop.add({2, 5}, 1);
  loop.add({1, 5}, 1);
  REQUIRE(boundary(loop).empty());
  const auto h = homology_solve(rp2, loop);
  CHECK_FALSE(h.trivial());
  REQUIRE(h.cocycle.has_value());
  CHECK(coboundary_mod2(rp2, *h.cocycle).empty());
  CHECK(pairing_mod2(*h.cocycle, loop) == 1);
  CHECK(check_witness(rp2, h));

  const auto s3 = corpus_entry("s3").complex();
  Chain cyc(1, 2);
  cyc.add({0, 1}, 1);
  cyc.add({1, 2}, 1);
  cyc.add({2, 3}, 1);
  cyc.add({0, 3}, 1);
  const auto hs = homology_solve(s3, cyc);
  REQUIRE(hs.trivial());
  CHECK(boundary(*hs.witness).mod(2) == cyc);

  Chain open(1, 2);
  open.add({0, 1}, 1);
  CHECK_THROWS_AS(homology_solve(s3, open), ContractViolation);
}

TEST_CASE("F2 echelon solve and separating functional") {
  f2::ColumnEchelon e(3);
  f2::BitVector a(3), b(3), rhs(3), out(3);
  a.set(0);
  a.set(1);
  b.set(1);
  b.set(2);
  e.add_column(a);
  e.add_column(b);
  rhs.set(0);
  rhs.set(2);
  const auto x = e.solve(rhs);
  REQUIRE(x.has_value());
  CHECK(x->get(0));
  CHECK(x->get(1));
  out.set(0);
  const auto z = e.separating_functional(out);
  REQUIRE(z.has_value());
  CHECK(z->dot(out));
  CHECK_FALSE(z->dot(a));
  CHECK_FALSE(z->dot(b));
}
