#include <doctest.h>

#include "gds/corpus.hpp"
#include "gds/error.hpp"
#include "gds/gauge.hpp"
#include "gds/phase.hpp"
#include "gds/subdivision.hpp"

using namespace gds;

TEST_CASE("gauge map") {
  const auto oct = corpus_entry("s2").complex();
  const SpinConfig up(6, false);
  const auto z0 = gauge_map(oct, up);
  CHECK(std::count(z0.begin(), z0.end(), true) == 0);

  SpinConfig one(6, false);
  one[0] = true;
  const auto z1 = gauge_map(oct, one);
  CHECK(std::count(z1.begin(), z1.end(), true) == 4);
  CHECK(is_flat(oct, z1));

  SpinConfig flipped(6);
  for (std::size_t i = 0; i < 6; ++i) flipped[i] = !one[i];
  CHECK(gauge_map(oct, flipped) == z1);

  const auto pre = gauge_preimages(oct, z1);
  REQUIRE(pre.size() == 2);
  CHECK((pre[0] == one || pre[1] == one));

  EdgeConfig bad(oct.count(1), false);
  bad[0] = true;
  CHECK_FALSE(is_flat(oct, bad));
  CHECK(gauge_preimages(oct, bad).empty());
  CHECK(gauged_state_amplitude(oct, bad) == 0);
}

TEST_CASE("bitstrings") {
  CHECK(parse_bits("0110", 4) == std::vector<bool>{false, true, true, false});
  CHECK(format_bits({true, false}) == "10");
  CHECK_THROWS_AS(parse_bits("012", 3), MalformedInput);
  CHECK_THROWS_AS(parse_bits("01", 3), MalformedInput);
}

TEST_CASE("dual amplitude") {
  const auto rp2 = corpus_entry("rp2").complex();
  CHECK(dual_amplitude(rp2, SpinConfig(6, false)) == 1);
  SpinConfig single(6, false);
  single[3] = true;
  CHECK(dual_amplitude(rp2, single) == -1);
  CHECK(dual_amplitude(rp2, SpinConfig(6, true)) == -1);
}

TEST_CASE("dual amplitude matches the disentangler on every configuration") {
  for (const auto& entry : corpus()) {
    const auto s = entry.complex();
    const auto table = gds_disentangler(s).phase_table(s.vertices());
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      SpinConfig spin(s.vertices().size());
      for (std::size_t i = 0; i < spin.size(); ++i) spin[i] = (mask >> i) & 1u;
      CHECK(dual_amplitude(s, spin) == (table[mask] ? -1 : 1));
    }
  }
}

TEST_CASE("gauged amplitudes on the boundary of the 4-simplex") {
  const auto s3 = corpus_entry("s3").complex();
  CHECK(gauged_state_amplitude(s3, EdgeConfig(s3.count(1), false)) == 2);
  SpinConfig one(5, false);
  one[0] = true;
  CHECK(gauged_state_amplitude(s3, gauge_map(s3, one)) == -2);
  CHECK(dual_cycle_euler(s3, one) == 2);

  const auto sectors = trivial_sector_amplitudes(s3);
  CHECK(sectors.size() == 16);
  const long long base = sectors.front().amplitude;
  CHECK(base == 2);
  for (const auto& sec : sectors) {
    CHECK(std::abs(sec.amplitude) == 2);
    const auto [re, im] = i_power(sec.wall_euler);
    CHECK(im == 0);
    CHECK(sec.amplitude == base * re);
    CHECK(gauged_state_amplitude(s3, sec.z) == sec.amplitude);
  }
}

TEST_CASE("Ocdual identities") {
  for (const char* name : {"s2", "s2-tetra", "rp2", "t2", "s3", "cp2"}) {
    const auto s = corpus_entry(name).complex();
    for (Vertex c : s.vertices()) {
      const auto r = ocdual_check(s, c);
      CHECK_MESSAGE(r.holds(), name << " c=" << c);
      CHECK(r.configurations == (std::size_t{1} << s.vertices().size()));
    }
  }
  std::vector<Simplex> pt{{0}};
  const auto r = ocdual_check(build_complex(pt), 0);
  CHECK(r.holds());
  CHECK(r.configurations == 2);
}

TEST_CASE("flip parity follows the Euler characteristic") {
  CHECK(flip_parity(corpus_entry("rp2").complex()) == -1);
  CHECK(flip_parity(corpus_entry("t2").complex()) == 1);
  CHECK(flip_parity(corpus_entry("cp2").complex()) == -1);
  CHECK(flip_parity(corpus_entry("triangle").complex()) == 0);
}
