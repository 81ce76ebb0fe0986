#include "gds/corpus.hpp"

#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

std::vector<Simplex> octahedron() {
  std::vector<Simplex> out;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<Simplex> boundary_of_simplex(int n) {
  std::vector<Simplex> out;
  for (int skip = n; skip >= 0; --skip) {
    Simplex f;
    for (int v = 0; v <= n; ++v) {
      if (v != skip) f.push_back(v);
    }
    out.push_back(f);
  }
  return out;
}

std::vector<Simplex> torus7() {
  std::vector<Simplex> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"s2", "octahedron, 6-vertex 2-sphere", octahedron(), true, 2, 2, {1, 0, 1},
               {false, false, true}});
  c.push_back({"s2-tetra", "boundary of the 3-simplex, 4-vertex 2-sphere", boundary_of_simplex(3), true, 2, 2,
               {1, 0, 1}, {false, false, true}});
  c.push_back({"rp2", "6-vertex real projective plane",
               {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}},
               true, 2, 1, {1, 1, 1}, {true, true, true}});
  c.push_back({"t2", "7-vertex torus", torus7(), true, 2, 0, {1, 2, 1}, {false, false, true}});
  c.push_back({"s3", "boundary of the 4-simplex, 5-vertex 3-sphere", boundary_of_simplex(4), true, 3, 0,
               {1, 0, 0, 1}, {false, false, false, true}});
  c.push_back({"cp2", "9-vertex complex projective plane",
               {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 8}, {1, 2, 3, 7, 8}, {1, 2, 4, 5, 6},
                {1, 2, 4, 6, 7}, {1, 2, 5, 6, 8}, {1, 2, 6, 7, 9}, {1, 2, 6, 8, 9}, {1, 2, 7, 8, 9},
                {1, 3, 4, 5, 9}, {1, 3, 4, 7, 8}, {1, 3, 4, 8, 9}, {1, 3, 5, 6, 8}, {1, 3, 5, 6, 9},
                {1, 3, 6, 8, 9}, {1, 4, 5, 6, 7}, {1, 4, 5, 7, 9}, {1, 4, 7, 8, 9}, {1, 5, 6, 7, 9},
                {2, 3, 4, 5, 9}, {2, 3, 4, 6, 7}, {2, 3, 4, 6, 9}, {2, 3, 5, 7, 8}, {2, 3, 5, 7, 9},
                {2, 3, 6, 7, 9}, {2, 4, 5, 6, 8}, {2, 4, 5, 8, 9}, {2, 4, 6, 8, 9}, {2, 5, 7, 8, 9},
                {3, 4, 6, 7, 8}, {3, 4, 6, 8, 9}, {3, 5, 6, 7, 8}, {3, 5, 6, 7, 9}, {4, 5, 6, 7, 8},
                {4, 5, 7, 8, 9}},
               true, 4, 3, {1, 0, 1, 0, 1}, {true, false, true, false, true}});
  c.push_back({"triple-edge", "three triangles sharing one edge (not a manifold)",
               {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, false, 2, 1, {1, 0, 0}, {}});
  c.push_back({"triangle", "a single triangle with its faces (manifold with boundary)", {{0, 1, 2}}, false, 2, 1,
               {1, 0, 0}, {}});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw NotFound("no corpus entry named '" + std::string(name) + "'");
}

std::vector<const CorpusEntry*> corpus_manifolds() {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus()) {
    if (e.manifold) out.push_back(&e);
  }
  return out;
}

}  // namespace gds
