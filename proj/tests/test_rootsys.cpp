#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <minorb/rootsys.hpp>

#include <set>
#include <vector>

using namespace minorb;

namespace {

IVec iv(std::initializer_list<Int> xs) {
  IVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

CartanType ct(const std::string& s) { return parse_cartan_type(s); }

WeightedDynkinDiagram min_wdd(CartanType t) {
  const RootSystem& rs = shared_root_system(t);
  return wdd_from_characteristic(rs, rs.coroot_coweights(rs.highest_root()));
}

}  // namespace

TEST_CASE("cartan types: canonical-form validation") {
  CHECK_NOTHROW(CartanType(Family::A, 1));
  CHECK_NOTHROW(CartanType(Family::C, 2));
  CHECK_NOTHROW(CartanType(Family::B, 3));
  CHECK_NOTHROW(CartanType(Family::D, 4));

  CHECK_THROWS_WITH_AS(CartanType(Family::B, 2), doctest::Contains("C2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(CartanType(Family::B, 1), doctest::Contains("A1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(CartanType(Family::C, 1), doctest::Contains("A1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(CartanType(Family::D, 3), doctest::Contains("A3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(CartanType(Family::D, 2), doctest::Contains("not simple"),
                       std::invalid_argument);
  CHECK_THROWS_AS(CartanType(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(CartanType(Family::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(CartanType(Family::G, 3), std::invalid_argument);

  CHECK(ct("A3") == CartanType(Family::A, 3));
  CHECK(ct("e8") == CartanType(Family::E, 8));
  CHECK_THROWS_AS(ct("H4"), std::invalid_argument);
  CHECK_THROWS_AS(ct("A"), std::invalid_argument);
  CHECK(ct("A3").algebra_name() == "sl_4(C)");
  CHECK(ct("B4").algebra_name() == "so_9(C)");
  CHECK(ct("C3").algebra_name() == "sp_3(C)");
  CHECK(ct("D5").algebra_name() == "so_10(C)");
}

TEST_CASE("root counts and algebra dimensions") {
  // Closed forms: |A_n| = n(n+1), |B_n| = |C_n| = 2n^2, |D_n| = 2n(n-1).
  struct Row { const char* type; Int roots; Int dim; };
  const Row rows[] = {
      {"A1", 2, 3},    {"A2", 6, 8},     {"A3", 12, 15},  {"A7", 56, 63},
      {"C2", 8, 10},   {"B3", 18, 21},   {"C3", 18, 21},  {"D4", 24, 28},
      {"B5", 50, 55},  {"C5", 50, 55},   {"D6", 60, 66},  {"E6", 72, 78},
      {"E7", 126, 133},{"E8", 240, 248}, {"F4", 48, 52},  {"G2", 12, 14},
  };
  for (const auto& r : rows) {
    const RootSystem& rs = shared_root_system(ct(r.type));
    CHECK(static_cast<Int>(rs.roots().size()) == r.roots);
    CHECK(rs.dim() == r.dim);
    CHECK(static_cast<Int>(rs.positive_roots().size()) * 2 == r.roots);
  }
}

TEST_CASE("cartan matrix is symmetrizable with short length 2") {
  for (const char* name : {"A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    const IMat& b = rs.bilinear();
    CHECK(b == IMat(b.transpose()));
    Int min_len = 1000;
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(b(i, i) > 0);
      CHECK(b(i, i) % 2 == 0);
      min_len = std::min(min_len, b(i, i));
      CHECK(rs.length_sq(rs.simple_root(i)) == b(i, i));
    }
    CHECK(min_len == 2);
  }
  const RootSystem& g2 = shared_root_system(ct("G2"));
  CHECK(g2.cartan()(0, 1) == -1);
  CHECK(g2.cartan()(1, 0) == -3);
  const RootSystem& f4 = shared_root_system(ct("F4"));
  CHECK(f4.cartan()(1, 2) == -2);
  CHECK(f4.cartan()(2, 1) == -1);
}

TEST_CASE("highest roots in simple-root coordinates") {
  CHECK(shared_root_system(ct("A5")).highest_root() == iv({1, 1, 1, 1, 1}));
  CHECK(shared_root_system(ct("B4")).highest_root() == iv({1, 2, 2, 2}));
  CHECK(shared_root_system(ct("C4")).highest_root() == iv({2, 2, 2, 1}));
  CHECK(shared_root_system(ct("D5")).highest_root() == iv({1, 2, 2, 1, 1}));
  CHECK(shared_root_system(ct("E6")).highest_root() == iv({1, 2, 2, 3, 2, 1}));
  CHECK(shared_root_system(ct("E7")).highest_root() == iv({2, 2, 3, 4, 3, 2, 1}));
  CHECK(shared_root_system(ct("E8")).highest_root() == iv({2, 3, 4, 6, 5, 4, 3, 2}));
  CHECK(shared_root_system(ct("F4")).highest_root() == iv({2, 3, 4, 2}));
  CHECK(shared_root_system(ct("G2")).highest_root() == iv({3, 2}));

  // The highest root is always long.
  for (const char* name : {"A4", "B4", "C4", "D5", "E8", "F4", "G2"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    Int max_len = 0;
    for (const auto& r : rs.roots()) max_len = std::max(max_len, rs.length_sq(r));
    CHECK(rs.length_sq(rs.highest_root()) == max_len);
  }
}

TEST_CASE("roots are closed under reflection; pairing with own coroot is 2") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    for (const auto& r : rs.roots()) {
      for (int j = 0; j < rs.rank(); ++j) CHECK(rs.is_root(rs.reflect_root(j, r)));
      CHECK(rs.eval(r, rs.coroot_coweights(r)) == 2);
    }
    CHECK_FALSE(rs.is_root(IVec::Zero(rs.rank())));
    IVec too_high = rs.highest_root();
    too_high(0) += 1;
    CHECK_FALSE(rs.is_root(too_high));
  }
}

TEST_CASE("dominant representative: reachable, dominant, well-defined on orbits") {
  for (const char* name : {"A2", "G2", "C3"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    IVec seed(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) seed(i) = (i % 2 == 0) ? -3 - i : 5 - i;
    IVec dom = dominant_representative(rs, seed);
    for (int i = 0; i < rs.rank(); ++i) CHECK(dom(i) >= 0);
    CHECK(dominant_representative(rs, dom) == dom);

    // Every element of the Weyl orbit of the seed maps to the same dominant
    // representative.
    std::set<std::vector<Int>> orbit;
    std::vector<IVec> queue{seed};
    orbit.insert({seed.data(), seed.data() + seed.size()});
    while (!queue.empty()) {
      IVec w = queue.back();
      queue.pop_back();
      for (int i = 0; i < rs.rank(); ++i) {
        IVec r = rs.reflect_coweight(i, w);
        if (orbit.insert({r.data(), r.data() + r.size()}).second) queue.push_back(r);
      }
    }
    for (const auto& key : orbit) {
      IVec w(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) w(i) = key[i];
      CHECK(dominant_representative(rs, w) == dom);
    }
  }
}

TEST_CASE("minimal nilpotent orbit: weighted diagram and half-dimension") {
  struct Row { const char* type; std::vector<Int> wdd; Int half; };
  const Row rows[] = {
      {"A1", {2}, 1},
      {"A2", {1, 1}, 2},
      {"A5", {1, 0, 0, 0, 1}, 5},
      {"B3", {0, 1, 0}, 4},
      {"B5", {0, 1, 0, 0, 0}, 8},
      {"C2", {1, 0}, 2},
      {"C4", {1, 0, 0, 0}, 4},
      {"D4", {0, 1, 0, 0}, 5},
      {"D6", {0, 1, 0, 0, 0, 0}, 9},
      {"E6", {0, 1, 0, 0, 0, 0}, 11},
      {"E7", {1, 0, 0, 0, 0, 0, 0}, 17},
      {"E8", {0, 0, 0, 0, 0, 0, 0, 1}, 29},
      {"F4", {1, 0, 0, 0}, 8},
      {"G2", {0, 1}, 3},
  };
  for (const auto& r : rows) {
    WeightedDynkinDiagram d = min_wdd(ct(r.type));
    IVec expect(static_cast<int>(r.wdd.size()));
    for (size_t i = 0; i < r.wdd.size(); ++i) expect(static_cast<int>(i)) = r.wdd[i];
    CHECK(d.weights == expect);
    CHECK(orbit_half_dim(shared_root_system(ct(r.type)), d) == r.half);
  }
}

TEST_CASE("graded dimensions: symmetric and sum to dim g") {
  for (const char* name : {"A4", "B4", "D5", "F4", "G2", "E6"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    WeightedDynkinDiagram d = min_wdd(ct(name));
    auto g = graded_dims(rs, d);
    Int total = 0;
    for (const auto& [lvl, dim] : g) {
      total += dim;
      CHECK(g.at(-lvl) == dim);
    }
    CHECK(total == rs.dim());
    // Minimal orbit grading is the 5-term one: levels -2..2 with g_{+-2} a line.
    CHECK(g.at(2) == 1);
    CHECK(g.size() == 5);
  }
}

TEST_CASE("partition-labeled orbits: frozen diagrams and half-dimensions") {
  struct Row { const char* type; std::vector<Int> parts; std::vector<Int> wdd; Int half; };
  const Row rows[] = {
      {"A3", {2, 2}, {0, 2, 0}, 4},
      {"A3", {2, 1, 1}, {1, 0, 1}, 3},
      {"A3", {4}, {2, 2, 2}, 6},
      {"A3", {3, 1}, {2, 0, 2}, 5},
      {"B3", {3, 1, 1, 1, 1}, {2, 0, 0}, 5},
      {"B3", {2, 2, 1, 1, 1}, {0, 1, 0}, 4},
      {"B3", {7}, {2, 2, 2}, 9},
      {"C2", {2, 2}, {0, 2}, 3},
      {"C2", {2, 1, 1}, {1, 0}, 2},
      {"C3", {2, 2, 2}, {0, 0, 2}, 6},
      {"C3", {2, 1, 1, 1, 1}, {1, 0, 0}, 3},
      {"D4", {2, 2, 1, 1, 1, 1}, {0, 1, 0, 0}, 5},
      {"D4", {3, 1, 1, 1, 1, 1}, {2, 0, 0, 0}, 6},
      {"D5", {3, 1, 1, 1, 1, 1, 1, 1}, {2, 0, 0, 0, 0}, 8},
      {"D4", {7, 1}, {2, 2, 2, 2}, 12},
  };
  for (const auto& r : rows) {
    WeightedDynkinDiagram d = wdd_from_partition(ct(r.type), Partition(r.parts));
    IVec expect(static_cast<int>(r.wdd.size()));
    for (size_t i = 0; i < r.wdd.size(); ++i) expect(static_cast<int>(i)) = r.wdd[i];
    CHECK(d.weights == expect);
    CHECK(orbit_half_dim(shared_root_system(ct(r.type)), d) == r.half);
  }

  // The minimal-orbit partitions agree with the highest-root construction.
  CHECK(wdd_from_partition(ct("A4"), Partition({2, 1, 1, 1})) == min_wdd(ct("A4")));
  CHECK(wdd_from_partition(ct("B4"), Partition({2, 2, 1, 1, 1, 1, 1})) == min_wdd(ct("B4")));
  CHECK(wdd_from_partition(ct("C4"), Partition({2, 1, 1, 1, 1, 1, 1})) == min_wdd(ct("C4")));
  CHECK(wdd_from_partition(ct("D5"), Partition({2, 2, 1, 1, 1, 1, 1, 1})) == min_wdd(ct("D5")));
}

TEST_CASE("partition validation per classical family") {
  CHECK_THROWS_AS(wdd_from_partition(ct("A2"), Partition({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(wdd_from_partition(ct("B3"), Partition({2, 1, 1, 1, 1, 1})),
                  std::invalid_argument);  // even part with odd multiplicity
  CHECK_THROWS_AS(wdd_from_partition(ct("C2"), Partition({3, 1})),
                  std::invalid_argument);  // odd part with odd multiplicity
  CHECK_THROWS_AS(wdd_from_partition(ct("D4"), Partition({4, 3, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(wdd_from_partition(ct("E6"), Partition({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({1, 3, 2}).parts == std::vector<Int>{3, 2, 1});
}

TEST_CASE("diagram automorphism groups") {
  CHECK(diagram_automorphisms(ct("A1")).size() == 1);
  CHECK(diagram_automorphisms(ct("A3")).size() == 2);
  CHECK(diagram_automorphisms(ct("B4")).size() == 1);
  CHECK(diagram_automorphisms(ct("C4")).size() == 1);
  CHECK(diagram_automorphisms(ct("D4")).size() == 6);
  CHECK(diagram_automorphisms(ct("D5")).size() == 2);
  CHECK(diagram_automorphisms(ct("E6")).size() == 2);
  CHECK(diagram_automorphisms(ct("E7")).size() == 1);
  CHECK(diagram_automorphisms(ct("F4")).size() == 1);
  CHECK(diagram_automorphisms(ct("G2")).size() == 1);

  // Every listed permutation preserves the Cartan matrix.
  for (const char* name : {"A4", "D4", "D5", "E6"}) {
    const RootSystem& rs = shared_root_system(ct(name));
    for (const auto& p : diagram_automorphisms(ct(name)))
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
          CHECK(rs.cartan()(p[i], p[j]) == rs.cartan()(i, j));
  }

  const auto a3 = diagram_automorphisms(ct("A3"));
  CHECK(apply_node_perm(a3[1], iv({1, 2, 0})) == iv({0, 2, 1}));
  CHECK(apply_node_perm(a3[1], iv({1, 0, 1})) == iv({1, 0, 1}));
}

TEST_CASE("characteristic vectors outside {0,1,2} are rejected") {
  const RootSystem& rs = shared_root_system(ct("A2"));
  CHECK_THROWS_AS(wdd_from_characteristic(rs, iv({3, 0})), std::invalid_argument);
  CHECK(wdd_from_characteristic(rs, iv({-1, -1})).weights == iv({1, 1}));
}
