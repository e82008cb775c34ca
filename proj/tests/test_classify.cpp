#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <minorb/classify.hpp>
#include <minorb/descriptors.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace minorb;

namespace {

RealForm exc(Family f, int rank, int sig) { return RealForm::exceptional(f, rank, sig); }

std::set<std::string> pair_names(const std::vector<Decision>& ds) {
  std::set<std::string> out;
  for (const Decision& d : ds) out.insert(d.pair.name());
  return out;
}

std::set<std::string> table_pair_names(const std::vector<TableRow>& rows) {
  std::set<std::string> out;
  for (const TableRow& r : rows)
    for (const TableInstance& ti : r.instances) out.insert(ti.pair.name());
  return out;
}

}  // namespace

TEST_CASE("pinned decisions for the worked examples") {
  {
    Decision d = decide(find_pair(RealForm::sl_R(4), rt::sp_R(2)));
    CHECK(d.empty_intersection);
    CHECK(d.agreement);
    CHECK(d.route_a.m_g == 3);
    CHECK(d.route_a.n_gC == 3);
    CHECK(d.route_a.m_gd == 4);
    CHECK(d.route_a.empty);
    CHECK(d.route_b.empty);
    CHECK(d.dual.g_d0 == RealForm::su_star(4));
    CHECK(!d.dual.doubled);
    // Also an instance of row 3.4 through so_{3,3} = sl_4(R), so_{2,3} = sp_2(R).
    CHECK(d.table_rows == "3.1,3.4");
    CHECK(d.route_b.dual_diagram.find("su*_4") != std::string::npos);
    CHECK(d.route_b.orbit.label == "minimal");
  }
  {
    // The Riemannian pair of the same g: dual is g itself, never empty.
    Decision d = decide(riemannian_pair(RealForm::sl_R(4)));
    CHECK(!d.empty_intersection);
    CHECK(d.dual.g_d0 == RealForm::sl_R(4));
    CHECK(d.route_a.m_gd == 3);
    CHECK(d.table_rows.empty());
  }
  {
    // su*_4 has m(g) = 4 > n(g_C) = 3: no pair over it is ever empty.
    Decision d = decide(find_pair(RealForm::su_star(4), rt::sp(1, 1)));
    CHECK(!d.empty_intersection);
    CHECK(d.route_a.m_g == 4);
    CHECK(d.route_a.n_gC == 3);
    CHECK(d.route_a.m_gd == 4);
    CHECK(d.dual.g_d0 == RealForm::su_star(4));
    CHECK(d.route_b.orbit.label == "[2,2]");
  }
  {
    // Antiholomorphic pair: dual core is g itself, paired orbit always meets.
    RealForm g = RealForm::complex_simple(CartanType(Family::A, 1));
    Decision d = decide(find_pair(g, rt::sl_R(2)));
    CHECK(d.pair.kind == PairKind::ComplexAntiholomorphic);
    CHECK(!d.empty_intersection);
    CHECK(d.route_a.m_g == 2);
    CHECK(d.route_a.n_gC == 2);
    CHECK(d.route_a.m_gd == 2);
    CHECK(d.dual.g_d0 == g);
    CHECK(d.route_b.orbit.paired);
    CHECK(d.route_b.dual_diagram.find("paired complex form") != std::string::npos);
  }
  {
    // Holomorphic pair with empty intersection and a doubled dual.
    RealForm g = RealForm::complex_simple(CartanType(Family::C, 2));
    Decision d = decide(find_pair(g, rt::sp_C(1) + rt::sp_C(1)));
    CHECK(d.pair.kind == PairKind::ComplexHolomorphic);
    CHECK(d.empty_intersection);
    CHECK(d.dual.doubled);
    CHECK(d.dual.g_d0 == RealForm::sp(1, 1));
    CHECK(d.route_a.m_g == 4);
    CHECK(d.route_a.n_gC == 4);
    CHECK(d.route_a.m_gd == 6);
    CHECK(!d.route_b.orbit.paired);  // factor orbit of t, tested against g^d_0
    CHECK(d.table_rows == "4.2,4.3");
  }
  {
    // The CLI's worked example.
    Decision d = decide(find_pair(RealForm::so(4, 3), rt::so(3, 3)));
    CHECK(d.empty_intersection);
    CHECK(d.dual.g_d0 == RealForm::so(6, 1));
    CHECK(d.route_a.m_g == 4);
    CHECK(d.route_a.m_gd == 5);
    CHECK(d.table_rows == "3.4");
    std::string s = d.str();
    CHECK(s.find("(so_{4,3}, sl_4(R))") != std::string::npos);
    CHECK(s.find("empty") != std::string::npos);
    CHECK(s.find("m(g)=4") != std::string::npos);
    CHECK(s.find("rows 3.4") != std::string::npos);
  }
}

TEST_CASE("routes agree on every catalog pair and table rows track emptiness") {
  for (const SymmetricPair& p : all_catalog_pairs(8)) {
    Decision d = decide(p);  // a route disagreement would throw
    CHECK(d.agreement);
    CHECK(d.route_a.empty == d.route_b.empty);
    CHECK(d.empty_intersection == d.route_a.empty);
    CHECK(d.table_rows.empty() == !d.empty_intersection);
    // The strict real forms (m > n) never produce an empty pair, and
    // antiholomorphic pairs never do either.
    if (complex_minimal_misses(p.g)) CHECK(!d.empty_intersection);
    if (p.kind == PairKind::ComplexAntiholomorphic) CHECK(!d.empty_intersection);
    // Riemannian pairs always meet: the dual is g itself.
    if (p.riemannian()) CHECK(!d.empty_intersection);
  }
}

TEST_CASE("enumerate_empty reproduces the published tables exactly") {
  const std::vector<Decision> empties = enumerate_empty(8);
  CHECK(!empties.empty());
  CHECK(std::is_sorted(empties.begin(), empties.end(), [](const Decision& a, const Decision& b) {
    return a.pair.name() < b.pair.name();
  }));

  std::set<std::string> got_real, got_complex;
  for (const Decision& d : empties) {
    CHECK(d.empty_intersection);
    (d.pair.g.absolutely_simple() ? got_real : got_complex).insert(d.pair.name());
  }
  CHECK(pair_names(empties).size() == empties.size());  // no duplicate pairs

  CHECK(got_real == table_pair_names(empty_pair_table_real(8)));
  CHECK(got_complex == table_pair_names(empty_pair_table_complex(8)));
}

TEST_CASE("published table rows: ids, exceptional instances, and low-rank overlap") {
  const std::vector<TableRow> real_rows = empty_pair_table_real(8);
  REQUIRE(real_rows.size() == 10);
  for (std::size_t i = 0; i < real_rows.size(); ++i)
    CHECK(real_rows[i].id == "3." + std::to_string(i + 1));

  // The four exceptional rows carry exactly one instance each at bound 8.
  std::set<std::string> exceptional;
  for (std::size_t i = 6; i < 10; ++i) {
    REQUIRE(real_rows[i].instances.size() == 1);
    exceptional.insert(real_rows[i].instances[0].pair.name());
    CHECK(real_rows[i].instances[0].pair.h_assoc == real_rows[i].instances[0].assoc);
  }
  CHECK(exceptional == std::set<std::string>{"(e6(6), f4(4))", "(e6(2), f4(4))",
                                             "(e6(-14), f4(-20))", "(f4(4), so_{5,4})"});

  const std::vector<TableRow> complex_rows = empty_pair_table_complex(8);
  REQUIRE(complex_rows.size() == 5);
  for (std::size_t i = 0; i < complex_rows.size(); ++i)
    CHECK(complex_rows[i].id == "4." + std::to_string(i + 1));

  // Low-rank aliases: (so_5(C), so_4(C)) is also the (m,n) = (1,1) instance
  // of row 4.3, and (so_6(C), so_5(C)) is the n = 2 instance of row 4.1.
  const RealForm c2 = RealForm::complex_simple(CartanType(Family::C, 2));
  CHECK(classification_rows(find_pair(c2, rt::so_C(4)), 8) == "4.2,4.3");
  const RealForm a3 = RealForm::complex_simple(CartanType(Family::A, 3));
  CHECK(classification_rows(find_pair(a3, rt::so_C(5)), 8) == "4.1,4.2");
}

TEST_CASE("row 3.5 instances at rank <= 4, with the j <-> n-j collapse") {
  const std::vector<TableRow> rows = empty_pair_table_real(4);
  const TableRow& r35 = rows[4];
  REQUIRE(r35.id == "3.5");
  REQUIRE(r35.instances.size() == 4);  // (n,j) = (2,1), (3,1), (4,1), (4,2)
  CHECK(r35.instances[0].pair == find_pair(RealForm::sp_R(2), rt::sp_R(1) + rt::sp_R(1)));
  CHECK(r35.instances[1].pair == find_pair(RealForm::sp_R(3), rt::sp_R(2) + rt::sp_R(1)));
  CHECK(r35.instances[2].pair == find_pair(RealForm::sp_R(4), rt::sp_R(3) + rt::sp_R(1)));
  CHECK(r35.instances[3].pair == find_pair(RealForm::sp_R(4), rt::sp_R(2) + rt::sp_R(2)));
  // j and n-j name the same subalgebra, hence the same pair.
  CHECK(find_pair(RealForm::sp_R(3), rt::sp_R(1) + rt::sp_R(2)) == r35.instances[1].pair);
  CHECK(find_pair(RealForm::sp_R(4), rt::sp_R(1) + rt::sp_R(3)) == r35.instances[2].pair);
  // Dual cores: sp_{n-j,j}.
  CHECK(r35.instances[0].dual_core == RealForm::sp(1, 1));
  CHECK(r35.instances[1].dual_core == RealForm::sp(2, 1));
  CHECK(r35.instances[3].dual_core == RealForm::sp(2, 2));
}

TEST_CASE("real emptiness is inherited by the complexified pair, not conversely") {
  for (const SymmetricPair& p : all_catalog_pairs(6)) {
    if (p.kind != PairKind::RealAbsolutelySimple) continue;
    if (!decide(p).empty_intersection) continue;
    CHECK(decide(complexify_pair(p)).empty_intersection);
  }
  // Converse failure witness: (su*_4, sp_{1,1}) is non-empty, yet its
  // complexification (sl_4(C), sp_2(C)) is empty.
  const SymmetricPair witness = find_pair(RealForm::su_star(4), rt::sp(1, 1));
  CHECK(!decide(witness).empty_intersection);
  const SymmetricPair cw = complexify_pair(witness);
  CHECK(decide(cw).empty_intersection);
  CHECK(cw.kind == PairKind::ComplexHolomorphic);
}

TEST_CASE("properness of the minimal-orbit sl_2(R) action tracks emptiness") {
  {
    PropernessResult r = properness(find_pair(RealForm::so(4, 3), rt::so(3, 3)));
    CHECK(r.proper);
    CHECK(r.explanation.find("3.4") != std::string::npos);
    CHECK(r.explanation.find("proper") != std::string::npos);
  }
  {
    PropernessResult r = properness(riemannian_pair(RealForm::su(2, 1)));
    CHECK(!r.proper);
    CHECK(r.explanation.find("not proper") != std::string::npos);
    CHECK(r.explanation.find("m(g)=") != std::string::npos);
  }
  for (const SymmetricPair& p : all_catalog_pairs(5))
    CHECK(properness(p).proper == decide(p).empty_intersection);
}

TEST_CASE("bounded-multiplicity certificates under both dimension assumptions") {
  const SymmetricPair empty_pair = find_pair(RealForm::sl_R(4), rt::sp_R(2));
  {
    BmpCertificate c = bmp_certificate(empty_pair, DimAssumption::DimEqualsN);
    CHECK(c.bounded);
    CHECK(c.route == BmpRoute::ViaDimensionBound);
    CHECK(c.explanation.find("n(g_C)=3") != std::string::npos);
  }
  {
    BmpCertificate c = bmp_certificate(empty_pair, DimAssumption::DimEqualsM);
    CHECK(c.bounded);
    CHECK(c.route == BmpRoute::Combined);
  }
  {
    BmpCertificate c = bmp_certificate(riemannian_pair(RealForm::su(2, 1)),
                                       DimAssumption::DimEqualsM);
    CHECK(c.bounded);
    CHECK(c.route == BmpRoute::ViaHighestRootSymmetry);
  }
  for (const SymmetricPair& p : all_catalog_pairs(5)) {
    const bool empty = decide(p).empty_intersection;
    BmpCertificate cn = bmp_certificate(p, DimAssumption::DimEqualsN);
    CHECK(cn.bounded);
    CHECK(cn.route == BmpRoute::ViaDimensionBound);
    BmpCertificate cm = bmp_certificate(p, DimAssumption::DimEqualsM);
    CHECK(cm.bounded);
    CHECK(cm.route == (empty ? BmpRoute::Combined : BmpRoute::ViaHighestRootSymmetry));
  }
}

TEST_CASE("condition (*) for almost-irreducible restriction") {
  CHECK(almost_irreducible_star(find_pair(exc(Family::E, 6, 2), rt::exceptional(Family::F, 4, 4))));
  CHECK(almost_irreducible_star(find_pair(RealForm::sp_R(2), rt::sp_R(1) + rt::sp_R(1))));
  CHECK(!almost_irreducible_star(riemannian_pair(RealForm::sl_R(2))));

  // When m(g) = n(g_C), condition (*) is the same as empty intersection.
  for (const SymmetricPair& p : all_catalog_pairs(6)) {
    if (!p.g.absolutely_simple()) continue;
    if (min_real_orbit_half_dim(p.g) != min_orbit_half_dim(p.g.complexification())) continue;
    CHECK(almost_irreducible_star(p) == decide(p).empty_intersection);
  }

  // Not defined for complex g.
  const RealForm c2 = RealForm::complex_simple(CartanType(Family::C, 2));
  CHECK_THROWS_AS(almost_irreducible_star(find_pair(c2, rt::sl_R(2) + rt::sl_R(2))),
                  std::invalid_argument);
}

TEST_CASE("classification tables are deterministic across calls") {
  const std::vector<TableRow> a = empty_pair_table_real(6);
  const std::vector<TableRow> b = empty_pair_table_real(6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].family == b[i].family);
    REQUIRE(a[i].instances.size() == b[i].instances.size());
    for (std::size_t j = 0; j < a[i].instances.size(); ++j)
      CHECK(a[i].instances[j].pair == b[i].instances[j].pair);
  }
  const SymmetricPair p = find_pair(RealForm::sl_R(4), rt::sp_R(2));
  CHECK(classification_rows(p, 8) == classification_rows(p, 8));
}
