#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <minorb/names.hpp>
#include <minorb/realform.hpp>

#include <algorithm>
#include <vector>

using namespace minorb;

namespace {

CartanType ct(const std::string& s) { return parse_cartan_type(s); }

IVec iv(std::initializer_list<Int> xs) {
  IVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

std::vector<Int> positive_mult_multiset(const RestrictedRootSystem& r) {
  std::vector<Int> out;
  for (const auto& lam : r.positive_restricted_roots()) out.push_back(r.mult_of(lam));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<CartanType>& all_ambients() {
  static const std::vector<CartanType> v = [] {
    std::vector<CartanType> out;
    for (int n = 1; n <= 8; ++n) out.push_back(CartanType(Family::A, n));
    for (int n = 2; n <= 8; ++n) out.push_back(CartanType(Family::C, n));
    for (int n = 3; n <= 8; ++n) out.push_back(CartanType(Family::B, n));
    for (int n = 4; n <= 8; ++n) out.push_back(CartanType(Family::D, n));
    out.push_back(CartanType(Family::E, 6));
    out.push_back(CartanType(Family::E, 7));
    out.push_back(CartanType(Family::E, 8));
    out.push_back(CartanType(Family::F, 4));
    out.push_back(CartanType(Family::G, 2));
    return out;
  }();
  return v;
}

}  // namespace

TEST_CASE("low-rank coincidences construct one canonical form") {
  CHECK(RealForm::su(1, 1) == RealForm::sl_R(2));
  CHECK(RealForm::sp_R(1) == RealForm::sl_R(2));
  CHECK(RealForm::so(2, 1) == RealForm::sl_R(2));
  CHECK(RealForm::so(1, 2) == RealForm::sl_R(2));
  CHECK(RealForm::so(3, 1) == RealForm::complex_simple(ct("A1")));
  CHECK(RealForm::so(3, 2) == RealForm::sp_R(2));
  CHECK(RealForm::so(4, 1) == RealForm::sp(1, 1));
  CHECK(RealForm::so(5, 1) == RealForm::su_star(4));
  CHECK(RealForm::so(4, 2) == RealForm::su(2, 2));
  CHECK(RealForm::so(3, 3) == RealForm::sl_R(4));
  CHECK(RealForm::so_star(6) == RealForm::su(3, 1));
  CHECK(RealForm::so_star(8) == RealForm::so(6, 2));
  CHECK(RealForm::su(2, 3) == RealForm::su(3, 2));

  CHECK_THROWS_AS(RealForm::so(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::so(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::so_star(4), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::su(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::su_star(2), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::sp(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::exceptional(Family::E, 6, 14), std::invalid_argument);
  CHECK_THROWS_AS(RealForm::exceptional(Family::E, 9, 9), std::invalid_argument);
}

TEST_CASE("real form catalogs per complexification type") {
  auto names = [](CartanType t) {
    std::vector<std::string> out;
    for (const auto& f : catalog_real_forms(t)) out.push_back(f.name());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(names(ct("A1")) == std::vector<std::string>{"sl_2(R)"});
  CHECK(names(ct("A2")) == std::vector<std::string>{"sl_3(R)", "su_{2,1}"});
  CHECK(names(ct("A3")) ==
        std::vector<std::string>{"sl_4(R)", "su*_4", "su_{2,2}", "su_{3,1}"});
  CHECK(names(ct("C2")) == std::vector<std::string>{"sp_2(R)", "sp_{1,1}"});
  CHECK(names(ct("B3")) == std::vector<std::string>{"so_{4,3}", "so_{5,2}", "so_{6,1}"});
  CHECK(names(ct("D4")) ==
        std::vector<std::string>{"so_{4,4}", "so_{5,3}", "so_{6,2}", "so_{7,1}"});
  CHECK(names(ct("D5")) == std::vector<std::string>{"so*_{10}", "so_{5,5}", "so_{6,4}",
                                                    "so_{7,3}", "so_{8,2}", "so_{9,1}"});
  CHECK(names(ct("E6")) == std::vector<std::string>{"e6(-14)", "e6(-26)", "e6(2)", "e6(6)"});
  CHECK(names(ct("E8")) == std::vector<std::string>{"e8(-24)", "e8(8)"});
  CHECK(names(ct("G2")) == std::vector<std::string>{"g2(2)"});

  for (const auto& t : all_ambients()) {
    auto forms = catalog_real_forms(t);
    for (size_t i = 0; i < forms.size(); ++i) {
      CHECK(forms[i].ambient() == t);
      CHECK(forms[i].absolutely_simple());
      for (size_t j = i + 1; j < forms.size(); ++j) CHECK(!(forms[i] == forms[j]));
    }
  }
}

TEST_CASE("name parsing round-trips and flexible spellings") {
  for (const auto& t : all_ambients())
    for (const auto& f : catalog_real_forms(t)) CHECK(parse_real_form(f.name()) == f);
  for (const char* tname : {"A1", "A3", "C3", "B4", "D4", "E6", "F4", "G2"}) {
    RealForm f = RealForm::complex_simple(ct(tname));
    CHECK(parse_real_form(f.name()) == f);
  }

  CHECK(parse_real_form("su(4,2)") == RealForm::su(4, 2));
  CHECK(parse_real_form("SU_{4,2}") == RealForm::su(4, 2));
  CHECK(parse_real_form("su_4,2") == RealForm::su(4, 2));
  CHECK(parse_real_form("so*(10)") == RealForm::so_star(10));
  CHECK(parse_real_form("so*_{10}") == RealForm::so_star(10));
  CHECK(parse_real_form("e6(-14)") == RealForm::exceptional(Family::E, 6, -14));
  CHECK(parse_real_form("e6_-14") == RealForm::exceptional(Family::E, 6, -14));
  CHECK(parse_real_form("sp(3)(r)") == RealForm::sp_R(3));
  CHECK(parse_real_form("sl_2(C)") == RealForm::complex_simple(ct("A1")));
  CHECK(parse_real_form("so_5(c)") == RealForm::complex_simple(ct("C2")));
  CHECK(parse_real_form("so_{3,1}") == RealForm::complex_simple(ct("A1")));

  CHECK_THROWS_WITH_AS(parse_real_form("su_3"), doctest::Contains("compact"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_real_form("so_{2,2}"), doctest::Contains("not simple"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_real_form("R"), doctest::Contains("abelian"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("sl_3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("xyz_3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_real_form("e6(14)"), doctest::Contains("valid signatures"),
                       std::invalid_argument);
}

TEST_CASE("maximal compact subalgebras (complexified)") {
  auto k = [](const RealForm& f) { return f.maximal_compact_complexified().name(); };
  CHECK(k(RealForm::sl_R(2)) == "C");
  CHECK(k(RealForm::sl_R(5)) == "sp_2(C)");
  CHECK(k(RealForm::sl_R(6)) == "sl_4(C)");
  CHECK(k(RealForm::sl_R(7)) == "so_7(C)");
  CHECK(k(RealForm::su_star(6)) == "sp_3(C)");
  CHECK(k(RealForm::su(4, 2)) == "sl_4(C)+sl_2(C)+C");
  CHECK(k(RealForm::su(2, 1)) == "sl_2(C)+C");
  CHECK(k(RealForm::so(5, 4)) == "sp_2(C)+sl_2(C)+sl_2(C)");
  CHECK(k(RealForm::so(9, 1)) == "so_9(C)");
  CHECK(k(RealForm::so(6, 2)) == "sl_4(C)+C");
  CHECK(k(RealForm::sp_R(3)) == "sl_3(C)+C");
  CHECK(k(RealForm::sp(2, 1)) == "sp_2(C)+sl_2(C)");
  CHECK(k(RealForm::so_star(10)) == "sl_5(C)+C");
  CHECK(k(RealForm::complex_simple(ct("E6"))) == "e6(C)");

  // Exceptional forms: the signature equals dim g - 2 dim k.
  for (const auto& t : {ct("E6"), ct("E7"), ct("E8"), ct("F4"), ct("G2")})
    for (const auto& f : catalog_real_forms(t))
      CHECK(f.dim_real() - 2 * f.maximal_compact_complexified().dim() == f.signature());
}

TEST_CASE("hermitian forms are exactly those with central k") {
  CHECK(RealForm::sl_R(2).hermitian());
  CHECK(RealForm::su(4, 2).hermitian());
  CHECK(RealForm::so(7, 2).hermitian());
  CHECK(RealForm::sp_R(4).hermitian());
  CHECK(RealForm::so_star(12).hermitian());
  CHECK(RealForm::exceptional(Family::E, 6, -14).hermitian());
  CHECK(RealForm::exceptional(Family::E, 7, -25).hermitian());

  CHECK_FALSE(RealForm::sl_R(3).hermitian());
  CHECK_FALSE(RealForm::su_star(6).hermitian());
  CHECK_FALSE(RealForm::so(5, 3).hermitian());
  CHECK_FALSE(RealForm::sp(2, 2).hermitian());
  CHECK_FALSE(RealForm::exceptional(Family::E, 6, 6).hermitian());
  CHECK_FALSE(RealForm::exceptional(Family::G, 2, 2).hermitian());
  CHECK_FALSE(RealForm::complex_simple(ct("A1")).hermitian());
}

TEST_CASE("satake diagrams: frozen structures") {
  auto sat = [](const RealForm& f) { return f.satake().str(); };
  CHECK(sat(RealForm::sl_R(5)) == "black={} arrows={}");
  CHECK(sat(RealForm::su_star(6)) == "black={1,3,5} arrows={}");
  CHECK(sat(RealForm::su(4, 2)) == "black={3} arrows={1:5,2:4}");
  CHECK(sat(RealForm::su(3, 3)) == "black={} arrows={1:5,2:4}");
  CHECK(sat(RealForm::su(4, 1)) == "black={2,3} arrows={1:4}");
  CHECK(sat(RealForm::so(7, 2)) == "black={3,4} arrows={}");
  CHECK(sat(RealForm::so(5, 4)) == "black={} arrows={}");
  CHECK(sat(RealForm::so(5, 5)) == "black={} arrows={}");
  CHECK(sat(RealForm::so(6, 4)) == "black={} arrows={4:5}");
  CHECK(sat(RealForm::so(7, 3)) == "black={4,5} arrows={}");
  CHECK(sat(RealForm::sp_R(4)) == "black={} arrows={}");
  CHECK(sat(RealForm::sp(2, 2)) == "black={1,3} arrows={}");
  CHECK(sat(RealForm::sp(3, 1)) == "black={1,3,4} arrows={}");
  CHECK(sat(RealForm::so_star(10)) == "black={1,3} arrows={4:5}");
  CHECK(sat(RealForm::so_star(12)) == "black={1,3,5} arrows={}");
  CHECK(sat(RealForm::exceptional(Family::E, 6, 2)) == "black={} arrows={1:6,3:5}");
  CHECK(sat(RealForm::exceptional(Family::E, 6, -14)) == "black={3,4,5} arrows={1:6}");
  CHECK(sat(RealForm::exceptional(Family::E, 6, -26)) == "black={2,3,4,5} arrows={}");
  CHECK(sat(RealForm::exceptional(Family::E, 7, -5)) == "black={2,5,7} arrows={}");
  CHECK(sat(RealForm::exceptional(Family::F, 4, -20)) == "black={1,2,3} arrows={}");
  CHECK(sat(RealForm::exceptional(Family::G, 2, 2)) == "black={} arrows={}");
}

TEST_CASE("satake involution acts as expected on simple roots") {
  // su_{2,2}: theta is minus the arrow flip.
  IMat th = satake_involution(RealForm::su(2, 2).satake());
  CHECK(IVec(th.col(0)) == iv({0, 0, -1}));
  CHECK(IVec(th.col(1)) == iv({0, -1, 0}));
  // su_{3,1}: theta(a1) = -(a2+a3) after conjugating through the black node.
  th = satake_involution(RealForm::su(3, 1).satake());
  CHECK(IVec(th.col(0)) == iv({0, -1, -1}));
  CHECK(IVec(th.col(1)) == iv({0, 1, 0}));  // black node fixed
  // Split form: theta = -1.
  th = satake_involution(RealForm::sp_R(3).satake());
  CHECK(th == IMat(-IMat::Identity(3, 3)));
}

TEST_CASE("restricted root systems: labels and multiplicities (classical)") {
  struct Row {
    RealForm f;
    const char* label;
    std::vector<std::pair<std::vector<Int>, Int>> mults;
  };
  const std::vector<Row> rows = {
      {RealForm::sl_R(2), "A1", {{{1}, 1}}},
      {RealForm::sl_R(3), "A2", {{{1, 0}, 1}, {{1, 1}, 1}}},
      {RealForm::sl_R(6), "A5", {{{1, 0, 0, 0, 0}, 1}}},
      {RealForm::su_star(6), "A2", {{{1, 0}, 4}, {{1, 1}, 4}}},
      {RealForm::su_star(8), "A3", {{{1, 0, 0}, 4}}},
      {RealForm::su(2, 1), "BC1", {{{1}, 2}, {{2}, 1}}},
      {RealForm::su(3, 2), "BC2", {{{1, 0}, 2}, {{0, 1}, 2}, {{0, 2}, 1}, {{1, 1}, 2}}},
      {RealForm::su(4, 2), "BC2", {{{1, 0}, 2}, {{0, 1}, 4}, {{0, 2}, 1}}},
      {RealForm::su(3, 3), "C3", {{{1, 0, 0}, 2}, {{0, 0, 1}, 1}, {{1, 1, 1}, 2}}},
      {RealForm::so(4, 3), "B3", {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}},
      {RealForm::so(5, 3), "B3", {{{1, 0, 0}, 1}, {{0, 0, 1}, 2}}},
      {RealForm::so(5, 4), "B4", {{{1, 0, 0, 0}, 1}, {{0, 0, 0, 1}, 1}}},
      {RealForm::so(8, 2), "B2", {{{1, 0}, 1}, {{0, 1}, 6}}},
      {RealForm::so(6, 2), "B2", {{{1, 0}, 1}, {{0, 1}, 4}}},
      {RealForm::so(4, 4), "D4", {{{1, 0, 0, 0}, 1}}},
      {RealForm::so(5, 5), "D5", {{{1, 0, 0, 0, 0}, 1}}},
      {RealForm::so(9, 1), "A1", {{{1}, 8}}},
      {RealForm::sp_R(2), "C2", {{{1, 0}, 1}, {{0, 1}, 1}}},
      {RealForm::sp_R(4), "C4", {{{1, 0, 0, 0}, 1}, {{0, 0, 0, 1}, 1}}},
      {RealForm::sp(1, 1), "A1", {{{1}, 3}}},
      {RealForm::sp(2, 1), "BC1", {{{1}, 4}, {{2}, 3}}},
      {RealForm::sp(3, 1), "BC1", {{{1}, 8}, {{2}, 3}}},
      {RealForm::sp(2, 2), "C2", {{{1, 0}, 4}, {{0, 1}, 3}, {{1, 1}, 4}, {{2, 1}, 3}}},
      {RealForm::sp(3, 2), "BC2", {{{1, 0}, 4}, {{0, 1}, 4}, {{0, 2}, 3}}},
      {RealForm::so_star(10), "BC2", {{{1, 0}, 4}, {{0, 1}, 4}, {{0, 2}, 1}}},
      {RealForm::so_star(12), "C3", {{{1, 0, 0}, 4}, {{0, 0, 1}, 1}}},
      {RealForm::so_star(14), "BC3", {{{1, 0, 0}, 4}, {{0, 0, 1}, 4}, {{0, 0, 2}, 1}}},
  };
  for (const auto& row : rows) {
    RestrictedRootSystem r = row.f.restricted_roots();
    CAPTURE(row.f.name());
    CHECK(r.label == row.label);
    for (const auto& [coords, m] : row.mults) {
      IVec v(static_cast<int>(coords.size()));
      for (size_t i = 0; i < coords.size(); ++i) v(static_cast<int>(i)) = coords[i];
      CHECK(r.mult_of(v) == m);
    }
  }
}

TEST_CASE("restricted root systems: exceptional forms") {
  auto r = RealForm::exceptional(Family::E, 6, 6).restricted_roots();
  CHECK(r.label == "E6");
  CHECK(r.dim_m == 0);

  r = RealForm::exceptional(Family::E, 6, 2).restricted_roots();
  CHECK(r.label == "F4");
  CHECK(r.dim_m == 2);
  CHECK(positive_mult_multiset(r) ==
        std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                         2, 2});

  r = RealForm::exceptional(Family::E, 6, -14).restricted_roots();
  CHECK(r.label == "BC2");
  CHECK(r.dim_m == 16);
  CHECK(positive_mult_multiset(r) == std::vector<Int>{1, 1, 6, 6, 8, 8});

  r = RealForm::exceptional(Family::E, 6, -26).restricted_roots();
  CHECK(r.label == "A2");
  CHECK(r.dim_m == 28);
  CHECK(positive_mult_multiset(r) == std::vector<Int>{8, 8, 8});

  r = RealForm::exceptional(Family::E, 7, 7).restricted_roots();
  CHECK(r.label == "E7");

  r = RealForm::exceptional(Family::E, 7, -5).restricted_roots();
  CHECK(r.label == "F4");
  CHECK(r.dim_m == 9);

  r = RealForm::exceptional(Family::E, 7, -25).restricted_roots();
  CHECK(r.label == "C3");
  CHECK(r.dim_m == 28);
  CHECK(positive_mult_multiset(r) == std::vector<Int>{1, 1, 1, 8, 8, 8, 8, 8, 8});

  r = RealForm::exceptional(Family::E, 8, 8).restricted_roots();
  CHECK(r.label == "E8");

  r = RealForm::exceptional(Family::E, 8, -24).restricted_roots();
  CHECK(r.label == "F4");
  CHECK(r.dim_m == 28);

  r = RealForm::exceptional(Family::F, 4, 4).restricted_roots();
  CHECK(r.label == "F4");

  r = RealForm::exceptional(Family::F, 4, -20).restricted_roots();
  CHECK(r.label == "BC1");
  CHECK(r.dim_m == 21);
  CHECK(r.mult_of(iv({1})) == 8);
  CHECK(r.mult_of(iv({2})) == 7);

  r = RealForm::exceptional(Family::G, 2, 2).restricted_roots();
  CHECK(r.label == "G2");

  r = RealForm::complex_simple(ct("C2")).restricted_roots();
  CHECK(r.label == "C2");
  CHECK(r.dim_g == 20);
  CHECK(r.dim_m == 2);
  CHECK(r.mult_of(iv({1, 0})) == 2);
}

TEST_CASE("restricted systems pass internal consistency for every catalog form") {
  // restricted_roots() cross-checks the involution postconditions and the
  // dimension bookkeeping dim k = dim m + sum of positive multiplicities.
  for (const auto& t : all_ambients()) {
    for (const auto& f : catalog_real_forms(t)) {
      CAPTURE(f.name());
      RestrictedRootSystem r;
      CHECK_NOTHROW(r = f.restricted_roots());
      CHECK(!r.label.empty());
      CHECK(r.rank >= 1);
      CHECK(r.dim_m >= 0);
      // dim g = dim m + dim a + total multiplicity.
      CHECK(r.dim_g == r.dim_m + r.rank + r.total_mult());
    }
  }
}

TEST_CASE("involution classification labels") {
  CHECK(cartan_class(RealForm::sl_R(5)) == "AI");
  CHECK(cartan_class(RealForm::su_star(6)) == "AII");
  CHECK(cartan_class(RealForm::su(4, 2)) == "AIII");
  CHECK(cartan_class(RealForm::su(4, 1)) == "AIV");
  CHECK(cartan_class(RealForm::so(5, 2)) == "BI");
  CHECK(cartan_class(RealForm::so(6, 1)) == "BII");
  CHECK(cartan_class(RealForm::sp_R(4)) == "CI");
  CHECK(cartan_class(RealForm::sp(3, 1)) == "CII");
  CHECK(cartan_class(RealForm::so(6, 4)) == "DI");
  CHECK(cartan_class(RealForm::so(9, 1)) == "DII");
  CHECK(cartan_class(RealForm::so_star(10)) == "DIII");
  CHECK(cartan_class(RealForm::exceptional(Family::E, 6, -26)) == "EIV");
  CHECK(cartan_class(RealForm::exceptional(Family::E, 8, -24)) == "EIX");
  CHECK(cartan_class(RealForm::exceptional(Family::F, 4, -20)) == "FII");
  CHECK(cartan_class(RealForm::exceptional(Family::G, 2, 2)) == "G");
}

TEST_CASE("reductive descriptors: dims, names, complexifications") {
  RealReductiveType t = parse_real_reductive("su_{5,1}+sl_2(R)");
  CHECK(t.dim_real() == 38);
  CHECK(t.complexification().name() == "sl_6(C)+sl_2(C)");
  CHECK(t.maximal_compact_complexified().name() == "sl_5(C)+C^2");
  CHECK(parse_real_reductive(t.name()) == t);

  t = parse_real_reductive("su*_6+su_2+R");
  CHECK(t.name() == "su*_6+su_2+R");
  CHECK(t.dim_real() == 35 + 3 + 1);
  CHECK(t.complexification().name() == "sl_6(C)+sl_2(C)+C");

  t = parse_real_reductive("sl_4(C)+C");
  CHECK(t.dim_real() == 32);
  CHECK(t.complexification().name() == "sl_4(C)+sl_4(C)+C^2");
  CHECK(t.maximal_compact_complexified().name() == "sl_4(C)+C");

  t = parse_real_reductive("so_4");
  CHECK(t.name() == "su_2+su_2");
  CHECK(t.dim_real() == 6);

  t = parse_real_reductive("so_{2,2}+so_2");
  CHECK(t.name() == "sl_2(R)+sl_2(R)+so_2");
  CHECK(t.dim_real() == 7);

  t = parse_real_reductive("gl_3(C)");
  CHECK(t == parse_real_reductive("sl_3(C)+C"));

  t = parse_real_reductive("so_4(C)");
  CHECK(t.name() == "sl_2(C)+sl_2(C)");

  t = parse_real_reductive("0");
  CHECK(t.is_zero());
  CHECK(t.name() == "0");

  // so_{1,1} is the split line; so*_4 decomposes.
  CHECK(parse_real_reductive("so_{1,1}").name() == "R");
  CHECK(parse_real_reductive("so*_4").name() == "sl_2(R)+su_2");
  CHECK(parse_real_reductive("su*_2").name() == "su_2");
  CHECK(parse_real_reductive("so_3").name() == "su_2");
  CHECK(parse_real_reductive("sp_1").name() == "su_2");
  CHECK(parse_real_reductive("so_6").name() == "su_4");
  CHECK(parse_real_reductive("so_2").center_compact() == 1);
}
