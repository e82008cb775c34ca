#include <minorb/classify.hpp>

#include <minorb/descriptors.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace minorb {

namespace {

std::string verdict_word(bool empty) { return empty ? "empty" : "non-empty"; }

// An instance is only admitted after its published columns survive the
// catalog: the pair must exist, its stored associate must equal the table's
// h^a column, and the computed dual core must equal the table's dual column.
TableInstance instance(const RealForm& g, const RealReductiveType& h,
                       const RealForm& dual_core, const RealReductiveType& assoc) {
  TableInstance ti{find_pair(g, h), dual_core, assoc};
  if (ti.pair.h_assoc != assoc)
    throw CatalogIntegrityError("table instance " + ti.pair.name() +
                                ": catalog associate " + ti.pair.h_assoc.name() +
                                " != published column " + assoc.name());
  const DualResult d = dual(ti.pair);
  if (d.g_d0 != dual_core)
    throw CatalogIntegrityError("table instance " + ti.pair.name() + ": computed dual core " +
                                d.g_d0.name() + " != published column " + dual_core.name());
  return ti;
}

const std::pair<std::vector<TableRow>, std::vector<TableRow>>& tables_at(Int bound) {
  static std::map<Int, std::pair<std::vector<TableRow>, std::vector<TableRow>>> cache;
  auto it = cache.find(bound);
  if (it == cache.end())
    it = cache
             .emplace(bound, std::pair(empty_pair_table_real(bound),
                                       empty_pair_table_complex(bound)))
             .first;
  return it->second;
}

}  // namespace

std::string Decision::str() const {
  std::string s = pair.name() + ": " + verdict_word(empty_intersection);
  s += "  m(g)=" + std::to_string(route_a.m_g) + " n(g_C)=" + std::to_string(route_a.n_gC) +
       " m(g^d)=" + std::to_string(route_a.m_gd);
  s += "  orbit " + route_b.orbit.str() + " vs " + route_b.dual_diagram;
  if (!table_rows.empty()) s += "  rows " + table_rows;
  return s;
}

Decision decide(const SymmetricPair& p) {
  DualResult dl = dual(p);

  DimensionRoute ra;
  ra.m_g = min_real_orbit_half_dim(p.g);
  ra.n_gC = min_orbit_half_dim(p.g.complexification());
  ra.m_gd = dl.m_gd;
  ra.empty = ra.m_g == ra.n_gC && ra.n_gC < ra.m_gd;

  // A Hermitian g carries two minimal real nilpotent orbits, but both lie in
  // the single complex orbit O^C_{min,g}; the decision concerns that complex
  // orbit, so the two-orbit case never splits the verdict.
  //
  // For holomorphic pairs O^C_{min,g} is the paired orbit O x O and
  // g^d = g^d_0 + g^d_0, so meeting is factor-wise: test the factor orbit of
  // t against g^d_0.
  const bool holomorphic = p.kind == PairKind::ComplexHolomorphic;
  DiagramRoute rb{holomorphic ? min_complex_orbit(p.g.ambient()) : smallest_orbit_meeting(p.g),
                  "", false};
  const RealForm& core = dl.g_d0;
  rb.empty = !orbit_meets_real_form(rb.orbit, core);
  rb.dual_diagram = core.absolutely_simple()
                        ? core.name() + ": " + core.satake().str()
                        : core.name() + ": paired complex form (always met)";

  if (ra.empty != rb.empty)
    throw CatalogIntegrityError(
        "route disagreement for " + p.name() + " [" + pair_kind_name(p.kind) +
        "]: dimension route says " + verdict_word(ra.empty) +
        " (m(g)=" + std::to_string(ra.m_g) + ", n(g_C)=" + std::to_string(ra.n_gC) +
        ", m(g^d)=" + std::to_string(ra.m_gd) + ") but diagram route says " +
        verdict_word(rb.empty) + " (orbit " + rb.orbit.str() + " vs " + rb.dual_diagram + ")");

  std::string rows;
  if (ra.empty) {
    rows = classification_rows(p, p.g.ambient().rank());
    if (rows.empty())
      throw CatalogIntegrityError("empty intersection for " + p.name() +
                                  " but no published table row covers it; the tables claim "
                                  "to be exhaustive");
  }
  return Decision{p, std::move(dl), ra, std::move(rb), ra.empty, true, std::move(rows)};
}

std::vector<Decision> enumerate_empty(Int bound) {
  std::vector<Decision> out;
  for (const SymmetricPair& p : all_catalog_pairs(bound)) {
    Decision d = decide(p);
    if (d.empty_intersection) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Decision& a, const Decision& b) {
    return a.pair.name() < b.pair.name();
  });
  return out;
}

std::vector<TableRow> empty_pair_table_real(Int bound) {
  std::vector<TableRow> rows;

  {
    TableRow r{"3.1", "(sl_{2n}(R), sp_n(R)), n >= 2", {}};
    for (Int n = 2; 2 * n - 1 <= bound; ++n)
      r.instances.push_back(instance(RealForm::sl_R(int(2 * n)), rt::sp_R(n),
                                     RealForm::su_star(int(2 * n)),
                                     rt::sl_C(n) + rt::center_u1()));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.2",
               "(su_{2n-2j,2j}, sp_{n-j,j}), n >= 2, 1 <= j <= n/2 "
               "(j and n-j give the same pair)",
               {}};
    for (Int n = 2; 2 * n - 1 <= bound; ++n)
      for (Int j = 1; 2 * j <= n; ++j)
        r.instances.push_back(instance(RealForm::su(int(2 * n - 2 * j), int(2 * j)),
                                       rt::sp(n - j, j), RealForm::su_star(int(2 * n)),
                                       rt::sp(n - j, j)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.3", "(su_{n,n}, sp_n(R)), n >= 2", {}};
    for (Int n = 2; 2 * n - 1 <= bound; ++n)
      r.instances.push_back(instance(RealForm::su(int(n), int(n)), rt::sp_R(n),
                                     RealForm::su_star(int(2 * n)), rt::so_star(2 * n)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.4", "(so_{m,n}, so_{m-1,n}), m, n >= 2, (m,n) != (2,2)", {}};
    for (Int p = 2; p + 1 <= 2 * bound; ++p)
      for (Int q = 2; q <= p; ++q) {
        if (p == 2 && q == 2) continue;
        if ((p + q) / 2 > bound) continue;
        const RealForm g = RealForm::so(int(p), int(q));
        r.instances.push_back(instance(g, rt::so(p - 1, q), RealForm::so(int(p + q - 1), 1),
                                       rt::so(q, 1) + rt::so(p - 1, 0)));
        if (p != q)
          r.instances.push_back(instance(g, rt::so(p, q - 1), RealForm::so(int(p + q - 1), 1),
                                         rt::so(p, 1) + rt::so(q - 1, 0)));
      }
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.5",
               "(sp_n(R), sp_{n-j}(R)+sp_j(R)), n >= 2, 1 <= j <= n/2 "
               "(j and n-j give the same pair)",
               {}};
    for (Int n = 2; n <= bound; ++n)
      for (Int j = 1; 2 * j <= n; ++j)
        r.instances.push_back(instance(RealForm::sp_R(int(n)), rt::sp_R(n - j) + rt::sp_R(j),
                                       RealForm::sp(int(n - j), int(j)),
                                       rt::su(n - j, j) + rt::center_u1()));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.6", "(sp_{2n}(R), sp_n(C)), n >= 1", {}};
    for (Int n = 1; 2 * n <= bound; ++n)
      r.instances.push_back(instance(RealForm::sp_R(int(2 * n)), rt::sp_C(n),
                                     RealForm::sp(int(n), int(n)), rt::sp_C(n)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.7", "(e6(6), f4(4))", {}};
    if (bound >= 6)
      r.instances.push_back(instance(RealForm::exceptional(Family::E, 6, 6),
                                     rt::exceptional(Family::F, 4, 4),
                                     RealForm::exceptional(Family::E, 6, -26),
                                     rt::su_star(6) + rt::su(2, 0)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.8", "(e6(2), f4(4))", {}};
    if (bound >= 6)
      r.instances.push_back(instance(RealForm::exceptional(Family::E, 6, 2),
                                     rt::exceptional(Family::F, 4, 4),
                                     RealForm::exceptional(Family::E, 6, -26), rt::sp(3, 1)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.9", "(e6(-14), f4(-20))", {}};
    if (bound >= 6)
      r.instances.push_back(instance(RealForm::exceptional(Family::E, 6, -14),
                                     rt::exceptional(Family::F, 4, -20),
                                     RealForm::exceptional(Family::E, 6, -26),
                                     rt::exceptional(Family::F, 4, -20)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"3.10", "(f4(4), so_{5,4})", {}};
    if (bound >= 4)
      r.instances.push_back(instance(RealForm::exceptional(Family::F, 4, 4), rt::so(5, 4),
                                     RealForm::exceptional(Family::F, 4, -20),
                                     rt::sp(2, 1) + rt::su(2, 0)));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TableRow> empty_pair_table_complex(Int bound) {
  std::vector<TableRow> rows;

  {
    TableRow r{"4.1", "(sl_{2n}(C), sp_n(C)), n >= 2", {}};
    for (Int n = 2; 2 * n - 1 <= bound; ++n)
      r.instances.push_back(
          instance(RealForm::complex_simple(CartanType(Family::A, int(2 * n - 1))),
                   rt::sp_C(n), RealForm::su_star(int(2 * n)), rt::su_star(2 * n)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"4.2", "(so_n(C), so_{n-1}(C)), n >= 5", {}};
    for (Int n = 5; n / 2 <= bound; ++n) {
      // rt::so_C canonicalizes the low ranks (so_5 = sp_2, so_6 = sl_4), so
      // its single simple factor is the complex form of the right type.
      const RealForm g = rt::so_C(n).noncompact().front();
      r.instances.push_back(
          instance(g, rt::so_C(n - 1), RealForm::so(int(n - 1), 1), rt::so(n - 1, 1)));
    }
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"4.3", "(sp_{m+n}(C), sp_m(C)+sp_n(C)), m >= n >= 1", {}};
    for (Int m = 1; m + 1 <= bound; ++m)
      for (Int n = 1; n <= m && m + n <= bound; ++n)
        r.instances.push_back(
            instance(RealForm::complex_simple(CartanType(Family::C, int(m + n))),
                     rt::sp_C(m) + rt::sp_C(n), RealForm::sp(int(m), int(n)), rt::sp(m, n)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"4.4", "(e6(C), f4(C))", {}};
    if (bound >= 6)
      r.instances.push_back(
          instance(RealForm::complex_simple(CartanType(Family::E, 6)),
                   rt::form(RealForm::complex_simple(CartanType(Family::F, 4))),
                   RealForm::exceptional(Family::E, 6, -26),
                   rt::exceptional(Family::E, 6, -26)));
    rows.push_back(std::move(r));
  }
  {
    TableRow r{"4.5", "(f4(C), so_9(C))", {}};
    if (bound >= 4)
      r.instances.push_back(instance(RealForm::complex_simple(CartanType(Family::F, 4)),
                                     rt::so_C(9), RealForm::exceptional(Family::F, 4, -20),
                                     rt::exceptional(Family::F, 4, -20)));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string classification_rows(const SymmetricPair& p, Int bound) {
  std::string out;
  const auto scan = [&](const std::vector<TableRow>& rows) {
    for (const TableRow& r : rows)
      for (const TableInstance& ti : r.instances)
        if (ti.pair == p) {
          if (!out.empty()) out += ",";
          out += r.id;
          break;
        }
  };
  const auto& [real_rows, complex_rows] = tables_at(bound);
  scan(real_rows);
  scan(complex_rows);
  return out;
}

PropernessResult properness(const SymmetricPair& p) {
  const Decision d = decide(p);
  PropernessResult r;
  r.proper = d.empty_intersection;
  const std::string dims = "m(g)=" + std::to_string(d.route_a.m_g) +
                           ", n(g_C)=" + std::to_string(d.route_a.n_gC) +
                           ", m(g^d)=" + std::to_string(d.route_a.m_gd);
  if (r.proper)
    r.explanation = "proper: O^C_{min,g} misses g^d (" + dims + "), table row(s) " +
                    d.table_rows + "; the sl_2(R) spanned by a minimal real nilpotent "
                    "element acts properly on G/H^a";
  else
    r.explanation = "not proper: O^C_{min,g} meets g^d (" + dims +
                    "), so no empty-intersection table row applies and the sl_2(R) orbit "
                    "map on G/H^a is not proper";
  return r;
}

BmpCertificate bmp_certificate(const SymmetricPair& p, DimAssumption a) {
  BmpCertificate c;
  c.bounded = true;
  c.assumption = a;
  const Decision d = decide(p);
  const std::string n_str = std::to_string(d.route_a.n_gC);
  const std::string m_str = std::to_string(d.route_a.m_g);
  if (a == DimAssumption::DimEqualsN) {
    c.route = BmpRoute::ViaDimensionBound;
    c.explanation = "attached-orbit half-dimension n(g_C)=" + n_str +
                    " is minimal, so restriction to any symmetric subgroup has bounded "
                    "multiplicity by the dimension bound alone";
  } else if (!d.empty_intersection) {
    c.route = BmpRoute::ViaHighestRootSymmetry;
    c.explanation = "O^C_{min,g} meets g^d, so the highest-root sl_2 symmetry transfers "
                    "across the dual pair and bounds multiplicities at half-dimension "
                    "m(g)=" + m_str;
  } else {
    c.route = BmpRoute::Combined;
    c.explanation = "O^C_{min,g} misses g^d (m(g)=" + m_str + " = n(g_C)=" + n_str +
                    " < m(g^d)=" + std::to_string(d.route_a.m_gd) +
                    "); boundedness combines the dimension bound with the transfer along "
                    "the dual pair";
  }
  return c;
}

bool almost_irreducible_star(const SymmetricPair& p) {
  if (!p.g.absolutely_simple())
    throw std::invalid_argument("almost_irreducible_star: " + p.g.name() +
                                " is not absolutely simple");
  return min_orbit_half_dim(p.g.complexification()) < dual(p).m_gd;
}

}  // namespace minorb
