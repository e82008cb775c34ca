#pragma once

// Decision engine: does the complex nilpotent orbit O^C_{min,g} attached to a
// symmetric pair (g, h) intersect the dual real form g^d of g_C?
//
// Two independent routes answer the question, and decide() runs both:
//
//   route A (dimension counts): the intersection is empty exactly when
//     m(g) = n(g_C) < m(g^d), using only the closed-form orbit
//     half-dimensions of the orbit layer;
//   route B (diagram matching): the intersection is empty exactly when the
//     weighted Dynkin diagram of the relevant orbit fails the Satake matching
//     test against the dual core g^d_0, using only sl2-triple combinatorics
//     and the Satake catalog.
//
// A disagreement between the routes throws CatalogIntegrityError with a full
// diagnostic dump, so every call to decide() doubles as a cross-check of the
// orbit layer against the real-form layer.
//
// The classifier also publishes the two reference tables behind the CLI's
// `tables` command that concern symmetric pairs:
//
//   table 3: all pairs with absolutely simple g and empty intersection
//            (ten parameterized rows, six classical and four exceptional);
//   table 4: all pairs with g carrying a complex structure and empty
//            intersection (five rows, all with holomorphic h;
//            antiholomorphic pairs never have empty intersection).
//
// (Tables 1 and 2 -- the minimal-orbit half-dimensions n by type and the real
// forms with m(g) > n(g_C) -- are served directly by the orbit layer.)
//
// Applications built on the decision: properness of the SL_2(R) action on
// G/H^a induced by a minimal real orbit, bounded-multiplicity restriction
// certificates, and the almost-irreducibility condition (*).

#include <minorb/orbits.hpp>
#include <minorb/pairs.hpp>

#include <string>
#include <vector>

namespace minorb {

// Route A record: the three half-dimensions and the verdict they force.
struct DimensionRoute {
  Int m_g = 0;   // half-dim of O^C_{min,g}
  Int n_gC = 0;  // half-dim of the minimal nilpotent orbit of g_C
  Int m_gd = 0;  // half-dim of O^C_{min,g^d} (doubled for holomorphic pairs)
  bool empty = false;  // m_g == n_gC && n_gC < m_gd
};

// Route B record: the orbit whose weighted diagram was tested, a rendering of
// the matching target, and the verdict.  For absolutely simple and
// antiholomorphic pairs the orbit is O^C_{min,g} itself; for holomorphic
// pairs O^C_{min,g} is the paired orbit O x O and g^d = g^d_0 + g^d_0, so the
// test is factor-wise and `orbit` records the factor orbit of t tested
// against the Satake diagram of g^d_0.
struct DiagramRoute {
  OrbitDescriptor orbit;
  std::string dual_diagram;  // "g^d_0 name: black={..} arrows={..}"
  bool empty = false;        // the orbit has no points in the dual form
};

// The full verdict for one pair.  `agreement` is true in every returned
// Decision: a route disagreement never returns, it throws.
struct Decision {
  SymmetricPair pair;
  DualResult dual;
  DimensionRoute route_a;
  DiagramRoute route_b;
  bool empty_intersection = false;
  bool agreement = true;
  // Comma-joined ids of the published table rows the pair instantiates
  // ("3.5" or "4.2,4.3"); empty string when the intersection is non-empty.
  std::string table_rows;

  std::string str() const;  // one-line summary for logs and diagnostics
};

// Decide the pair by both routes.  Throws CatalogIntegrityError if the routes
// disagree, or if the verdict is empty but no published table row covers the
// pair (the tables claim to be exhaustive, so this, too, is a self-check).
Decision decide(const SymmetricPair& p);

// Decisions for every catalog pair over every simple type with classical rank
// <= bound (exceptional types included once their rank fits) whose verdict is
// empty, sorted by canonical pair name.  Deterministic.
std::vector<Decision> enumerate_empty(Int bound);

// One published instance of a table row: the catalog pair together with the
// table's dual and associate columns.  `dual_core` is g^d for table 3 rows
// and g^d_0 for table 4 rows (where g^d = g^d_0 + g^d_0); for table 4 rows
// the associate column equals the dual core viewed as a reductive type.
// Instances are validated on construction: dual(pair).g_d0 must equal
// dual_core and pair.h_assoc must equal assoc, else CatalogIntegrityError.
struct TableInstance {
  SymmetricPair pair;
  RealForm dual_core;
  RealReductiveType assoc;
};

// One parameterized row of a published table, with every instance whose
// ambient rank fits the bound.  Rows are present (possibly with no instances)
// at every bound, so ids are stable.
struct TableRow {
  std::string id;      // "3.1" .. "3.10", "4.1" .. "4.5"
  std::string family;  // pattern with side conditions, e.g.
                       // "(sl_{2n}(R), sp_n(R)), n >= 2"
  std::vector<TableInstance> instances;
};

// Table 3: pairs with absolutely simple g and empty intersection.
std::vector<TableRow> empty_pair_table_real(Int bound);
// Table 4: pairs with complex g and empty intersection (holomorphic h only).
std::vector<TableRow> empty_pair_table_complex(Int bound);

// Comma-joined ids of the table rows (within bound) instantiated by p, in
// table order; empty string when none.  Tables are cached per bound.
std::string classification_rows(const SymmetricPair& p, Int bound);

// Properness of the SL_2(R) action on G/H^a through the sl_2 copy spanned by
// a minimal real nilpotent element of g: proper exactly when the intersection
// is empty.  The explanation names the table rows that witness properness, or
// reports the half-dimension coincidence that defeats it.
struct PropernessResult {
  bool proper = false;
  std::string explanation;
};
PropernessResult properness(const SymmetricPair& p);

// Bounded-multiplicity certificates for restricting small representations of
// G to H, under one of two assumptions on the representation's attached-orbit
// half-dimension.
enum class DimAssumption {
  DimEqualsN,  // half-dimension equals n(g_C) (minimal complex orbit)
  DimEqualsM,  // half-dimension equals m(g) (minimal real orbit)
};
enum class BmpRoute {
  ViaDimensionBound,       // the n(g_C) dimension bound applies directly
  ViaHighestRootSymmetry,  // O^C_{min,g} meets g^d: transfer along the dual
  Combined,                // empty intersection: dimension bound + transfer
};
struct BmpCertificate {
  bool bounded = true;  // boundedness holds for every symmetric pair
  DimAssumption assumption{};
  BmpRoute route{};
  std::string explanation;
};
BmpCertificate bmp_certificate(const SymmetricPair& p, DimAssumption a);

// Condition (*) for almost-irreducible restriction: n(g_C) < m(g^d).
// Requires absolutely simple g (throws std::invalid_argument otherwise).
// When m(g) = n(g_C) this coincides with empty intersection.
bool almost_irreducible_star(const SymmetricPair& p);

}  // namespace minorb
