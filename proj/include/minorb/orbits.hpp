#pragma once

// Minimal nilpotent orbits, complex and real.
//
// For a complex simple algebra the minimal non-zero nilpotent orbit is unique;
// its half-dimension n and weighted Dynkin diagram have closed forms.  For a
// non-compact real form g of g_C, the smallest complex nilpotent orbit meeting
// g is also unique; its half-dimension m (= half the real dimension of a
// minimal real nilpotent orbit of g) satisfies m >= n, with strict inequality
// exactly for five families of forms.  Whether a given complex orbit meets a
// given real form is decided combinatorially: the orbit's weighted diagram
// must vanish on the black nodes of the form's Satake diagram and agree
// across its arrows, up to a graph automorphism of the ambient diagram.
//
// Orbit descriptors here name orbits up to the full automorphism group of the
// ambient algebra, not just inner automorphisms: the two very even orbits of
// D_n share one descriptor, and on D_4 triality identifies [3,1^5] with both.
// The automorphism quantifier in the matching test is what makes the answers
// independent of the marking positions chosen by the Satake catalog.

#include <minorb/realform.hpp>
#include <minorb/rootsys.hpp>

#include <string>

namespace minorb {

// Half-dimension n of the minimal nilpotent orbit:
//   A_n: n,  B_n: 2n-2,  C_n: n,  D_n: 2n-3,  E6: 11,  E7: 17,  E8: 29,
//   F4: 8,  G2: 3.
Int min_orbit_half_dim(CartanType t);

// Additive over simple factors; abelian parts contribute nothing.  (For a
// reductive algebra this is the half-dimension of the smallest non-zero
// nilpotent orbit, which lives in a single factor.)
Int min_orbit_half_dim(const ComplexReductiveType& t);

// A complex nilpotent orbit, named by its weighted Dynkin diagram.  When
// `paired` is set the descriptor denotes the product orbit O x O inside the
// ambient-plus-ambient algebra (the complexification of `ambient` viewed as a
// real algebra); `half_dim` then counts both factors.
struct OrbitDescriptor {
  CartanType ambient;
  bool paired = false;
  WeightedDynkinDiagram wdd;
  Int half_dim = 0;
  std::string label;  // "minimal", a partition "[2,2,1,1]", "2A1", "A1~"

  std::string str() const;  // "A3 (0,2,0) label=[2,2] half_dim=4"

  friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

// The only way descriptors are built: the half-dimension is recomputed from
// the grading defined by the weights (dominated and validated), never taken
// on trust.  `weights` are coweight coordinates of any characteristic element.
OrbitDescriptor make_orbit_descriptor(CartanType t, const IVec& weights, std::string label,
                                      bool paired = false);

// The minimal non-zero nilpotent orbit of the simple type t: weighted diagram
// of the highest-root coroot, half-dimension min_orbit_half_dim(t).
OrbitDescriptor min_complex_orbit(CartanType t);

// True exactly when the minimal complex orbit of g_C has no points in g, i.e.
// when m(g) > n(g_C).  The five families: su*_{2n} (n>=2), so_{n-1,1} (n>=5),
// sp_{p,q} (p,q>=1), e6(-26), f4(-20).
bool complex_minimal_misses(const RealForm& g);

// The smallest complex nilpotent orbit of g_C meeting the real form g.  For
// the five strict families these are [2,2,1^{2n-4}] in sl_{2n}, [3,1^{n-3}]
// in so_n, [2,2,1^{2(p+q)-4}] in sp_{p+q}, the 2A1 orbit of e6 and the short
// root orbit A1~ of f4; for every other absolutely simple form it is the
// minimal orbit, and for a complex form t it is the paired minimal orbit of
// t + t.
OrbitDescriptor smallest_orbit_meeting(const RealForm& g);

// m(g) = half the real dimension of a minimal real nilpotent orbit of g
//      = half the complex dimension of smallest_orbit_meeting(g).
Int min_real_orbit_half_dim(const RealForm& g);

// Number of minimal real nilpotent orbits of g: 2 when g is absolutely simple
// of Hermitian type (the two halves of the highest root space), 1 otherwise.
Int count_minimal_real_orbits(const RealForm& g);

// Does the orbit's weighted diagram restrict to zero on the black nodes and
// equalize across the arrows of the Satake diagram, for some graph
// automorphism of the ambient diagram?  This is exactly the condition for the
// orbit to contain a point of the real form described by `s`.  Throws
// std::invalid_argument when the ambient types differ.
bool matches_satake(const WeightedDynkinDiagram& w, const SatakeDiagram& s);

// Does the complex orbit `o` meet the real form `g`?  Requires the ambient of
// `o` to be the complexification of `g` (paired descriptors pair with complex
// forms); throws std::invalid_argument otherwise.  A paired minimal orbit
// always meets the complex form: the factor orbit is conjugation-stable, so
// O x O contains (X, sigma X).
bool orbit_meets_real_form(const OrbitDescriptor& o, const RealForm& g);

}  // namespace minorb
