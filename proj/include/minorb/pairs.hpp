#pragma once

// Symmetric pairs (g, h): h is the fixed-point subalgebra of an involutive
// automorphism sigma of a catalog real form g.  The catalog lists one pair per
// isomorphism class of involution, including the Riemannian pair (g, k).
//
// Every pair carries its associated subalgebra h^a: choosing a Cartan
// involution theta of g commuting with sigma, h^a is the fixed algebra of
// sigma.theta.  For the Riemannian pair sigma = theta, so sigma.theta is the
// identity and h^a = g.  The two subalgebras always satisfy
//
//   dim h^a = 2 dim k(h) + dim g - dim k(g) - dim h,
//
// which the catalog builders verify for every row, and association is an
// involution on each catalog: (g, h^a) is again a catalog pair, with
// associated subalgebra h.
//
// The dual of a pair is the real form g^d of the complexification of g whose
// maximal compact subalgebra complexifies to the complexification of h:
//
//   - g absolutely simple: g^d is the unique catalog real form of the ambient
//     type with k(g^d)_C = h_C (for h = k this recovers g itself);
//   - g = t(C) with h a complex subalgebra (holomorphic involution): the
//     unique real form g_d0 of t with k(g_d0)_C = h gives g^d = g_d0 + g_d0;
//   - g = t(C) with h a real form of t (antiholomorphic involution):
//     g^d = g, the only real form of t + t whose maximal compact subalgebra
//     complexifies to a single factor t.
//
// Failure of existence or uniqueness in these searches would contradict the
// classification the catalog encodes, so it raises CatalogIntegrityError
// rather than a recoverable error.

#include <minorb/descriptors.hpp>
#include <minorb/orbits.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minorb {

// Position of the involution relative to the complex structure of g.
enum class PairKind {
  RealAbsolutelySimple,    // g absolutely simple, any involution
  ComplexHolomorphic,      // g = t(C), C-linear involution, h complex
  ComplexAntiholomorphic,  // g = t(C), conjugate-linear involution, h a real
                           // form of t (compact h gives the Riemannian pair)
};

std::string pair_kind_name(PairKind k);

struct SymmetricPair {
  RealForm g;
  RealReductiveType h;        // fixed algebra of sigma
  RealReductiveType h_assoc;  // fixed algebra of sigma.theta
  PairKind kind = PairKind::RealAbsolutelySimple;
  std::string source;         // catalog row tag, e.g. "berger:su(p,q)>so(p,q)"

  bool riemannian() const;    // h is a maximal compact subalgebra of g
  std::string name() const;   // "(sl_4(R), sp_2(R))"
};

// Equality of the mathematical content; the source tag is ignored.
bool operator==(const SymmetricPair& a, const SymmetricPair& b);
inline bool operator!=(const SymmetricPair& a, const SymmetricPair& b) { return !(a == b); }

// A cross-check between independently derived catalog data failed.  This is
// never a user error; the command-line driver maps it to exit code 3.
struct CatalogIntegrityError : std::logic_error {
  explicit CatalogIntegrityError(const std::string& what) : std::logic_error(what) {}
};

// All symmetric pairs with first member g, one per isomorphism class, the
// Riemannian pair first and the rest ordered by decreasing dim h, then name.
// Results are validated (dimension identity, association closure) and cached.
std::vector<SymmetricPair> catalog_pairs(const RealForm& g);

// catalog_pairs over every catalog real form of every canonical simple type
// with classical rank <= classical_max_rank (exceptional types are always
// included), plus the complex form of each type.
std::vector<SymmetricPair> all_catalog_pairs(Int classical_max_rank);

// The pair (g, k) for a maximal compact subalgebra k of g.
SymmetricPair riemannian_pair(const RealForm& g);

// Looks up the catalog pair with second member h; throws std::invalid_argument
// listing the symmetric subalgebras of g when there is no such pair.
SymmetricPair find_pair(const RealForm& g, const RealReductiveType& h);

struct DualResult {
  bool doubled;           // g^d = g_d0 + g_d0 (holomorphic pairs only)
  RealForm g_d0;          // the simple constituent of g^d
  RealReductiveType g_d;  // the dual algebra itself
  Int m_gd;               // smallest half-dimension of a nonzero nilpotent
                          // adjoint orbit of g^d
  std::string certificate;  // the compact-subalgebra match that pins g_d0
};

DualResult dual(const SymmetricPair& p);

// The associated subalgebra h^a (stored on the pair; revalidated here).
RealReductiveType associated(const SymmetricPair& p);

// (g, h) -> (g_C viewed as a real algebra, h_C as a complex subalgebra), the
// holomorphic catalog pair it equals; defined for absolutely simple pairs.
SymmetricPair complexify_pair(const SymmetricPair& p);

}  // namespace minorb
