#pragma once

// Non-compact simple real Lie algebras: canonical classification, Satake
// diagrams, the induced involution on the root lattice, restricted root
// systems with multiplicities, and maximal compact subalgebras.
//
// Every constructor canonicalizes low-rank coincidences, so each isomorphism
// class has exactly one representative (e.g. su_{1,1}, sp_1(R) and so_{2,1}
// all construct sl_2(R); so_{4,2} constructs su_{2,2}; so*_8 constructs
// so_{6,2}).  Compact and non-simple inputs are rejected with messages that
// say what the input actually is.

#include <minorb/rootsys.hpp>
#include <minorb/types.hpp>

#include <map>
#include <string>
#include <vector>

namespace minorb {

class RealForm;

// Satake diagram: the Dynkin diagram of the complexification with a subset of
// black (compact) nodes and an involutive pairing of white nodes (arrows).
struct SatakeDiagram {
  CartanType ambient;
  std::vector<char> black;   // black[i] for 0-based node i
  std::vector<int> partner;  // arrow partner (0-based), partner[i] == i if none

  int rank() const { return ambient.rank(); }
  bool is_black(int i) const { return black[i] != 0; }
  bool has_arrow(int i) const { return partner[i] != i; }
  int num_black() const;
  int num_arrows() const;
  // Number of white-node classes (white nodes modulo arrows) = restricted rank.
  int num_classes() const;
  // class index of node i in ambient order (classes sorted by smallest member),
  // or -1 for black nodes.
  std::vector<int> node_classes() const;

  // "black={2,3} arrows={1:6}" (1-based nodes, for dumps and diagnostics).
  std::string str() const;

  friend bool operator==(const SatakeDiagram&, const SatakeDiagram&) = default;
};

// Throws std::logic_error if the diagram is structurally invalid (arrows on
// black nodes, non-involutive pairing, mismatched sizes).
void validate_satake(const SatakeDiagram& d);

// The involution induced on the root lattice by a Satake diagram:
// theta = -(w0_black . tau), where tau is the arrow permutation on white
// nodes extended over black nodes by the diagram permutation induced by
// -w0_black, and w0_black is the longest element of the Weyl group generated
// by the black simple reflections.  Returned as a matrix acting on
// simple-root coordinates (column j = coordinates of theta(alpha_j)).
//
// Postconditions (checked, std::logic_error on violation): theta^2 = 1;
// theta permutes the roots; theta fixes every black simple root; the fixed
// sublattice has rank (#black + #arrows); and the class-collapse of
// theta(alpha) is the negative of the class-collapse of alpha for all roots.
IMat satake_involution(const SatakeDiagram& d);

// Restriction of a root-coordinate vector to restricted-root coordinates:
// black coordinates are dropped, white coordinates are summed over each
// arrow class.  (Linear; the image of a root is its restricted root, which
// is zero exactly when the root lies in the black subsystem.)
IVec restrict_root(const SatakeDiagram& d, const IVec& root);

// The restricted root system of a real form, with multiplicities.
struct RestrictedRootSystem {
  int rank = 0;               // dim a = number of white classes
  bool reduced = true;        // false iff some 2*lambda is also a root
  std::string label;          // "A2", "B3", "C2", "BC1", "F4", "G2", ...
  Int dim_m = 0;              // centralizer of a in k
  Int dim_g = 0;              // real dimension of the real form
  // Every nonzero restricted root (in white-class coordinates) with its
  // multiplicity; closed under negation.
  std::map<std::vector<Int>, Int> mult;

  Int mult_of(const IVec& lambda) const;
  Int total_mult() const;          // sum over all nonzero restricted roots
  Int positive_mult() const;       // sum over coordinate-positive ones
  std::vector<IVec> positive_restricted_roots() const;
};

class RealForm {
public:
  enum class Kind { SlR, SuStar, Su, So, SpR, Sp, SoStar, Exceptional, ComplexSimple };

  // --- canonicalizing factories ---------------------------------------
  static RealForm sl_R(int n);                 // sl_n(R), n >= 2
  static RealForm su_star(int two_n);          // su*_{2n}
  static RealForm su(int p, int q);            // su_{p,q}
  static RealForm so(int p, int q);            // so_{p,q}
  static RealForm sp_R(int n);                 // sp_n(R)
  static RealForm sp(int p, int q);            // sp_{p,q}
  static RealForm so_star(int two_n);          // so*_{2n}
  static RealForm exceptional(Family f, int rank, int signature);  // e.g. (E,6,-14)
  static RealForm complex_simple(CartanType t);  // t(C) viewed as a real algebra

  Kind kind() const { return kind_; }
  // Complexification type: the ambient simple type for absolutely simple
  // forms; for complex forms, the type t with complexification t + t.
  CartanType ambient() const { return ambient_; }
  bool absolutely_simple() const { return kind_ != Kind::ComplexSimple; }
  int p() const { return p_; }
  int q() const { return q_; }
  int signature() const { return sig_; }

  Int dim_real() const;
  ComplexReductiveType complexification() const;

  // Maximal compact subalgebra k, complexified (e.g. su_{p,q} ->
  // sl_p(C)+sl_q(C)+C).  For a complex form t the result is t itself.
  ComplexReductiveType maximal_compact_complexified() const;

  // Hermitian type <=> the maximal compact subalgebra has a 1-dim center.
  bool hermitian() const { return maximal_compact_complexified().center_dim() == 1; }

  // Satake diagram (absolutely simple forms only).
  SatakeDiagram satake() const;

  // Restricted root system relative to a maximal split abelian subspace,
  // with multiplicities; validated internally against dim g and dim k.
  RestrictedRootSystem restricted_roots() const;

  std::string name() const;

  friend bool operator==(const RealForm&, const RealForm&) = default;
  friend auto operator<=>(const RealForm&, const RealForm&) = default;

private:
  RealForm(Kind k, CartanType ambient, int p, int q, int sig)
      : kind_(k), ambient_(ambient), p_(p), q_(q), sig_(sig) {}

  Kind kind_;
  CartanType ambient_;
  int p_ = 0, q_ = 0;
  int sig_ = 0;
};

// All non-compact real forms of the complex simple algebra of a given type,
// one per isomorphism class (absolutely simple; the complex form t viewed as
// real is a real form of t + t, not of t).
std::vector<RealForm> catalog_real_forms(CartanType ambient);

// Classification label of the involution ("AI", "AIII", "DIII", "EIV", "G",
// ...), recorded in catalog dumps.
std::string cartan_class(const RealForm& f);

// --- reductive descriptors ----------------------------------------------

// A real reductive algebra: non-compact simple real forms (including complex
// simple algebras viewed as real), compact simple factors, and an abelian
// part split into compact (so_2), split (R) and complex (C) lines.
class RealReductiveType {
public:
  RealReductiveType() = default;

  RealReductiveType& add(const RealForm& f);
  // Compact simple factors arrive as classical names; so_2 feeds the compact
  // center, so_4 splits into su_2 + su_2, so_1/so_0/su_1/sp_0 are zero.
  RealReductiveType& add_compact_complexified(const ComplexReductiveType& c);
  RealReductiveType& add_compact_su(int n);
  RealReductiveType& add_compact_so(int n);
  RealReductiveType& add_compact_sp(int n);
  RealReductiveType& add_compact_exceptional(Family f, int rank);
  RealReductiveType& add_center_compact(Int k = 1);  // u(1) summands
  RealReductiveType& add_center_split(Int k = 1);    // R summands
  RealReductiveType& add_center_complex(Int k = 1);  // C summands (2 real dims)
  RealReductiveType& add(const RealReductiveType& o);

  const std::vector<RealForm>& noncompact() const { return noncompact_; }
  const std::vector<CartanType>& compact() const { return compact_; }
  Int center_compact() const { return center_c_; }
  Int center_split() const { return center_s_; }
  Int center_complex() const { return center_z_; }

  bool is_zero() const;
  Int dim_real() const;
  ComplexReductiveType complexification() const;
  // Maximal compact subalgebra, complexified: k of every non-compact factor,
  // the compact factors themselves, and the compact part of the center.
  ComplexReductiveType maximal_compact_complexified() const;

  std::string name() const;  // "su_{4,2}+su_2+so_2", "sl_4(C)+C", "0"

  friend bool operator==(const RealReductiveType&, const RealReductiveType&) = default;
  friend auto operator<=>(const RealReductiveType&, const RealReductiveType&) = default;

private:
  std::vector<RealForm> noncompact_;   // sorted
  std::vector<CartanType> compact_;    // sorted
  Int center_c_ = 0, center_s_ = 0, center_z_ = 0;
};

}  // namespace minorb
