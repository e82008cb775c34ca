#pragma once

// Root systems of the complex simple Lie algebras, in exact integer
// arithmetic.  Roots are stored in simple-root coordinates (the coefficient
// vector of a root in the basis of simple roots); semisimple elements h of a
// Cartan subalgebra are stored in "coweight coordinates", the evaluation
// vector w with w_i = alpha_i(h).  With these conventions:
//
//   * Cartan matrix:      A(i,j) = <alpha_i, alpha_j^v> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)
//   * root evaluation:    alpha(h) = sum_j c_j w_j           (plain dot product)
//   * reflection, roots:  s_j(c) = c - (sum_i c_i A(i,j)) e_j
//   * reflection, h's:    s_i(w)_j = w_j - A(j,i) w_i
//
// The invariant bilinear form is normalized so short roots have squared
// length 2.  Node numbering is Bourbaki (docs/numbering.md).

#include <minorb/types.hpp>

#include <map>
#include <string>
#include <vector>

namespace minorb {

class RootSystem {
public:
  explicit RootSystem(CartanType type);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank(); }
  Int dim() const { return type_.dim(); }

  const IMat& cartan() const { return cartan_; }    // A(i,j), 0-based storage
  const IMat& bilinear() const { return bilinear_; }  // B(i,j) = (alpha_i, alpha_j)

  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& positive_roots() const { return positive_; }
  const IVec& highest_root() const { return highest_; }
  IVec simple_root(int i) const;  // 0-based node index

  bool is_root(const IVec& c) const;
  Int height(const IVec& c) const { return c.sum(); }

  // Squared length of a root (2 for short roots; 4, or 6 for G2, for long).
  Int length_sq(const IVec& c) const;

  // s_j applied to a vector in simple-root coordinates.
  IVec reflect_root(int j, const IVec& c) const;

  // s_i applied to a Cartan element in coweight coordinates.
  QVec reflect_coweight(int i, const QVec& w) const;
  IVec reflect_coweight(int i, const IVec& w) const;

  // Coweight coordinates of the coroot c^v = 2c/(c,c) of a root c; the
  // entries <alpha_j, c^v> are the Cartan integers, so this is integral.
  IVec coroot_coweights(const IVec& c) const;

  // Evaluation alpha(h) for a root in simple-root coordinates against h in
  // coweight coordinates.
  Rational eval(const IVec& root, const QVec& w) const;
  Int eval(const IVec& root, const IVec& w) const;

private:
  CartanType type_;
  IMat cartan_;
  IMat bilinear_;
  std::vector<IVec> roots_;
  std::vector<IVec> positive_;
  IVec highest_;
  std::map<std::vector<Int>, int> index_;
};

// Shared immutable instances (root generation for E8 is cheap but not free).
const RootSystem& shared_root_system(CartanType type);

// The dominant Weyl-chamber representative of h (all alpha_i(h) >= 0),
// obtained by simple reflections.
QVec dominant_representative(const RootSystem& rs, QVec w);
IVec dominant_representative(const RootSystem& rs, IVec w);

// A weighted Dynkin diagram: the dominant evaluation vector of the
// characteristic semisimple element of a nilpotent orbit.
struct WeightedDynkinDiagram {
  CartanType type;
  IVec weights;  // dominant, entries in {0,1,2}

  std::string str() const;  // "(1,0,1)"
  friend bool operator==(const WeightedDynkinDiagram& a, const WeightedDynkinDiagram& b) {
    return a.type == b.type && a.weights == b.weights;
  }
};

// Builds the weighted diagram from any integral characteristic element given
// in coweight coordinates (takes the dominant representative, checks the
// entries land in {0,1,2}).
WeightedDynkinDiagram wdd_from_characteristic(const RootSystem& rs, const IVec& w);

// Dimension of each eigenspace of ad(h) for the grading defined by the
// diagram's weights: level of a root is its evaluation, level 0 also counts
// the Cartan.  Keys are levels, values are dimensions.
std::map<Int, Int> graded_dims(const RootSystem& rs, const WeightedDynkinDiagram& d);

// Half the dimension of the nilpotent orbit with this weighted diagram:
// (dim g - dim g_0 - dim g_1) / 2.
Int orbit_half_dim(const RootSystem& rs, const WeightedDynkinDiagram& d);

// An integer partition with parts sorted in non-increasing order.
struct Partition {
  std::vector<Int> parts;

  explicit Partition(std::vector<Int> p);
  Int sum() const;
  Int mult(Int part) const;  // multiplicity of a part value
  std::string str() const;   // "[3,1,1]"
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Weighted Dynkin diagram of the nilpotent orbit labeled by a partition:
//   A_{n}:  partitions of n+1
//   B_n:    partitions of 2n+1, even parts with even multiplicity
//   C_n:    partitions of 2n,   odd parts with even multiplicity
//   D_n:    partitions of 2n,   even parts with even multiplicity
// For very even D_n partitions the two orbits I/II share all invariants used
// here; the diagram of orbit I is returned.  Throws if the partition is not
// valid for the type.
WeightedDynkinDiagram wdd_from_partition(CartanType t, const Partition& p);

// All graph automorphisms of the Dynkin diagram, as node permutations
// (perm[i] = image of node i, 0-based).  Size 6 for D4, 2 for A_{n>=2},
// D_{n>4} and E6, 1 otherwise.
std::vector<std::vector<int>> diagram_automorphisms(CartanType t);

// Transport of a weight vector along a node permutation: result[perm[i]] = w[i].
IVec apply_node_perm(const std::vector<int>& perm, const IVec& w);

}  // namespace minorb
