#pragma once

// Cartan types of complex simple Lie algebras and formal reductive products of
// them.  Node numbering follows Bourbaki throughout (see docs/numbering.md);
// all public interfaces are 1-based in documentation and 0-based in storage.

#include <minorb/rational.hpp>

#include <Eigen/Core>

#include <compare>
#include <string>
#include <vector>

namespace minorb {

using Int = long long;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

enum class Family { A, B, C, D, E, F, G };

// A simple Cartan type in canonical form.  The low-rank coincidences
// B1=C1=A1, B2=C2, D3=A3 are resolved to one canonical representative per
// isomorphism class: A has rank >= 1, C rank >= 2, B rank >= 3, D rank >= 4.
// Constructing a non-canonical or invalid type throws with a message that
// names the canonical type (or explains why none exists, e.g. D2).
class CartanType {
public:
  CartanType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  Int root_count() const;
  Int dim() const { return rank_ + root_count(); }  // dim of the algebra
  bool simply_laced() const;

  // "A3", "B4", "E8", ... (the type symbol, used in diagnostics and dumps).
  std::string name() const;
  // Classical algebra name of the complex algebra: "sl_4(C)", "so_9(C)",
  // "sp_3(C)", "e8(C)", ...
  std::string algebra_name() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;

private:
  Family family_;
  int rank_;
};

// Parses a type symbol such as "A3" / "a3" / "E8".  Throws on junk; non-
// canonical ranks are resolved exactly as the constructor resolves them.
CartanType parse_cartan_type(const std::string& s);

// Display order for factors of reductive algebras: larger factors first,
// ties broken by type symbol.
bool canonical_factor_less(const CartanType& a, const CartanType& b);

// Every canonical simple type with classical rank <= classical_max_rank, in
// the order A1.., B3.., C2.., D4.., E6, E7, E8, F4, G2.  The five exceptional
// types are always included, whatever the bound.
std::vector<CartanType> canonical_simple_types(Int classical_max_rank);

// A formal finite-dimensional complex reductive algebra: a multiset of simple
// factors plus an abelian center of given dimension.  Factors are kept sorted
// so that equality is structural isomorphism.
class ComplexReductiveType {
public:
  ComplexReductiveType() = default;
  explicit ComplexReductiveType(std::vector<CartanType> factors, Int center_dim = 0);

  const std::vector<CartanType>& factors() const { return factors_; }
  Int center_dim() const { return center_dim_; }
  Int dim() const;
  bool is_zero() const { return factors_.empty() && center_dim_ == 0; }

  ComplexReductiveType& add(CartanType t);
  ComplexReductiveType& add_center(Int d);
  ComplexReductiveType& add(const ComplexReductiveType& o);

  // "sl_6(C)+sl_2(C)", "so_10(C)+C", "C^2", "0"
  std::string name() const;

  friend bool operator==(const ComplexReductiveType&, const ComplexReductiveType&) = default;
  friend auto operator<=>(const ComplexReductiveType&, const ComplexReductiveType&) = default;

private:
  std::vector<CartanType> factors_;  // sorted
  Int center_dim_ = 0;
};

}  // namespace minorb
