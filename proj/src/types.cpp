#include <minorb/types.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace minorb {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

void validate(Family f, int rank) {
  switch (f) {
    case Family::A:
      if (rank < 1) reject("CartanType: A requires rank >= 1");
      return;
    case Family::B:
      if (rank == 1) reject("CartanType: B1 is A1; use the canonical type A1");
      if (rank == 2) reject("CartanType: B2 is C2; use the canonical type C2");
      if (rank < 3) reject("CartanType: B requires rank >= 3");
      return;
    case Family::C:
      if (rank == 1) reject("CartanType: C1 is A1; use the canonical type A1");
      if (rank < 2) reject("CartanType: C requires rank >= 2");
      return;
    case Family::D:
      if (rank == 2) reject("CartanType: D2 is A1+A1, which is not simple");
      if (rank == 3) reject("CartanType: D3 is A3; use the canonical type A3");
      if (rank < 4) reject("CartanType: D requires rank >= 4");
      return;
    case Family::E:
      if (rank < 6 || rank > 8) reject("CartanType: E exists only for ranks 6, 7, 8");
      return;
    case Family::F:
      if (rank != 4) reject("CartanType: F exists only for rank 4");
      return;
    case Family::G:
      if (rank != 2) reject("CartanType: G exists only for rank 2");
      return;
  }
  reject("CartanType: unknown family");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  validate(family, rank);
}

Int CartanType::root_count() const {
  const Int n = rank_;
  switch (family_) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

bool CartanType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string CartanType::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

std::string CartanType::algebra_name() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return "sl_" + std::to_string(n + 1) + "(C)";
    case Family::B: return "so_" + std::to_string(2 * n + 1) + "(C)";
    case Family::C: return "sp_" + std::to_string(n) + "(C)";
    case Family::D: return "so_" + std::to_string(2 * n) + "(C)";
    case Family::E: return "e" + std::to_string(n) + "(C)";
    case Family::F: return "f4(C)";
    case Family::G: return "g2(C)";
  }
  return "?";
}

bool canonical_factor_less(const CartanType& a, const CartanType& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  return a < b;
}

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) reject("CartanType: cannot parse '" + s + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: reject("CartanType: cannot parse '" + s + "'");
  }
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      reject("CartanType: cannot parse '" + s + "'");
  return CartanType(f, std::stoi(s.substr(1)));
}

ComplexReductiveType::ComplexReductiveType(std::vector<CartanType> factors, Int center_dim)
    : factors_(std::move(factors)), center_dim_(center_dim) {
  if (center_dim_ < 0) reject("ComplexReductiveType: negative center dimension");
  std::sort(factors_.begin(), factors_.end(), canonical_factor_less);
}

Int ComplexReductiveType::dim() const {
  Int d = center_dim_;
  for (const auto& t : factors_) d += t.dim();
  return d;
}

ComplexReductiveType& ComplexReductiveType::add(CartanType t) {
  factors_.push_back(t);
  std::sort(factors_.begin(), factors_.end(), canonical_factor_less);
  return *this;
}

ComplexReductiveType& ComplexReductiveType::add_center(Int d) {
  if (d < 0) reject("ComplexReductiveType: negative center dimension");
  center_dim_ += d;
  return *this;
}

ComplexReductiveType& ComplexReductiveType::add(const ComplexReductiveType& o) {
  for (const auto& t : o.factors_) factors_.push_back(t);
  std::sort(factors_.begin(), factors_.end(), canonical_factor_less);
  center_dim_ += o.center_dim_;
  return *this;
}

std::string ComplexReductiveType::name() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : factors_) {
    if (!out.empty()) out += "+";
    out += t.algebra_name();
  }
  if (center_dim_ > 0) {
    if (!out.empty()) out += "+";
    out += center_dim_ == 1 ? "C" : "C^" + std::to_string(center_dim_);
  }
  return out;
}

std::vector<CartanType> canonical_simple_types(Int classical_max_rank) {
  std::vector<CartanType> out;
  for (Int n = 1; n <= classical_max_rank; ++n) out.emplace_back(Family::A, int(n));
  for (Int n = 3; n <= classical_max_rank; ++n) out.emplace_back(Family::B, int(n));
  for (Int n = 2; n <= classical_max_rank; ++n) out.emplace_back(Family::C, int(n));
  for (Int n = 4; n <= classical_max_rank; ++n) out.emplace_back(Family::D, int(n));
  for (int n : {6, 7, 8}) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

}  // namespace minorb
