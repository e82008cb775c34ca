// Duality and association for symmetric pairs.  The dual real form is found
// by searching the catalog of real forms for the unique one whose maximal
// compact subalgebra has the prescribed complexification; existence and
// uniqueness are classification facts, so their failure raises
// CatalogIntegrityError.

#include <minorb/pairs.hpp>

#include <sstream>

namespace minorb {

namespace {

[[noreturn]] void integrity(const std::string& msg) { throw CatalogIntegrityError(msg); }

// The unique catalog real form of type t whose maximal compact subalgebra
// complexifies to target.
RealForm unique_form_with_compact(CartanType t, const ComplexReductiveType& target,
                                  const std::string& context) {
  std::vector<RealForm> matches;
  for (const RealForm& g0 : catalog_real_forms(t))
    if (g0.maximal_compact_complexified() == target) matches.push_back(g0);
  if (matches.size() == 1) return matches.front();
  std::ostringstream os;
  os << context << ": expected exactly one real form of " << t.name()
     << " with maximal compact subalgebra complexifying to " << target.name() << ", found "
     << matches.size();
  for (const RealForm& m : matches) os << " " << m.name();
  integrity(os.str());
}

}  // namespace

std::string pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::RealAbsolutelySimple: return "absolutely-simple";
    case PairKind::ComplexHolomorphic: return "holomorphic";
    case PairKind::ComplexAntiholomorphic: return "antiholomorphic";
  }
  return "?";
}

bool SymmetricPair::riemannian() const {
  return h == rt::compact_of(g.maximal_compact_complexified());
}

std::string SymmetricPair::name() const { return "(" + g.name() + ", " + h.name() + ")"; }

bool operator==(const SymmetricPair& a, const SymmetricPair& b) {
  return a.g == b.g && a.h == b.h && a.h_assoc == b.h_assoc && a.kind == b.kind;
}

DualResult dual(const SymmetricPair& p) {
  switch (p.kind) {
    case PairKind::RealAbsolutelySimple: {
      const ComplexReductiveType h_C = p.h.complexification();
      const RealForm g_d0 =
          unique_form_with_compact(p.g.ambient(), h_C, "dual of " + p.name());
      return DualResult{false, g_d0, rt::form(g_d0), min_real_orbit_half_dim(g_d0),
                        "k(" + g_d0.name() + ") complexifies to " + h_C.name() + " = h_C"};
    }
    case PairKind::ComplexAntiholomorphic: {
      // h is a real form of the factor t, so h_C = t; among real forms of
      // t + t only g = t(C) itself has k complexifying to a single factor t.
      const ComplexReductiveType h_C = p.h.complexification();
      if (h_C != ComplexReductiveType({p.g.ambient()}))
        integrity("antiholomorphic pair " + p.name() + " whose h does not complexify to " +
                  p.g.ambient().name());
      return DualResult{false, p.g, rt::form(p.g), min_real_orbit_half_dim(p.g),
                        "k(" + p.g.name() + ") complexifies to " + h_C.name() + " = h_C"};
    }
    case PairKind::ComplexHolomorphic: {
      // h is a complex subalgebra h' of t viewed as real; the real forms of
      // t + t with k complexifying to h' + h' are the doubles g_d0 + g_d0 of
      // the real form g_d0 of t with k(g_d0)_C = h'.
      ComplexReductiveType h_prime;
      for (const RealForm& f : p.h.noncompact()) {
        if (f.kind() != RealForm::Kind::ComplexSimple)
          integrity("holomorphic pair " + p.name() + " with non-complex factor " + f.name());
        h_prime.add(f.ambient());
      }
      if (!p.h.compact().empty() || p.h.center_compact() != 0 || p.h.center_split() != 0)
        integrity("holomorphic pair " + p.name() + " with non-complex abelian or compact part");
      h_prime.add_center(p.h.center_complex());
      const RealForm g_d0 =
          unique_form_with_compact(p.g.ambient(), h_prime, "dual of " + p.name());
      return DualResult{true, g_d0, rt::form(g_d0) + rt::form(g_d0),
                        2 * min_real_orbit_half_dim(g_d0),
                        "k(" + g_d0.name() + ") complexifies to " + h_prime.name() +
                            ", doubled over the two factors of g_C"};
    }
  }
  integrity("unknown pair kind");
}

RealReductiveType associated(const SymmetricPair& p) {
  // Revalidate the stored associate against the dimension identity before
  // handing it out; catalog rows always pass, hand-built pairs might not.
  const Int expected = 2 * p.h.maximal_compact_complexified().dim() + p.g.dim_real() -
                       p.g.maximal_compact_complexified().dim() - p.h.dim_real();
  if (p.h_assoc.dim_real() != expected)
    integrity("associated subalgebra of " + p.name() + " has dim " +
              std::to_string(p.h_assoc.dim_real()) + ", expected " + std::to_string(expected));
  return p.h_assoc;
}

SymmetricPair complexify_pair(const SymmetricPair& p) {
  if (p.kind != PairKind::RealAbsolutelySimple)
    throw std::invalid_argument("complexify_pair: " + p.name() +
                                " is already a pair of the complex form " + p.g.name());
  // (g, h) complexifies to the holomorphic pair (t(C), h_C); its associated
  // subalgebra is the real form of t with k_C = h_C, i.e. the dual of (g, h).
  const DualResult d = dual(p);
  return SymmetricPair{RealForm::complex_simple(p.g.ambient()),
                       rt::complex_of(p.h.complexification()), rt::form(d.g_d0),
                       PairKind::ComplexHolomorphic, "complexified:" + p.source};
}

}  // namespace minorb
