#include <minorb/orbits.hpp>

#include <sstream>
#include <stdexcept>

namespace minorb {

Int min_orbit_half_dim(CartanType t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return n;
    case Family::B: return 2 * n - 2;
    case Family::C: return n;
    case Family::D: return 2 * n - 3;
    case Family::E: return n == 6 ? 11 : n == 7 ? 17 : 29;
    case Family::F: return 8;
    case Family::G: return 3;
  }
  throw std::logic_error("unreachable family");
}

Int min_orbit_half_dim(const ComplexReductiveType& t) {
  Int total = 0;
  for (const auto& f : t.factors()) total += min_orbit_half_dim(f);
  return total;
}

std::string OrbitDescriptor::str() const {
  std::ostringstream os;
  os << ambient.name();
  if (paired) os << "+" << ambient.name();
  os << " " << wdd.str();
  if (paired) os << "x" << wdd.str();
  os << " label=" << label << " half_dim=" << half_dim;
  return os.str();
}

OrbitDescriptor make_orbit_descriptor(CartanType t, const IVec& weights, std::string label,
                                      bool paired) {
  const RootSystem& rs = shared_root_system(t);
  WeightedDynkinDiagram d = wdd_from_characteristic(rs, weights);
  const Int half = orbit_half_dim(rs, d);
  return {t, paired, std::move(d), paired ? 2 * half : half, std::move(label)};
}

OrbitDescriptor min_complex_orbit(CartanType t) {
  const RootSystem& rs = shared_root_system(t);
  OrbitDescriptor o =
      make_orbit_descriptor(t, rs.coroot_coweights(rs.highest_root()), "minimal");
  if (o.half_dim != min_orbit_half_dim(t))
    throw std::logic_error("minimal orbit of " + t.name() +
                           " has inconsistent half-dimension");
  return o;
}

bool complex_minimal_misses(const RealForm& g) {
  switch (g.kind()) {
    case RealForm::Kind::SuStar: return true;
    case RealForm::Kind::Sp: return true;
    case RealForm::Kind::So: return g.q() == 1;
    case RealForm::Kind::Exceptional:
      return (g.ambient().family() == Family::E && g.ambient().rank() == 6 &&
              g.signature() == -26) ||
             (g.ambient().family() == Family::F && g.signature() == -20);
    default: return false;
  }
}

namespace {
Partition two_two_ones(Int total) {
  std::vector<Int> parts = {2, 2};
  for (Int i = 0; i < total - 4; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

Partition three_ones(Int total) {
  std::vector<Int> parts = {3};
  for (Int i = 0; i < total - 3; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

OrbitDescriptor from_partition(CartanType t, const Partition& p) {
  WeightedDynkinDiagram d = wdd_from_partition(t, p);
  return make_orbit_descriptor(t, d.weights, p.str());
}
}  // namespace

OrbitDescriptor smallest_orbit_meeting(const RealForm& g) {
  switch (g.kind()) {
    case RealForm::Kind::ComplexSimple: {
      const CartanType t = g.ambient();
      const RootSystem& rs = shared_root_system(t);
      return make_orbit_descriptor(t, rs.coroot_coweights(rs.highest_root()), "minimal",
                                   /*paired=*/true);
    }
    case RealForm::Kind::SuStar:
      // [2,2,1^{2n-4}] in sl_{2n}.
      return from_partition(g.ambient(), two_two_ones(g.p()));
    case RealForm::Kind::So:
      if (g.q() == 1)  // [3,1^{n-3}] in so_n, n = p + 1
        return from_partition(g.ambient(), three_ones(g.p() + 1));
      break;
    case RealForm::Kind::Sp:
      // [2,2,1^{2(p+q)-4}] in sp_{p+q}.
      return from_partition(g.ambient(), two_two_ones(2 * (g.p() + g.q())));
    case RealForm::Kind::Exceptional:
      if (g.ambient().family() == Family::E && g.ambient().rank() == 6 &&
          g.signature() == -26) {
        IVec w(6);
        w << 1, 0, 0, 0, 0, 1;
        return make_orbit_descriptor(g.ambient(), w, "2A1");
      }
      if (g.ambient().family() == Family::F && g.signature() == -20) {
        IVec w(4);
        w << 0, 0, 0, 1;
        return make_orbit_descriptor(g.ambient(), w, "A1~");
      }
      break;
    default: break;
  }
  return min_complex_orbit(g.ambient());
}

Int min_real_orbit_half_dim(const RealForm& g) { return smallest_orbit_meeting(g).half_dim; }

Int count_minimal_real_orbits(const RealForm& g) {
  return g.absolutely_simple() && g.hermitian() ? 2 : 1;
}

bool matches_satake(const WeightedDynkinDiagram& w, const SatakeDiagram& s) {
  if (w.type != s.ambient)
    throw std::invalid_argument("cannot match a " + w.type.name() +
                                " weighted diagram against a " + s.ambient.name() +
                                " Satake diagram");
  const int n = w.type.rank();
  for (const auto& perm : diagram_automorphisms(w.type)) {
    const IVec v = apply_node_perm(perm, w.weights);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (s.is_black(i) && v[i] != 0) ok = false;
      if (v[i] != v[s.partner[i]]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool orbit_meets_real_form(const OrbitDescriptor& o, const RealForm& g) {
  if (g.kind() == RealForm::Kind::ComplexSimple) {
    if (!o.paired || o.ambient != g.ambient())
      throw std::invalid_argument("orbit " + o.str() + " does not live in the "
                                  "complexification of " + g.name());
    return true;
  }
  if (o.paired || o.ambient != g.ambient())
    throw std::invalid_argument("orbit " + o.str() + " does not live in the "
                                "complexification of " + g.name());
  return matches_satake(o.wdd, g.satake());
}

}  // namespace minorb
