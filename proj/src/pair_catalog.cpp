// The symmetric-pair catalog: for each catalog real form g, every symmetric
// pair (g, h) up to isomorphism of the involution, together with the
// associated subalgebra h^a.
//
// For the classical families the rows follow the classical block-form
// involutions; degenerate parameter choices (a zero block) reproduce the
// Riemannian pair, and low-rank blocks canonicalize through the rt:: builders,
// so the same formulas cover every rank.  The exceptional rows are finite
// lists.  On top of the construction, every row is checked against the
// dimension identity for h^a and the whole catalog against association
// closure, so an inconsistent row cannot leave this translation unit.

#include <minorb/pairs.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace minorb {

namespace {

[[noreturn]] void integrity(const std::string& msg) { throw CatalogIntegrityError(msg); }

// Collects rows for one g, merging duplicates (the same subalgebra reached by
// two block formulas must carry the same associated subalgebra) and
// normalizing the Riemannian row's associate to g.
class RowSink {
 public:
  explicit RowSink(const RealForm& g)
      : g_(g),
        gdesc_(rt::form(g)),
        kdesc_(rt::compact_of(g.maximal_compact_complexified())) {}

  const RealReductiveType& gdesc() const { return gdesc_; }
  const RealReductiveType& kdesc() const { return kdesc_; }

  void add(const RealReductiveType& h, const RealReductiveType& ha, const std::string& source,
           PairKind kind = PairKind::RealAbsolutelySimple) {
    if (h.is_zero() || h == gdesc_) return;  // trivial involution
    const RealReductiveType& ha_eff = (h == kdesc_) ? gdesc_ : ha;
    check_dimensions(h, ha_eff, source);
    SymmetricPair row{g_, h, ha_eff, kind, source};
    auto [it, inserted] = rows_.try_emplace(h.name(), row);
    if (!inserted) {
      if (it->second.h != h || it->second.h_assoc != ha_eff)
        integrity("catalog rows for " + g_.name() + " disagree on " + h.name() + ": " +
                  it->second.source + " vs " + source);
    }
  }

  std::vector<SymmetricPair> finish() {
    std::vector<SymmetricPair> out;
    out.reserve(rows_.size());
    for (const auto& [name, row] : rows_) out.push_back(row);
    // Association closure: the associate of every non-Riemannian row is
    // itself a row, and associating twice returns the original subalgebra.
    for (const auto& row : out) {
      if (row.h == kdesc_) continue;
      auto it = rows_.find(row.h_assoc.name());
      if (it == rows_.end())
        integrity("associated subalgebra " + row.h_assoc.name() + " of (" + g_.name() + ", " +
                  row.h.name() + ") is not itself a catalog row");
      if (it->second.h_assoc != row.h)
        integrity("association is not involutive at (" + g_.name() + ", " + row.h.name() + ")");
    }
    std::stable_sort(out.begin(), out.end(), [&](const SymmetricPair& a, const SymmetricPair& b) {
      const bool ra = a.h == kdesc_, rb = b.h == kdesc_;
      if (ra != rb) return ra;
      const Int da = a.h.dim_real(), db = b.h.dim_real();
      if (da != db) return da > db;
      return a.h.name() < b.h.name();
    });
    return out;
  }

 private:
  void check_dimensions(const RealReductiveType& h, const RealReductiveType& ha,
                        const std::string& source) const {
    const Int dim_g = g_.dim_real();
    const Int dim_k_g = g_.maximal_compact_complexified().dim();
    const Int dim_h = h.dim_real();
    const Int dim_k_h = h.maximal_compact_complexified().dim();
    if (dim_h >= dim_g)
      integrity("(" + g_.name() + ", " + h.name() + ") [" + source +
                "]: fixed algebra as large as g");
    const Int expected = 2 * dim_k_h + dim_g - dim_k_g - dim_h;
    if (ha.dim_real() != expected) {
      std::ostringstream os;
      os << "(" << g_.name() << ", " << h.name() << ") [" << source << "]: associated "
         << ha.name() << " has dim " << ha.dim_real() << ", expected " << expected;
      integrity(os.str());
    }
  }

  RealForm g_;
  RealReductiveType gdesc_, kdesc_;
  std::map<std::string, SymmetricPair> rows_;
};

// --- classical families ---------------------------------------------------

// sl_n(R): transpose-type involutions fix so_{p,q}, with block-diagonal
// associate s(gl_p(R) + gl_q(R)); for even n the symplectic involution fixes
// sp_{n/2}(R), associated to gl_{n/2}(C).
void rows_sl_R(Int n, RowSink& s) {
  for (Int q = 0; 2 * q <= n; ++q) {
    const Int p = n - q;
    s.add(rt::so(p, q), rt::s_gl_gl_R(p, q), "berger:sl(n,R)>so(p,q)");
    if (q >= 1) s.add(rt::s_gl_gl_R(p, q), rt::so(p, q), "berger:sl(n,R)>s(gl+gl)");
  }
  if (n % 2 == 0) {
    s.add(rt::sp_R(n / 2), rt::sl_C(n / 2) + rt::center_u1(), "berger:sl(n,R)>sp(n/2,R)");
    s.add(rt::sl_C(n / 2) + rt::center_u1(), rt::sp_R(n / 2), "berger:sl(n,R)>gl(n/2,C)");
  }
}

// su*_{2n}: quaternionic analogues of the sl_n(R) rows.
void rows_su_star(Int two_n, RowSink& s) {
  const Int n = two_n / 2;
  for (Int q = 0; 2 * q <= n; ++q) {
    const Int p = n - q;
    s.add(rt::sp(p, q), rt::s_gl_gl_H(p, q), "berger:su*(2n)>sp(p,q)");
    if (q >= 1) s.add(rt::s_gl_gl_H(p, q), rt::sp(p, q), "berger:su*(2n)>s(gl+gl)H");
  }
  s.add(rt::so_star(two_n), rt::sl_C(n) + rt::center_u1(), "berger:su*(2n)>so*(2n)");
  s.add(rt::sl_C(n) + rt::center_u1(), rt::so_star(two_n), "berger:su*(2n)>gl(n,C)");
}

// su_{p,q}: block involutions s(u(p1,q1)+u(p2,q2)) whose associate swaps the
// negative-signature blocks; the real and quaternionic structures fix
// so_{p,q} and sp_{p/2,q/2} (self-associated); for p = q additionally the
// symplectic/orthogonal pair sp_q(R) <-> so*_{2q} and self-associated
// gl_q(C).
void rows_su(Int p, Int q, RowSink& s) {
  for (Int p1 = 0; p1 <= p; ++p1)
    for (Int q1 = 0; q1 <= q; ++q1) {
      const Int p2 = p - p1, q2 = q - q1;
      if (std::pair(p1, q1) > std::pair(p2, q2)) continue;
      s.add(rt::s_u_u(p1, q1, p2, q2), rt::s_u_u(p1, q2, p2, q1), "berger:su(p,q)>s(u+u)");
    }
  s.add(rt::so(p, q), rt::so(p, q), "berger:su(p,q)>so(p,q)");
  if (p % 2 == 0 && q % 2 == 0)
    s.add(rt::sp(p / 2, q / 2), rt::sp(p / 2, q / 2), "berger:su(p,q)>sp(p/2,q/2)");
  if (p == q) {
    s.add(rt::sp_R(q), rt::so_star(2 * q), "berger:su(q,q)>sp(q,R)");
    s.add(rt::so_star(2 * q), rt::sp_R(q), "berger:su(q,q)>so*(2q)");
    s.add(rt::sl_C(q) + rt::center_R(), rt::sl_C(q) + rt::center_R(), "berger:su(q,q)>gl(q,C)");
  }
}

// so_{p,q}: block involutions so(p1,q1)+so(p2,q2) with block-swapped
// associate; for p, q both even the complex structure fixes u(p/2,q/2)
// (self-associated); for p = q the split complex structure fixes so_q(C),
// associated to gl_q(R).
void rows_so(Int p, Int q, RowSink& s) {
  for (Int p1 = 0; p1 <= p; ++p1)
    for (Int q1 = 0; q1 <= q; ++q1) {
      const Int p2 = p - p1, q2 = q - q1;
      if (std::pair(p1, q1) > std::pair(p2, q2)) continue;
      s.add(rt::so(p1, q1) + rt::so(p2, q2), rt::so(p1, q2) + rt::so(p2, q1),
            "berger:so(p,q)>so+so");
    }
  if (p % 2 == 0 && q % 2 == 0)
    s.add(rt::su(p / 2, q / 2) + rt::center_u1(), rt::su(p / 2, q / 2) + rt::center_u1(),
          "berger:so(p,q)>u(p/2,q/2)");
  if (p == q) {
    s.add(rt::so_C(q), rt::sl_R(q) + rt::center_R(), "berger:so(q,q)>so(q,C)");
    s.add(rt::sl_R(q) + rt::center_R(), rt::so_C(q), "berger:so(q,q)>gl(q,R)");
  }
}

// so*_{2n}: block involutions u(p,q) <-> so*_{2p}+so*_{2q}, the real
// structure so_n(C) (self-associated), and for even n the quaternionic
// structure u*(n) = su*_n + R (self-associated).
void rows_so_star(Int two_n, RowSink& s) {
  const Int n = two_n / 2;
  for (Int q = 0; 2 * q <= n; ++q) {
    const Int p = n - q;
    s.add(rt::su(p, q) + rt::center_u1(), rt::so_star(2 * p) + rt::so_star(2 * q),
          "berger:so*(2n)>u(p,q)");
    if (q >= 1)
      s.add(rt::so_star(2 * p) + rt::so_star(2 * q), rt::su(p, q) + rt::center_u1(),
            "berger:so*(2n)>so*+so*");
  }
  s.add(rt::so_C(n), rt::so_C(n), "berger:so*(2n)>so(n,C)");
  if (n % 2 == 0)
    s.add(rt::su_star(n) + rt::center_R(), rt::su_star(n) + rt::center_R(),
          "berger:so*(2n)>u*(n)");
}

// sp_n(R): block involutions u(p,q) <-> sp_p(R)+sp_q(R), the real structure
// gl_n(R) (self-associated), and for even n the quaternionic structure
// sp_{n/2}(C) (self-associated).
void rows_sp_R(Int n, RowSink& s) {
  for (Int q = 0; 2 * q <= n; ++q) {
    const Int p = n - q;
    s.add(rt::su(p, q) + rt::center_u1(), rt::sp_R(p) + rt::sp_R(q), "berger:sp(n,R)>u(p,q)");
    if (q >= 1)
      s.add(rt::sp_R(p) + rt::sp_R(q), rt::su(p, q) + rt::center_u1(),
            "berger:sp(n,R)>sp+sp");
  }
  s.add(rt::sl_R(n) + rt::center_R(), rt::sl_R(n) + rt::center_R(), "berger:sp(n,R)>gl(n,R)");
  if (n % 2 == 0) s.add(rt::sp_C(n / 2), rt::sp_C(n / 2), "berger:sp(n,R)>sp(n/2,C)");
}

// sp_{p,q}: block involutions sp(p1,q1)+sp(p2,q2) with block-swapped
// associate, the complex structure u(p,q) (self-associated), and for p = q
// the split quaternionic pair sp_q(C) <-> u*(2q).
void rows_sp(Int p, Int q, RowSink& s) {
  for (Int p1 = 0; p1 <= p; ++p1)
    for (Int q1 = 0; q1 <= q; ++q1) {
      const Int p2 = p - p1, q2 = q - q1;
      if (std::pair(p1, q1) > std::pair(p2, q2)) continue;
      s.add(rt::sp(p1, q1) + rt::sp(p2, q2), rt::sp(p1, q2) + rt::sp(p2, q1),
            "berger:sp(p,q)>sp+sp");
    }
  s.add(rt::su(p, q) + rt::center_u1(), rt::su(p, q) + rt::center_u1(), "berger:sp(p,q)>u(p,q)");
  if (p == q) {
    s.add(rt::sp_C(q), rt::su_star(2 * q) + rt::center_R(), "berger:sp(q,q)>sp(q,C)");
    s.add(rt::su_star(2 * q) + rt::center_R(), rt::sp_C(q), "berger:sp(q,q)>u*(2q)");
  }
}

// --- exceptional forms ----------------------------------------------------

void rows_exceptional(const RealForm& g, RowSink& s) {
  const Family fam = g.ambient().family();
  const int rank = g.ambient().rank();
  const int sig = g.signature();
  auto e = [](int r, int sg) { return rt::exceptional(Family::E, r, sg); };
  auto f4 = [](int sg) { return rt::exceptional(Family::F, 4, sg); };
  auto self = [&](const RealReductiveType& h, const char* tag) { s.add(h, h, tag); };
  auto both = [&](const RealReductiveType& a, const RealReductiveType& b, const char* tag) {
    s.add(a, b, tag);
    s.add(b, a, tag);
  };

  if (fam == Family::E && rank == 6 && sig == 6) {
    both(f4(4), rt::su_star(6) + rt::su(2, 0), "berger:e6(6)");
    both(rt::sp_R(4), rt::sl_R(6) + rt::sl_R(2), "berger:e6(6)");
    both(rt::sp(2, 2), rt::so(5, 5) + rt::center_R(), "berger:e6(6)");
  } else if (fam == Family::E && rank == 6 && sig == 2) {
    both(rt::su(4, 2) + rt::su(2, 0), rt::so(6, 4) + rt::center_u1(), "berger:e6(2)");
    self(rt::su(3, 3) + rt::sl_R(2), "berger:e6(2)");
    self(rt::sp_R(4), "berger:e6(2)");
    both(rt::sp(3, 1), f4(4), "berger:e6(2)");
    self(rt::so_star(10) + rt::center_u1(), "berger:e6(2)");
  } else if (fam == Family::E && rank == 6 && sig == -14) {
    both(rt::so_star(10) + rt::center_u1(), rt::su(5, 1) + rt::sl_R(2), "berger:e6(-14)");
    self(rt::so(8, 2) + rt::center_u1(), "berger:e6(-14)");
    self(rt::su(4, 2) + rt::su(2, 0), "berger:e6(-14)");
    self(rt::sp(2, 2), "berger:e6(-14)");
    self(f4(-20), "berger:e6(-14)");
  } else if (fam == Family::E && rank == 6 && sig == -26) {
    both(f4(-20), rt::so(9, 1) + rt::center_R(), "berger:e6(-26)");
    both(rt::sp(3, 1), rt::su_star(6) + rt::su(2, 0), "berger:e6(-26)");
  } else if (fam == Family::E && rank == 7 && sig == 7) {
    self(rt::sl_R(8), "berger:e7(7)");
    both(rt::su(4, 4), rt::so(6, 6) + rt::sl_R(2), "berger:e7(7)");
    both(rt::su_star(8), e(6, 6) + rt::center_R(), "berger:e7(7)");
  } else if (fam == Family::E && rank == 7 && sig == -5) {
    self(rt::su(4, 4), "berger:e7(-5)");
    both(rt::su(6, 2), e(6, 2) + rt::center_u1(), "berger:e7(-5)");
    self(rt::so(8, 4) + rt::su(2, 0), "berger:e7(-5)");
    self(rt::so_star(12) + rt::sl_R(2), "berger:e7(-5)");
  } else if (fam == Family::E && rank == 7 && sig == -25) {
    self(e(6, -26) + rt::center_R(), "berger:e7(-25)");
    both(e(6, -14) + rt::center_u1(), rt::so(10, 2) + rt::sl_R(2), "berger:e7(-25)");
    both(rt::so_star(12) + rt::su(2, 0), rt::su(6, 2), "berger:e7(-25)");
    self(rt::su_star(8), "berger:e7(-25)");
  } else if (fam == Family::E && rank == 8 && sig == 8) {
    self(rt::so(8, 8), "berger:e8(8)");
    both(rt::so_star(16), e(7, 7) + rt::sl_R(2), "berger:e8(8)");
    self(e(7, -5) + rt::su(2, 0), "berger:e8(8)");
  } else if (fam == Family::E && rank == 8 && sig == -24) {
    self(e(7, -25) + rt::sl_R(2), "berger:e8(-24)");
    both(e(7, -5) + rt::su(2, 0), rt::so(12, 4), "berger:e8(-24)");
    self(rt::so_star(16), "berger:e8(-24)");
  } else if (fam == Family::F && sig == 4) {
    self(rt::sp_R(3) + rt::sl_R(2), "berger:f4(4)");
    both(rt::sp(2, 1) + rt::su(2, 0), rt::so(5, 4), "berger:f4(4)");
  } else if (fam == Family::F && sig == -20) {
    self(rt::so(8, 1), "berger:f4(-20)");
    self(rt::sp(2, 1) + rt::su(2, 0), "berger:f4(-20)");
  } else if (fam == Family::G) {
    self(rt::sl_R(2) + rt::sl_R(2), "berger:g2(2)");
  } else {
    integrity("no symmetric-pair rows for " + g.name());
  }
}

std::vector<SymmetricPair> absolutely_simple_pairs(const RealForm& g) {
  RowSink s(g);
  s.add(s.kdesc(), s.gdesc(), "riemannian");
  switch (g.kind()) {
    case RealForm::Kind::SlR: rows_sl_R(g.p(), s); break;
    case RealForm::Kind::SuStar: rows_su_star(g.p(), s); break;
    case RealForm::Kind::Su: rows_su(g.p(), g.q(), s); break;
    case RealForm::Kind::So: rows_so(g.p(), g.q(), s); break;
    case RealForm::Kind::SpR: rows_sp_R(g.p(), s); break;
    case RealForm::Kind::Sp: rows_sp(g.p(), g.q(), s); break;
    case RealForm::Kind::SoStar: rows_so_star(g.p(), s); break;
    case RealForm::Kind::Exceptional: rows_exceptional(g, s); break;
    case RealForm::Kind::ComplexSimple: integrity("complex form routed to real rows"); break;
  }
  return s.finish();
}

// g = t(C): one antiholomorphic pair per real form of t (the compact form is
// the Riemannian pair) and one holomorphic pair per complex symmetric
// subalgebra, i.e. per complexified maximal compact k(g_0)_C of a
// non-compact real form g_0.  Antiholomorphic (t(C), g_0) is associated to
// the holomorphic fixed algebra k(g_0)_C and vice versa.
std::vector<SymmetricPair> complex_pairs(const RealForm& g) {
  const CartanType t = g.ambient();
  RowSink s(g);
  s.add(s.kdesc(), s.gdesc(), "riemannian", PairKind::ComplexAntiholomorphic);
  for (const RealForm& g0 : catalog_real_forms(t)) {
    const RealReductiveType real_side = rt::form(g0);
    const RealReductiveType holo_side = rt::complex_of(g0.maximal_compact_complexified());
    s.add(real_side, holo_side, "antiholo:real-form", PairKind::ComplexAntiholomorphic);
    s.add(holo_side, real_side, "holo:k-complexified", PairKind::ComplexHolomorphic);
  }
  return s.finish();
}

}  // namespace

std::vector<SymmetricPair> catalog_pairs(const RealForm& g) {
  static std::map<RealForm, std::vector<SymmetricPair>> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    auto rows = g.absolutely_simple() ? absolutely_simple_pairs(g) : complex_pairs(g);
    it = cache.emplace(g, std::move(rows)).first;
  }
  return it->second;
}

std::vector<SymmetricPair> all_catalog_pairs(Int classical_max_rank) {
  std::vector<SymmetricPair> out;
  for (const CartanType& t : canonical_simple_types(classical_max_rank)) {
    for (const RealForm& g : catalog_real_forms(t)) {
      auto rows = catalog_pairs(g);
      out.insert(out.end(), rows.begin(), rows.end());
    }
    auto rows = catalog_pairs(RealForm::complex_simple(t));
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

SymmetricPair riemannian_pair(const RealForm& g) {
  const auto rows = catalog_pairs(g);
  if (rows.empty() || !rows.front().riemannian())
    integrity("catalog for " + g.name() + " does not start with the Riemannian pair");
  return rows.front();
}

SymmetricPair find_pair(const RealForm& g, const RealReductiveType& h) {
  const auto rows = catalog_pairs(g);
  for (const auto& row : rows)
    if (row.h == h) return row;
  std::string available;
  for (const auto& row : rows) available += (available.empty() ? "" : ", ") + row.h.name();
  throw std::invalid_argument(h.name() + " is not a symmetric subalgebra of " + g.name() +
                              "; available: " + available);
}

}  // namespace minorb
