#include <minorb/descriptors.hpp>

#include <stdexcept>

namespace minorb::rt {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

RealReductiveType zero() { return {}; }

RealReductiveType center_R() { return RealReductiveType().add_center_split(1); }
RealReductiveType center_u1() { return RealReductiveType().add_center_compact(1); }
RealReductiveType center_C() { return RealReductiveType().add_center_complex(1); }

RealReductiveType form(const RealForm& f) { return RealReductiveType().add(f); }

RealReductiveType sl_R(Int n) {
  require(n >= 0, "sl_n(R) needs n >= 0");
  RealReductiveType r;
  if (n <= 1) return r;
  return r.add(RealForm::sl_R(static_cast<int>(n)));
}

RealReductiveType sl_C(Int n) {
  require(n >= 0, "sl_n(C) needs n >= 0");
  RealReductiveType r;
  if (n <= 1) return r;
  return r.add(RealForm::complex_simple(CartanType(Family::A, static_cast<int>(n) - 1)));
}

RealReductiveType su(Int p, Int q) {
  require(p >= 0 && q >= 0, "su_{p,q} needs p, q >= 0");
  if (p < q) std::swap(p, q);
  RealReductiveType r;
  if (p + q <= 1) return r;
  if (q == 0) return r.add_compact_su(static_cast<int>(p));
  return r.add(RealForm::su(static_cast<int>(p), static_cast<int>(q)));
}

RealReductiveType su_star(Int two_n) {
  require(two_n >= 0 && two_n % 2 == 0, "su*_n needs even n >= 0");
  RealReductiveType r;
  if (two_n == 0) return r;
  if (two_n == 2) return r.add_compact_su(2);
  return r.add(RealForm::su_star(static_cast<int>(two_n)));
}

RealReductiveType so(Int p, Int q) {
  require(p >= 0 && q >= 0, "so_{p,q} needs p, q >= 0");
  if (p < q) std::swap(p, q);
  RealReductiveType r;
  if (p + q <= 1) return r;
  if (q == 0) return r.add_compact_so(static_cast<int>(p));
  if (p == 1 && q == 1) return r.add_center_split(1);
  if (p == 2 && q == 2) return sl_R(2) + sl_R(2);
  return r.add(RealForm::so(static_cast<int>(p), static_cast<int>(q)));
}

RealReductiveType so_C(Int n) {
  require(n >= 0, "so_n(C) needs n >= 0");
  RealReductiveType r;
  auto a = [&](CartanType t) { return r.add(RealForm::complex_simple(t)); };
  switch (n) {
    case 0:
    case 1: return r;
    case 2: return r.add_center_complex(1);
    case 3: return a(CartanType(Family::A, 1));
    case 4: return sl_C(2) + sl_C(2);
    case 5: return a(CartanType(Family::C, 2));
    case 6: return a(CartanType(Family::A, 3));
    default:
      return a(n % 2 ? CartanType(Family::B, static_cast<int>((n - 1) / 2))
                     : CartanType(Family::D, static_cast<int>(n / 2)));
  }
}

RealReductiveType so_star(Int two_n) {
  require(two_n >= 0 && two_n % 2 == 0, "so*_n needs even n >= 0");
  RealReductiveType r;
  if (two_n == 0) return r;
  if (two_n == 2) return r.add_center_compact(1);
  if (two_n == 4) return sl_R(2) + su(2, 0);
  return r.add(RealForm::so_star(static_cast<int>(two_n)));
}

RealReductiveType sp_R(Int n) {
  require(n >= 0, "sp_n(R) needs n >= 0");
  RealReductiveType r;
  if (n == 0) return r;
  return r.add(RealForm::sp_R(static_cast<int>(n)));
}

RealReductiveType sp(Int p, Int q) {
  require(p >= 0 && q >= 0, "sp_{p,q} needs p, q >= 0");
  if (p < q) std::swap(p, q);
  RealReductiveType r;
  if (p + q == 0) return r;
  if (q == 0) return r.add_compact_sp(static_cast<int>(p));
  return r.add(RealForm::sp(static_cast<int>(p), static_cast<int>(q)));
}

RealReductiveType sp_C(Int n) {
  require(n >= 0, "sp_n(C) needs n >= 0");
  RealReductiveType r;
  if (n == 0) return r;
  if (n == 1) return r.add(RealForm::complex_simple(CartanType(Family::A, 1)));
  return r.add(RealForm::complex_simple(CartanType(Family::C, static_cast<int>(n))));
}

RealReductiveType exceptional(Family f, int rank, int signature) {
  return RealReductiveType().add(RealForm::exceptional(f, rank, signature));
}

RealReductiveType compact(CartanType t) {
  ComplexReductiveType c;
  c.add(t);
  return RealReductiveType().add_compact_complexified(c);
}

RealReductiveType compact_of(const ComplexReductiveType& k) {
  return RealReductiveType().add_compact_complexified(k);
}

RealReductiveType complex_of(const ComplexReductiveType& t) {
  RealReductiveType r;
  for (const auto& f : t.factors()) r.add(RealForm::complex_simple(f));
  return r.add_center_complex(t.center_dim());
}

RealReductiveType s_u_u(Int p1, Int q1, Int p2, Int q2) {
  if (p1 + q1 == 0) return su(p2, q2);
  if (p2 + q2 == 0) return su(p1, q1);
  return su(p1, q1) + su(p2, q2) + center_u1();
}

RealReductiveType s_gl_gl_R(Int a, Int b) {
  if (a == 0) return sl_R(b);
  if (b == 0) return sl_R(a);
  return sl_R(a) + sl_R(b) + center_R();
}

RealReductiveType s_gl_gl_H(Int a, Int b) {
  if (a == 0) return su_star(2 * b);
  if (b == 0) return su_star(2 * a);
  return su_star(2 * a) + su_star(2 * b) + center_R();
}

}  // namespace minorb::rt
