#pragma once

// Programmatic builders for real reductive algebra descriptors.
//
// Every builder accepts degenerate parameters and canonicalizes them the same
// way the name parser does, so descriptors built from classification formulas
// compare equal to descriptors parsed from names:
//
//   rt::so(2, 1)  == rt::sl_R(2)          rt::so(4, 2)   == rt::su(2, 2)
//   rt::so(1, 1)  == rt::center_R()       rt::so_star(4) == rt::sl_R(2) + rt::su(2, 0)
//   rt::so_C(6)   == rt::sl_C(4)          rt::su_star(2) == rt::su(2, 0)
//
// Zero-size inputs build the zero algebra, which disappears under `+`.

#include <minorb/realform.hpp>

namespace minorb {

inline RealReductiveType operator+(RealReductiveType a, const RealReductiveType& b) {
  return a.add(b);
}

namespace rt {

RealReductiveType zero();
RealReductiveType center_R();   // 1-dim split center
RealReductiveType center_u1();  // 1-dim compact center (so_2)
RealReductiveType center_C();   // 1-dim complex center (2 real dims)

RealReductiveType form(const RealForm& f);  // single non-compact factor

RealReductiveType sl_R(Int n);
RealReductiveType sl_C(Int n);
RealReductiveType su(Int p, Int q);              // q = 0 gives compact su_p
RealReductiveType su_star(Int two_n);
RealReductiveType so(Int p, Int q);              // q = 0 gives compact so_p
RealReductiveType so_C(Int n);
RealReductiveType so_star(Int two_n);
RealReductiveType sp_R(Int n);
RealReductiveType sp(Int p, Int q);              // q = 0 gives compact sp_p
RealReductiveType sp_C(Int n);
RealReductiveType exceptional(Family f, int rank, int signature);

RealReductiveType compact(CartanType t);
// Compact real form with the given complexification (factors + center).
RealReductiveType compact_of(const ComplexReductiveType& k);
// The complex algebra t viewed as a real algebra (every factor complex).
RealReductiveType complex_of(const ComplexReductiveType& t);

// Block subalgebras that carry a center exactly when both blocks are nonempty:
// s(u(p1,q1) + u(p2,q2)), s(gl_a(R) + gl_b(R)), and the quaternionic analogue
// su*_{2a} + su*_{2b} + R.
RealReductiveType s_u_u(Int p1, Int q1, Int p2, Int q2);
RealReductiveType s_gl_gl_R(Int a, Int b);
RealReductiveType s_gl_gl_H(Int a, Int b);

}  // namespace rt
}  // namespace minorb
