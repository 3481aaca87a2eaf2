#pragma once

#include "tqmzv/nc_poly.hpp"

namespace tqmzv {

// z_i o+ z_j = z_{i+j} + h z_{i+j-1} on single letters.
NcPoly circ_plus(int i, int j);
// Bilinear extension; both arguments must lie in the span of {z_k}.
NcPoly circ_plus(const NcPoly& a, const NcPoly& b);

// The z-module action on H1: z_i o+ 1 = 0, z_i o+ (z_j w) = (z_i o+ z_j) w.
NcPoly circ_action(int i, const NcPoly& w);
NcPoly circ_action(const NcPoly& a, const NcPoly& w);

// Hoffman's harmonic product (join z_i z_j -> z_{i+j}), Q[h,t]-bilinear.
NcPoly harmonic_star(const NcPoly& u, const NcPoly& v);

// Same recursion with join o+ in place of the plain join.
NcPoly harmonic_star_plus(const NcPoly& u, const NcPoly& v);

// The interpolated harmonic product on H1:
//   z_i u * z_j v = z_i(u * z_j v) + z_j(z_i u * v)
//                   + (1-2t)(z_i o+ z_j)(u * v) + (t^2-t) z_i o+ z_j o+ (u * v),
// where the (1-2t)-term concatenates and the (t^2-t)-term acts.
NcPoly t_harmonic(const NcPoly& u, const NcPoly& v);

// z_i u (x) z_j v = z_{i+j}(u *+ v) on H y; rejects constant terms.
NcPoly circledast(const NcPoly& u, const NcPoly& v);

// Conjugate of circledast: Sinv(S(u) (x) S(v)).
NcPoly t_circledast(const NcPoly& u, const NcPoly& v);

}  // namespace tqmzv
