#pragma once

#include "tqmzv/nc_poly.hpp"

namespace tqmzv {

// Homomorphic letter substitution: word u_1...u_l maps to the ordered
// product of the letter images.
NcPoly subst_letters(const NcPoly& p, const NcPoly& img_x, const NcPoly& img_y);

// The interpolation map on H1, with the interpolation weight as an explicit
// scalar s (default t): S(1) = 1, S(z_k w) = z_k S(w) + s * z_k o+ S(w).
NcPoly s_map(const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Inverse of s_map(., s). Default is the fast path s_map(., -s); the
// triangular variant solves v + (S - id)(v) = p by depth induction and is
// the ground truth the fast path is checked against.
NcPoly s_inverse(const NcPoly& p, const CoefPoly& s = CoefPoly::t());
NcPoly s_inverse_triangular(const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Automorphism x -> x, y -> s x + y + h s and its inverse.
NcPoly gamma_map(const NcPoly& p, const CoefPoly& s = CoefPoly::t());
NcPoly gamma_inverse(const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Involution x -> x + y, y -> -y.
NcPoly phi_map(const NcPoly& p);

// phi^t = -Sinv o phi o S on H1; linear but not multiplicative.
NcPoly phi_t_map(const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Derivation with d(x) = xy, d(y) = -xy.
NcPoly d1_derivation(const NcPoly& p);

NcPoly left_mult_x(const NcPoly& p);

}  // namespace tqmzv
