#pragma once

#include "tqmzv/nc_poly.hpp"

#include <stdexcept>
#include <string>

namespace tqmzv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Small expression language over the word algebra:
//   atoms     rationals, h, t, words ("xyy"), index literals z[2,1]
//   operators + -, binary * (also the middle-dot glyph), unary -
//   maps      S, Sinv, gamma, gammainv, phi, phit, d1 (one argument)
//             rho(n, expr)
//   products  star, starplus, tstar, cast, tcast (two arguments)
// '*' binds tighter than '+'/'-'; there is no exponentiation.
NcPoly parse_expression(const std::string& src);

}  // namespace tqmzv
