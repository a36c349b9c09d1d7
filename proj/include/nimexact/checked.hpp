#pragma once

#include "nimexact/types.hpp"

namespace nimexact {

// Pile arithmetic never wraps silently: overflow raises Errc::Overflow.

inline Pile checked_add(Pile a, Pile b) {
  Pile r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, "unsigned 64-bit overflow in addition");
  return r;
}

inline Pile checked_mul(Pile a, Pile b) {
  Pile r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, "unsigned 64-bit overflow in multiplication");
  return r;
}

inline Pile checked_narrow(unsigned __int128 v, const char* what) {
  if (v > static_cast<unsigned __int128>(~Pile{0}))
    throw Error(Errc::Overflow, std::string("value does not fit in 64 bits: ") + what);
  return static_cast<Pile>(v);
}

// 1 + C(y+1, 2) as a 128-bit value; the binomial can exceed 64 bits
// when y is on the order of a pile size.
inline unsigned __int128 z_of_y(Pile y) {
  unsigned __int128 w = y;
  return 1 + w * (w + 1) / 2;
}

}  // namespace nimexact
