#pragma once

// The pairing function <x,y> used throughout: Cantor's bijection with y-last
// ordering, pair(x,y) = (x+y)(x+y+1)/2 + y. This is the tupling operation of
// the numbering (argument packing, universal dispatch, s-m-n law); it is not
// the pairing used inside program codes (see codec.hpp).

#include "cwb/nat.hpp"

#include <utility>

namespace cwb {

inline Nat pair(const Nat& x, const Nat& y) {
    Nat s = x + y;
    return s * (s + 1) / 2 + y;
}

inline std::pair<Nat, Nat> unpair(const Nat& n) {
    // Largest w with w(w+1)/2 <= n, via exact integer sqrt of 8n+1.
    Nat d = 8 * n + 1;
    Nat r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    Nat w = (r - 1) / 2;
    Nat t = w * (w + 1) / 2;
    Nat y = n - t;
    Nat x = w - y;
    return {x, y};
}

}  // namespace cwb
