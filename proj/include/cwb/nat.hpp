#pragma once

// Arbitrary-precision naturals. Codes of object programs routinely exceed
// machine words, so every value in the object language is an mpz.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwb {

using Nat = mpz_class;

inline Nat nat(std::uint64_t v) {
    Nat n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return n;
}

inline Nat nat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty numeral");
    for (char c : s)
        if (c < '0' || c > '9') throw std::invalid_argument("bad numeral: " + s);
    return Nat(s, 10);
}

inline std::string to_string(const Nat& n) { return n.get_str(10); }

inline bool fits_u64(const Nat& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Nat& n) {
    if (sgn(n) < 0 || !fits_u64(n)) throw std::overflow_error("natural too large");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

// Number of bits in the binary expansion; bit_length(0) == 0.
inline std::size_t bit_length(const Nat& n) {
    if (sgn(n) == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace cwb
