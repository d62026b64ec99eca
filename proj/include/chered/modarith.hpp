#ifndef CHERED_MODARITH_HPP
#define CHERED_MODARITH_HPP

#include <cstdint>

#include "chered/errors.hpp"

namespace chered {

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    return uint32_t(s >= p ? s - p : s);
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t((uint64_t(a) * b) % p);
}

inline uint32_t neg_mod(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t reduce_int_mod(int64_t v, uint32_t p) {
    int64_t r = v % int64_t(p);
    if (r < 0) r += p;
    return uint32_t(r);
}

// extended Euclid; requires gcd(a, p) = 1
inline uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DivisionByZero("not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return uint32_t(t);
}

inline uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    uint32_t b = a % p;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace chered

#endif
