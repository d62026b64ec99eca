#ifndef CHERED_FIELD_HPP
#define CHERED_FIELD_HPP

#include <cstdint>

#include "chered/errors.hpp"

namespace chered {

template <class K>
K field_pow(const K& base, uint64_t e) {
    K r = base.of_int(1);
    K b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// binom(a, m) = a(a-1)...(a-m+1)/m! for a field element a; requires m < p so
// that m! is a unit
template <class K>
K binom_of(const K& a, uint32_t m, uint32_t p) {
    if (m >= p) throw InvalidArgument("binom_of: m must be < p");
    K num = a.of_int(1);
    int64_t fact = 1;
    for (uint32_t t = 0; t < m; ++t) {
        num = num * (a - a.of_int(int64_t(t)));
        fact = (fact * int64_t(t + 1)) % int64_t(p);
    }
    return num / a.of_int(fact);
}

}  // namespace chered

#endif
