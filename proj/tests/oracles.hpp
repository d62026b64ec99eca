#ifndef CHERED_TESTS_ORACLES_HPP
#define CHERED_TESTS_ORACLES_HPP

// Independent brute-force computations used as test oracles. Everything here
// deliberately avoids the library's algorithmic shortcuts: divided
// differences go through naive long division, binomials through falling
// factorials, series coefficients through direct product expansion.

#include <cstdint>
#include <vector>

#include "chered/fq.hpp"
#include "chered/ratfunc.hpp"

namespace oracle {

// deterministic 64-bit generator (splitmix), independent of std::mt19937
// so fixtures never vary across standard libraries
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// binom(c0, m) over F_p via the integer falling factorial of the lift
inline uint32_t falling_factorial_binom(uint32_t p, uint32_t c0, uint32_t m) {
    using namespace chered;
    uint32_t num = 1;
    for (uint32_t t = 0; t < m; ++t) num = mul_mod(num, sub_mod(c0 % p, t % p, p), p);
    uint32_t fact = 1;
    for (uint32_t t = 2; t <= m; ++t) fact = mul_mod(fact, t % p, p);
    return mul_mod(num, inv_mod(fact, p), p);
}

inline chered::FpPoly random_fppoly(Rng& rng, uint32_t p, int max_deg) {
    std::vector<uint32_t> c(size_t(max_deg) + 1);
    for (auto& v : c) v = uint32_t(rng.next() % p);
    return chered::FpPoly(p, c);
}

inline chered::RatFunc random_ratfunc(Rng& rng, uint32_t p, int max_deg) {
    chered::FpPoly num = random_fppoly(rng, p, max_deg);
    chered::FpPoly den = random_fppoly(rng, p, max_deg);
    while (den.is_zero()) den = random_fppoly(rng, p, max_deg);
    return chered::RatFunc(num, den);
}

inline chered::Fq random_fq(Rng& rng, const chered::FqCtxPtr& ctx) {
    std::vector<uint32_t> c(ctx->k);
    for (auto& v : c) v = uint32_t(rng.next() % ctx->p);
    return chered::Fq(ctx, chered::FpPoly(ctx->p, c));
}

}  // namespace oracle

#endif
