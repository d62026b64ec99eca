#ifndef CHERED_RATFUNC_HPP
#define CHERED_RATFUNC_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "chered/fppoly.hpp"

namespace chered {

// Element of the rational function field F_p(c), kept normalized at all
// times: the denominator is monic and coprime to the numerator, and the zero
// element is 0/1. Equality of normalized representations is therefore
// structural.
class RatFunc {
public:
    RatFunc() = default;  // weak zero, combines with any modulus
    RatFunc(FpPoly num, FpPoly den);
    explicit RatFunc(FpPoly num);

    static RatFunc zero(uint32_t p) { return RatFunc(FpPoly::zero(p)); }
    static RatFunc one(uint32_t p) { return RatFunc(FpPoly::one(p)); }
    static RatFunc gen(uint32_t p) { return RatFunc(FpPoly::gen(p)); }  // the symbol c

    uint32_t modulus() const { return num_.modulus(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one() || is_zero(); }

    RatFunc of_int(int64_t v) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    uint32_t join(const RatFunc& o) const;

    // invariant: den_ monic, gcd(num_, den_) = 1; weak zero has both unset
    FpPoly num_;
    FpPoly den_;
};

// the polynomial binom(c, m) = c(c-1)...(c-m+1)/m! in F_p(c); requires m < p
RatFunc binomial_c(uint32_t p, uint32_t m);

// evaluate r at c = c0 over any coefficient field K (Fp, Fq, or RatFunc
// itself); throws SpecializationPole when the denominator vanishes at c0
template <class K>
K specialize(const RatFunc& r, const K& c0) {
    K den = r.den().template eval_at<K>(c0);
    if (den.is_zero())
        throw SpecializationPole("denominator " + r.den().str() + " vanishes at the requested point");
    return r.num().template eval_at<K>(c0) / den;
}

}  // namespace chered

#endif
