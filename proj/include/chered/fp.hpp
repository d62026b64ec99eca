#ifndef CHERED_FP_HPP
#define CHERED_FP_HPP

#include <cstdint>
#include <string>

#include "chered/modarith.hpp"

namespace chered {

// Element of the prime field F_p. The modulus travels with the value; a
// default-constructed element is the zero of an unspecified domain and may
// combine with any operand.
class Fp {
public:
    Fp() = default;
    Fp(uint32_t p, int64_t v) : p_(p), v_(reduce_int_mod(v, p)) {
        if (!is_prime_u32(p)) throw InvalidArgument("Fp: modulus " + std::to_string(p) + " is not prime");
    }

    static Fp zero(uint32_t p) { return Fp(p, 0); }
    static Fp one(uint32_t p) { return Fp(p, 1); }

    uint32_t modulus() const { return p_; }
    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp of_int(int64_t v) const {
        if (p_ == 0) throw InvalidArgument("Fp::of_int on element without modulus");
        return make(p_, reduce_int_mod(v, p_));
    }

    Fp operator+(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0) return Fp();
        return make(p, add_mod(v_, o.v_, p));
    }
    Fp operator-(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0) return Fp();
        return make(p, sub_mod(v_, o.v_, p));
    }
    Fp operator-() const { return p_ == 0 ? Fp() : make(p_, neg_mod(v_, p_)); }
    Fp operator*(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0) return Fp();
        return make(p, mul_mod(v_, o.v_, p));
    }
    Fp inv() const {
        if (is_zero()) throw DivisionByZero("Fp: inverse of zero");
        return make(p_, inv_mod(v_, p_));
    }
    Fp operator/(const Fp& o) const {
        if (o.is_zero()) throw DivisionByZero("Fp: division by zero");
        return *this * o.inv();
    }

    bool operator==(const Fp& o) const {
        if (is_zero() && o.is_zero()) return true;
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw DomainMismatch("Fp: comparing elements of F_" + std::to_string(p_) + " and F_" +
                                 std::to_string(o.p_));
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(uint32_t p, uint32_t v) {
        Fp r;
        r.p_ = p;
        r.v_ = v;
        return r;
    }
    // common modulus of two operands, treating 0 as "unset" (weak zero)
    uint32_t join(const Fp& o) const {
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        if (p_ != o.p_)
            throw DomainMismatch("Fp: mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
        return p_;
    }

    uint32_t p_ = 0;
    uint32_t v_ = 0;
};

}  // namespace chered

#endif
