#include "chered/ratfunc.hpp"

namespace chered {

RatFunc::RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.modulus() != den_.modulus())
        throw DomainMismatch("RatFunc: numerator and denominator over different primes");
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    normalize();
}

RatFunc::RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::one(num_.modulus())) {}

void RatFunc::normalize() {
    uint32_t p = num_.modulus();
    if (num_.is_zero()) {
        den_ = FpPoly::one(p);
        return;
    }
    FpPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    if (den_.lead() != 1) {
        uint32_t s = inv_mod(den_.lead(), p);
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

uint32_t RatFunc::join(const RatFunc& o) const {
    uint32_t p = num_.modulus(), q = o.num_.modulus();
    if (p == 0) return q;
    if (q == 0) return p;
    if (p != q)
        throw DomainMismatch("RatFunc: mixing F_" + std::to_string(p) + "(c) and F_" + std::to_string(q) +
                             "(c)");
    return p;
}

RatFunc RatFunc::of_int(int64_t v) const {
    uint32_t p = modulus();
    if (p == 0) throw InvalidArgument("RatFunc::of_int on element without modulus");
    return RatFunc(FpPoly::constant(p, v));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    uint32_t p = join(o);
    if (p == 0) return RatFunc();
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    if (is_zero()) return *this;
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    uint32_t p = join(o);
    if (p == 0) return RatFunc();
    if (is_zero() || o.is_zero()) return zero(p);
    // cross-cancel before multiplying to limit degree growth
    FpPoly g1 = poly_gcd(num_, o.den_);
    FpPoly g2 = poly_gcd(o.num_, den_);
    FpPoly n1 = g1.degree() > 0 ? num_.divrem(g1).first : num_;
    FpPoly d2 = g1.degree() > 0 ? o.den_.divrem(g1).first : o.den_;
    FpPoly n2 = g2.degree() > 0 ? o.num_.divrem(g2).first : o.num_;
    FpPoly d1 = g2.degree() > 0 ? den_.divrem(g2).first : den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return *this * o.inv();
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (is_zero() && o.is_zero()) return true;
    join(o);
    return num_ == o.num_ && den_ == o.den_;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc binomial_c(uint32_t p, uint32_t m) {
    if (m >= p)
        throw InvalidArgument("binomial_c: m = " + std::to_string(m) + " must be < p = " +
                              std::to_string(p) + " (m! vanishes)");
    FpPoly num = FpPoly::one(p);
    uint32_t fact = 1;
    for (uint32_t t = 0; t < m; ++t) {
        num = num * FpPoly(p, {neg_mod(t % p, p), 1});  // (c - t)
        fact = mul_mod(fact, (t + 1) % p, p);
    }
    return RatFunc(num.scaled(inv_mod(fact, p)));
}

}  // namespace chered
