#include "chered/fppoly.hpp"

#include <algorithm>

namespace chered {

FpPoly::FpPoly(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p_ < 2) throw InvalidArgument("FpPoly: modulus must be >= 2");
    for (auto& v : c_) v %= p_;
    trim();
}

FpPoly FpPoly::constant(uint32_t p, int64_t v) {
    uint32_t r = reduce_int_mod(v, p);
    return r == 0 ? zero(p) : FpPoly(p, {r});
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

static void check_same(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        throw DomainMismatch("FpPoly: moduli differ (" + std::to_string(a.modulus()) + " vs " +
                             std::to_string(b.modulus()) + ")");
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    if (is_zero() && p_ == 0) return o;
    if (o.is_zero() && o.p_ == 0) return *this;
    check_same(*this, o);
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = add_mod(coeff(i), o.coeff(i), p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator-() const {
    if (is_zero()) return *this;
    std::vector<uint32_t> r(c_);
    for (auto& v : r) v = neg_mod(v, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(uint32_t s) const {
    if (is_zero()) return *this;
    s %= p_;
    if (s == 0) return zero(p_);
    std::vector<uint32_t> r(c_);
    for (auto& v : r) v = mul_mod(v, s, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) {
        uint32_t p = p_ ? p_ : o.p_;
        return p ? zero(p) : FpPoly();
    }
    check_same(*this, o);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = uint32_t((uint64_t(r[i + j]) + uint64_t(c_[i]) * o.c_[j]) % p_);
    }
    return FpPoly(p_, std::move(r));
}

bool FpPoly::operator==(const FpPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return p_ == o.p_ && c_ == o.c_;
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("FpPoly: division by zero polynomial");
    if (is_zero()) return {zero(divisor.p_), zero(divisor.p_)};
    check_same(*this, divisor);
    std::vector<uint32_t> rem(c_);
    int dd = divisor.degree();
    int dr = degree();
    if (dr < dd) return {zero(p_), *this};
    std::vector<uint32_t> q(size_t(dr - dd) + 1, 0);
    uint32_t lead_inv = inv_mod(divisor.lead(), p_);
    for (int k = dr; k >= dd; --k) {
        uint32_t top = rem[size_t(k)];
        if (top == 0) continue;
        uint32_t f = mul_mod(top, lead_inv, p_);
        q[size_t(k - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[size_t(k - dd + i)] =
                sub_mod(rem[size_t(k - dd + i)], mul_mod(f, divisor.coeff(size_t(i)), p_), p_);
    }
    return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(lead(), p_));
}

uint32_t FpPoly::eval(uint32_t a) const {
    if (is_zero()) return 0;
    uint32_t acc = 0;
    a %= p_;
    for (size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, a, p_), c_[i], p_);
    return acc;
}

std::string FpPoly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        uint32_t v = c_[i];
        if (v == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(v);
        } else {
            if (v != 1) out += std::to_string(v);
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace chered
